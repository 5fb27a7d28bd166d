#pragma once

// Umbrella header.

#include "bellcheck/axioms.hpp"
#include "bellcheck/behavior.hpp"
#include "bellcheck/bits.hpp"
#include "bellcheck/causal_site.hpp"
#include "bellcheck/conjecture.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/event_algebra.hpp"
#include "bellcheck/gallery.hpp"
#include "bellcheck/locality.hpp"
#include "bellcheck/model.hpp"
#include "bellcheck/model_io.hpp"
#include "bellcheck/polytope.hpp"
#include "bellcheck/rational.hpp"
#include "bellcheck/report.hpp"
#include "bellcheck/report_io.hpp"
#include "bellcheck/scenario.hpp"
#include "bellcheck/version.hpp"
