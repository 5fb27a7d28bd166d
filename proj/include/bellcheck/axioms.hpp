#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bellcheck/event_algebra.hpp"
#include "bellcheck/model.hpp"
#include "bellcheck/report.hpp"

namespace bellcheck {

namespace detail {

/// First atom of `fine` strictly inside an atom of `coarse`; the canonical
/// witness that `fine` has events `coarse` lacks. Assumes `coarse` is a
/// subalgebra of `fine`.
inline Event refinement_witness(const Algebra& coarse, const Algebra& fine) {
  for (const auto& atom : fine.atoms()) {
    const auto h = atom.find_first();
    if (atom != coarse.atom_of(h)) return atom;
  }
  return Event();
}

}  // namespace detail

/// Checks that the generator presentation actually satisfies the
/// localised-events conditions over the whole region universe:
///
///   intersection rule   Sigma(A) & Sigma(B) == Sigma(A & B), all pairs and
///                       (as a spot check on larger collections) all triples;
///   trivial empty rule  Sigma(empty) == {0, Omega};
///
/// plus their derived consequences, reported separately so a primary failure
/// is distinguishable: monotonicity (A inside B implies Sigma(A) inside
/// Sigma(B)) and the union bound (events of the parts all live in the
/// algebra of the union).
inline CheckReport check_localised_axioms(const Model& m) {
  CheckReport rep;
  rep.condition = "localised-events";
  const auto& regions = m.universe().regions();
  const std::size_t n = regions.size();

  std::vector<Algebra> alg;
  alg.reserve(n);
  for (const auto& r : regions) alg.push_back(region_algebra(m, r));

  auto region_index = [&](const Bits& points) {
    for (std::size_t i = 0; i < n; ++i)
      if (regions[i].points == points) return i;
    throw InputError("universe is not closed");  // unreachable for RegionUniverse
  };

  // Trivial algebra on the empty region.
  {
    const std::size_t e = region_index(Bits(m.site().size()));
    rep.checked++;
    if (!alg[e].is_trivial())
      rep.add_witness({"empty-region", "-", "Sigma(0) nontrivial",
                       Rational(alg[e].atom_count()), Rational(1)});
  }

  std::size_t primary_fail = 0, derived_fail = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Algebra meet = algebra_meet(alg[i], alg[j]);
      const Algebra& cut = alg[region_index(regions[i].points & regions[j].points)];
      rep.checked++;
      if (meet != cut) {
        primary_fail++;
        // Sigma(A&B) is a subalgebra of the meet by construction, so the
        // meet is strictly finer; witness one of its extra events.
        rep.add_witness({"intersection(" + regions[i].name + "," + regions[j].name + ")",
                         "-", m.event_label(detail::refinement_witness(cut, meet)),
                         Rational(meet.atom_count()), Rational(cut.atom_count())});
      }
      // Monotonicity, derived.
      if (regions[i].points.is_subset_of(regions[j].points)) {
        rep.checked++;
        if (!alg[i].subalgebra_of(alg[j])) {
          derived_fail++;
          rep.add_witness({"monotone(" + regions[i].name + "," + regions[j].name + ")", "-",
                           "Sigma not monotone", Rational(0), Rational(1)});
        }
      }
      // Union bound, derived: the join embeds in Sigma(A|B).
      const Algebra join = algebra_join(alg[i], alg[j]);
      const Algebra& cup = alg[region_index(regions[i].points | regions[j].points)];
      rep.checked++;
      if (!join.subalgebra_of(cup)) {
        derived_fail++;
        rep.add_witness({"union-bound(" + regions[i].name + "," + regions[j].name + ")", "-",
                         "events of parts missing from union algebra",
                         Rational(join.atom_count()), Rational(cup.atom_count())});
      }
    }
  }
  // Triples, intersection rule only.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Algebra meet = algebra_meet(algebra_meet(alg[i], alg[j]), alg[k]);
        const Algebra& cut =
            alg[region_index(regions[i].points & regions[j].points & regions[k].points)];
        rep.checked++;
        if (meet != cut) {
          primary_fail++;
          rep.add_witness({"intersection(" + regions[i].name + "," + regions[j].name + "," +
                               regions[k].name + ")",
                           "-", m.event_label(detail::refinement_witness(cut, meet)),
                           Rational(meet.atom_count()), Rational(cut.atom_count())});
        }
      }

  if (primary_fail > 0)
    rep.notes.push_back("primary intersection/empty-region violations: " +
                        std::to_string(primary_fail));
  if (derived_fail > 0)
    rep.notes.push_back("derived monotonicity/union-bound violations: " +
                        std::to_string(derived_fail));
  rep.finalize();
  return rep;
}

/// Separability over a family of pairwise-disjoint parts: the algebra of the
/// union must be generated by the algebras of the parts. On failure the
/// witness is a non-separable event of the union region.
inline CheckReport check_separability(const Model& m, const std::vector<Region>& parts) {
  CheckReport rep;
  rep.condition = "separability";
  if (parts.empty()) throw InputError("separability needs at least one part");
  Bits all(m.site().size());
  std::string parts_label;
  for (const auto& p : parts) {
    m.site().check_region(p);
    if (all.intersects(p.points))
      throw InputError("separability parts overlap at region '" + p.name + "'");
    all |= p.points;
    parts_label += (parts_label.empty() ? "" : ",") + p.name;
  }

  Algebra generated = Algebra::trivial(m.history_count());
  for (const auto& p : parts) generated = algebra_join(generated, region_algebra(m, p));
  const Algebra whole = region_algebra(m, Region{"union", all});

  rep.checked++;
  if (generated != whole) {
    if (generated.subalgebra_of(whole)) {
      rep.add_witness({"separability(" + parts_label + ")", "-",
                       m.event_label(detail::refinement_witness(generated, whole)),
                       Rational(whole.atom_count()), Rational(generated.atom_count())});
    } else {
      // Only possible when the localised-events conditions already fail.
      rep.add_witness({"separability(" + parts_label + ")", "-",
                       "part algebras not contained in union algebra",
                       Rational(whole.atom_count()), Rational(generated.atom_count())});
      rep.notes.push_back("union bound violated; check localised-events axioms");
    }
  }
  rep.finalize();
  return rep;
}

/// Separability quantified the way the axioms are: over every disjoint pair
/// of nonempty universe regions (and triples as a spot check).
inline CheckReport check_separability_universe(const Model& m) {
  CheckReport rep;
  rep.condition = "separability";
  const auto& regions = m.universe().regions();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].empty()) continue;
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      if (regions[j].empty() || regions[i].points.intersects(regions[j].points)) continue;
      CheckReport pair = check_separability(m, {regions[i], regions[j]});
      rep.checked += pair.checked;
      for (auto& w : pair.witnesses) rep.add_witness(std::move(w));
      for (std::size_t k = j + 1; k < regions.size(); ++k) {
        if (regions[k].empty()) continue;
        if (regions[k].points.intersects(regions[i].points | regions[j].points)) continue;
        CheckReport triple = check_separability(m, {regions[i], regions[j], regions[k]});
        rep.checked += triple.checked;
        for (auto& w : triple.witnesses) rep.add_witness(std::move(w));
      }
    }
  }
  rep.finalize();
  return rep;
}

/// The smallest region an event is associated to: the intersection of all
/// universe regions whose algebra contains it. When the localised-events
/// conditions hold, that region's algebra contains the event too.
inline Region intrinsic_region(const Model& m, const Event& e) {
  if (!region_algebra(m, m.site().full_region()).contains(e))
    throw InputError("event " + m.event_label(e) + " is not in the global algebra");
  Bits pts(m.site().size());
  pts.set();
  for (const auto& r : m.universe().regions())
    if (region_algebra(m, r).contains(e)) pts &= r.points;
  return Region{"intrinsic(" + m.event_label(e) + ")", pts};
}

}  // namespace bellcheck
