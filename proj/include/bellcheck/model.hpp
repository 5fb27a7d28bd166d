#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bellcheck/causal_site.hpp"
#include "bellcheck/event_algebra.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/rational.hpp"

namespace bellcheck {

/// A named event together with the region it is associated to. The family of
/// generators is the finite presentation of the region-to-algebra assignment:
/// the algebra of a region R is generated by the events of all generators
/// whose home lies inside R.
struct Generator {
  std::string name;
  Event event;
  Region home;
  bool nonseparable = false;  // declared, for the weakened locality check
};

/// The finite family of regions the structural checks quantify over, closed
/// under pairwise union and intersection. Always contains the empty region
/// and the full site.
class RegionUniverse {
 public:
  RegionUniverse(const CausalSite& site, std::vector<Region> declared,
                 std::size_t closure_cap = 4096) {
    add(site.empty_region());
    add(site.full_region());
    for (auto& r : declared) {
      site.check_region(r);
      if (has(r.name)) throw InputError("duplicate region name '" + r.name + "'");
      // Declared regions are always kept, even when their point set
      // coincides with another region, so lookups by name resolve.
      index_.emplace(r.points, regions_.size());
      regions_.push_back(std::move(r));
    }
    declared_count_ = regions_.size();
    // Fixpoint closure under pairwise union and intersection.
    for (std::size_t i = 0; i < regions_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        add(Region{"(" + regions_[j].name + "&" + regions_[i].name + ")",
                   regions_[j].points & regions_[i].points});
        add(Region{"(" + regions_[j].name + "|" + regions_[i].name + ")",
                   regions_[j].points | regions_[i].points});
        if (regions_.size() > closure_cap)
          throw InputError("region universe closure exceeds " + std::to_string(closure_cap) +
                           " regions");
      }
    }
  }

  const std::vector<Region>& regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  std::size_t declared_count() const { return declared_count_; }

  bool contains(const Bits& points) const { return index_.count(points) != 0; }
  const Region& find(const std::string& name) const {
    for (const auto& r : regions_)
      if (r.name == name) return r;
    throw InputError("unknown region '" + name + "'");
  }
  bool has(const std::string& name) const {
    return std::any_of(regions_.begin(), regions_.end(),
                       [&](const Region& r) { return r.name == name; });
  }

 private:
  void add(Region r) {
    if (index_.emplace(r.points, regions_.size()).second) regions_.push_back(std::move(r));
  }

  std::vector<Region> regions_;
  std::map<Bits, std::size_t> index_;
  std::size_t declared_count_ = 0;
};

/// A stochastic process in a discrete spacetime: history space, homed event
/// generators, and an exact rational probability measure. Immutable after
/// construction; all operations on it are pure.
class Model {
 public:
  Model(CausalSite site, std::vector<std::string> history_names, RegionUniverse universe,
        std::vector<Generator> generators, std::vector<Rational> measure,
        std::map<std::string, Slice> slices = {})
      : site_(std::move(site)),
        histories_(std::move(history_names)),
        universe_(std::move(universe)),
        generators_(std::move(generators)),
        measure_(std::move(measure)),
        slices_(std::move(slices)) {
    if (histories_.empty()) throw InputError("history space is empty");
    {
      std::map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < histories_.size(); ++i)
        if (!seen.emplace(histories_[i], i).second)
          throw InputError("duplicate history '" + histories_[i] + "'");
      history_index_ = std::move(seen);
    }
    if (measure_.size() != histories_.size())
      throw InputError("measure must assign a probability to every history");
    Rational total = 0;
    for (std::size_t i = 0; i < measure_.size(); ++i) {
      if (measure_[i] < 0)
        throw InputError("negative probability for history '" + histories_[i] + "'");
      total += measure_[i];
    }
    if (total != 1)
      throw InputError("measure sums to " + bellcheck::to_string(total) + ", expected 1/1");
    for (const auto& g : generators_) {
      if (g.event.size() != histories_.size())
        throw InputError("generator '" + g.name + "' event has wrong history count");
      site_.check_region(g.home);
    }
  }

  const CausalSite& site() const { return site_; }
  const std::vector<std::string>& histories() const { return histories_; }
  std::size_t history_count() const { return histories_.size(); }
  const RegionUniverse& universe() const { return universe_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Rational>& measure() const { return measure_; }
  const std::map<std::string, Slice>& slices() const { return slices_; }

  std::size_t history(const std::string& name) const {
    auto it = history_index_.find(name);
    if (it == history_index_.end()) throw InputError("unknown history '" + name + "'");
    return it->second;
  }

  const Generator& generator(const std::string& name) const {
    for (const auto& g : generators_)
      if (g.name == name) return g;
    throw InputError("unknown generator '" + name + "'");
  }

  const Slice& slice(const std::string& name) const {
    auto it = slices_.find(name);
    if (it == slices_.end()) throw InputError("unknown slice '" + name + "'");
    return it->second;
  }

  Event omega() const {
    Event e(history_count());
    e.set();
    return e;
  }
  Event empty_event() const { return Event(history_count()); }

  /// A readable label for an event: a generator name when it matches one,
  /// otherwise the member histories.
  std::string event_label(const Event& e) const {
    if (e.all()) return "Omega";
    if (e.none()) return "(none)";
    for (const auto& g : generators_) {
      if (e == g.event) return g.name;
      if (e == ~g.event) return "~" + g.name;
    }
    std::string out = "{";
    bool first = true;
    for (auto h = e.find_first(); h != Bits::npos; h = e.find_next(h)) {
      if (!first) out += ",";
      out += histories_[h];
      first = false;
    }
    return out + "}";
  }

 private:
  CausalSite site_;
  std::vector<std::string> histories_;
  std::map<std::string, std::size_t> history_index_;
  RegionUniverse universe_;
  std::vector<Generator> generators_;
  std::vector<Rational> measure_;
  std::map<std::string, Slice> slices_;
};

/// Sigma(R): the algebra generated by the events of generators homed inside R.
inline Algebra region_algebra(const Model& m, const Region& r) {
  m.site().check_region(r);
  std::vector<Event> events;
  for (const auto& g : m.generators())
    if (g.home.points.is_subset_of(r.points)) events.push_back(g.event);
  return generated_algebra(m.history_count(), events);
}

inline Rational probability(const Model& m, const Event& e) {
  if (e.size() != m.history_count()) throw InputError("event has wrong history count");
  Rational total = 0;
  for (auto h = e.find_first(); h != Bits::npos; h = e.find_next(h)) total += m.measure()[h];
  return total;
}

/// mu(e | given) = mu(e & given) / mu(given). Conditioning on a null event is
/// an explicit error, never a silent zero.
inline Rational conditional(const Model& m, const Event& e, const Event& given) {
  const Rational denom = probability(m, given);
  if (denom == 0)
    throw NullConditional("conditional on null event " + m.event_label(given));
  return probability(m, e & given) / denom;
}

/// The full specifications of a region: the atoms of its algebra. Each one
/// decides every event of the region (it is inside the event or inside its
/// complement).
inline std::vector<Event> full_specifications(const Model& m, const Region& r) {
  return region_algebra(m, r).atoms();
}

}  // namespace bellcheck
