#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bellcheck/bits.hpp"
#include "bellcheck/errors.hpp"

namespace bellcheck {

/// A named set of spacetime points, stored as a mask over a site's points.
struct Region {
  std::string name;
  Bits points;

  bool empty() const { return points.none(); }
};

/// Finite set of spacetime points with a causal partial order x <= y
/// ("x causally precedes y"). The order is the reflexive-transitive closure
/// of the pairs given at construction; antisymmetry is checked and rejected
/// if violated, which is the finite stand-in for weak causality.
class CausalSite {
 public:
  CausalSite(std::vector<std::string> point_names,
             const std::vector<std::pair<std::string, std::string>>& order_pairs)
      : names_(std::move(point_names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw InputError("duplicate point '" + names_[i] + "'");
    }
    const std::size_t n = names_.size();
    past_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) past_[i].set(i);
    for (const auto& [lo, hi] : order_pairs) past_[point(hi)].set(point(lo));

    // Transitive closure: past(i) absorbs past(j) for every j already below i.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        Bits acc = past_[i];
        for (auto j = past_[i].find_first(); j != Bits::npos; j = past_[i].find_next(j))
          acc |= past_[j];
        if (acc != past_[i]) {
          past_[i] = std::move(acc);
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (past_[i].test(j) && past_[j].test(i))
          throw InputError("causal cycle through '" + names_[i] + "' and '" + names_[j] + "'");

    future_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (past_[j].test(i)) future_[i].set(j);
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& point_names() const { return names_; }

  std::size_t point(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown point '" + name + "'");
    return it->second;
  }
  bool has_point(const std::string& name) const { return index_.count(name) != 0; }

  bool precedes(std::size_t a, std::size_t b) const { return past_[b].test(a); }
  bool comparable(std::size_t a, std::size_t b) const {
    return past_[b].test(a) || past_[a].test(b);
  }

  Region make_region(const std::string& name, const std::vector<std::string>& pts) const {
    Region r{name, Bits(size())};
    for (const auto& p : pts) r.points.set(point(p));
    return r;
  }
  Region full_region() const {
    Region r{"(all)", Bits(size())};
    r.points.set();
    return r;
  }
  Region empty_region() const { return Region{"(empty)", Bits(size())}; }

  void check_region(const Region& r) const {
    if (r.points.size() != size())
      throw InputError("region '" + r.name + "' does not belong to this site");
  }

  /// Inclusive causal past J-(r): every point preceding some point of r,
  /// r itself included.
  Bits causal_past(const Bits& region_points) const {
    Bits out(size());
    for (auto i = region_points.find_first(); i != Bits::npos; i = region_points.find_next(i))
      out |= past_[i];
    return out;
  }
  /// Order dual of causal_past.
  Bits causal_future(const Bits& region_points) const {
    Bits out(size());
    for (auto i = region_points.find_first(); i != Bits::npos; i = region_points.find_next(i))
      out |= future_[i];
    return out;
  }

  bool is_antichain(const Bits& pts) const {
    for (auto i = pts.find_first(); i != Bits::npos; i = pts.find_next(i))
      for (auto j = pts.find_next(i); j != Bits::npos; j = pts.find_next(j))
        if (comparable(i, j)) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Bits> past_;    // past_[i] = { j : j <= i }
  std::vector<Bits> future_;  // future_[i] = { j : i <= j }
};

inline Region causal_past(const CausalSite& site, const Region& r) {
  site.check_region(r);
  return Region{"J-(" + r.name + ")", site.causal_past(r.points)};
}

inline Region causal_future(const CausalSite& site, const Region& r) {
  site.check_region(r);
  return Region{"J+(" + r.name + ")", site.causal_future(r.points)};
}

/// True iff no point of a is causally comparable to any point of b.
/// Undefined (input error) for empty regions.
inline bool spacelike(const CausalSite& site, const Region& a, const Region& b) {
  site.check_region(a);
  site.check_region(b);
  if (a.empty() || b.empty())
    throw InputError("spacelike relation undefined for an empty region");
  if (site.causal_past(a.points).intersects(b.points)) return false;
  if (site.causal_future(a.points).intersects(b.points)) return false;
  return true;
}

/// A region between two spacelike hypersurfaces: the order-convex set of
/// points above some lower point and below some upper point. Both bounding
/// sets must be antichains.
struct Slice {
  std::string name;
  Bits lower;
  Bits upper;
  Bits points;  // derived

  static Slice between(const CausalSite& site, std::string name,
                       const Bits& lower, const Bits& upper) {
    if (lower.size() != site.size() || upper.size() != site.size())
      throw InputError("slice bounds do not belong to this site");
    if (!site.is_antichain(lower))
      throw InputError("slice '" + name + "': lower bound is not an antichain");
    if (!site.is_antichain(upper))
      throw InputError("slice '" + name + "': upper bound is not an antichain");
    Slice s{std::move(name), lower, upper, Bits(site.size())};
    s.points = site.causal_future(lower) & site.causal_past(upper);
    return s;
  }
};

struct PastSelector {
  enum class Kind { MutualPast, JointPast, PastOfA, PastOfB, SliceBlock, SrlaBlock, Custom };

  Kind kind = Kind::JointPast;
  std::optional<Slice> slice;    // SliceBlock / SrlaBlock
  std::optional<Region> region;  // Custom

  static PastSelector mutual_past() { return {Kind::MutualPast, {}, {}}; }
  static PastSelector joint_past() { return {Kind::JointPast, {}, {}}; }
  static PastSelector past_of_a() { return {Kind::PastOfA, {}, {}}; }
  static PastSelector past_of_b() { return {Kind::PastOfB, {}, {}}; }
  static PastSelector slice_block(Slice s) { return {Kind::SliceBlock, std::move(s), {}}; }
  static PastSelector srla_block(Slice s) { return {Kind::SrlaBlock, std::move(s), {}}; }
  static PastSelector custom(Region r) { return {Kind::Custom, {}, std::move(r)}; }

  std::string describe() const {
    switch (kind) {
      case Kind::MutualPast: return "mutual";
      case Kind::JointPast: return "joint";
      case Kind::PastOfA: return "past-a";
      case Kind::PastOfB: return "past-b";
      case Kind::SliceBlock: return "slice:" + slice->name;
      case Kind::SrlaBlock: return "srla:" + slice->name;
      case Kind::Custom: return "custom:" + region->name;
    }
    return "?";
  }
};

/// The interposed screening region for a timelike pair: the given slice cut
/// down to J+(x) & J-(y), with x and y themselves removed. Requires x to lie
/// entirely in the causal past of y.
inline Region srla_region(const CausalSite& site, const Region& x, const Region& y,
                          const Slice& s) {
  site.check_region(x);
  site.check_region(y);
  if (x.points.intersects(y.points))
    throw InputError("regions '" + x.name + "' and '" + y.name + "' overlap");
  const Bits past_of_y = site.causal_past(y.points);
  for (auto i = x.points.find_first(); i != Bits::npos; i = x.points.find_next(i))
    if (!past_of_y.test(i))
      throw InputError("point '" + site.point_names()[i] + "' of '" + x.name +
                       "' does not precede '" + y.name + "'");
  Bits pts = s.points & site.causal_future(x.points) & past_of_y;
  pts -= x.points;
  pts -= y.points;
  return Region{"D(" + x.name + "," + y.name + ";" + s.name + ")", pts};
}

/// Resolves the past region a locality condition conditions on. The wing
/// regions themselves are always removed. All selectors except Custom and
/// SrlaBlock require spacelike wings.
inline Region resolve_past(const CausalSite& site, const Region& a, const Region& b,
                           const PastSelector& sel) {
  site.check_region(a);
  site.check_region(b);
  using K = PastSelector::Kind;
  if (sel.kind != K::Custom && sel.kind != K::SrlaBlock && !spacelike(site, a, b))
    throw InputError("regions '" + a.name + "' and '" + b.name + "' are not spacelike");

  const Bits wings = a.points | b.points;
  Bits pts(site.size());
  std::string name;
  switch (sel.kind) {
    case K::MutualPast:
      pts = site.causal_past(a.points) & site.causal_past(b.points);
      name = "mutual-past";
      break;
    case K::JointPast:
      pts = site.causal_past(a.points) | site.causal_past(b.points);
      name = "joint-past";
      break;
    case K::PastOfA:
      pts = site.causal_past(a.points);
      name = "past-of-" + a.name;
      break;
    case K::PastOfB:
      pts = site.causal_past(b.points);
      name = "past-of-" + b.name;
      break;
    case K::SliceBlock:
      pts = sel.slice->points & (site.causal_past(a.points) | site.causal_past(b.points));
      name = "slice-block:" + sel.slice->name;
      break;
    case K::SrlaBlock:
      return srla_region(site, a, b, *sel.slice);
    case K::Custom:
      site.check_region(*sel.region);
      pts = sel.region->points;
      name = sel.region->name;
      break;
  }
  pts -= wings;
  return Region{std::move(name), std::move(pts)};
}

}  // namespace bellcheck
