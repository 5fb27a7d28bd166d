#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bellcheck/axioms.hpp"
#include "bellcheck/behavior.hpp"
#include "bellcheck/locality.hpp"
#include "bellcheck/model.hpp"
#include "bellcheck/report.hpp"
#include "bellcheck/scenario.hpp"

namespace bellcheck {

/// A gallery model plus the bindings its checks need. Entries without an
/// EPRB scenario carry explicit region pairs instead.
struct GalleryModel {
  Model model;
  std::optional<EPRBScenario> scenario;
  std::optional<std::pair<Region, Region>> region_pair;  // wings for bell/nouvelle
  std::optional<std::pair<Region, Region>> srla_pair;    // x entirely past y
};

namespace detail {

// Histories as assignments of k binary coordinates; history h has coordinate
// c equal to bit c of h. Padding coordinates let physically identified
// quantities (a cause and the outcome that copies it) stay distinct subsets
// of the history space, with the identification enforced by null measure.
inline int bit(std::size_t h, int c) { return static_cast<int>((h >> c) & 1u); }

inline std::vector<std::string> tuple_histories(int k) {
  std::vector<std::string> out;
  out.reserve(std::size_t(1) << k);
  for (std::size_t h = 0; h < (std::size_t(1) << k); ++h) {
    std::string name = "h";
    for (int c = 0; c < k; ++c) name += char('0' + bit(h, c));
    out.push_back(name);
  }
  return out;
}

inline Event event_where(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  Event e(n);
  for (std::size_t h = 0; h < n; ++h)
    if (pred(h)) e.set(h);
  return e;
}

inline std::vector<Rational> uniform_on(std::size_t n,
                                        const std::function<bool(std::size_t)>& support) {
  std::size_t count = 0;
  for (std::size_t h = 0; h < n; ++h)
    if (support(h)) count++;
  if (count == 0) throw InputError("empty support");
  std::vector<Rational> mu(n, Rational(0));
  for (std::size_t h = 0; h < n; ++h)
    if (support(h)) mu[h] = Rational(1, count);
  return mu;
}

}  // namespace detail

/// Minimal non-separable process: one binary event homed on a region made of
/// two disjoint halves, trivial algebras everywhere else. Satisfies the
/// localised-events conditions and violates separability, witnessed by the
/// event itself.
inline GalleryModel nonseparable_minimal() {
  CausalSite site({"x1", "x2", "m"}, {});
  std::vector<Region> declared = {
      site.make_region("X1", {"x1"}), site.make_region("X2", {"x2"}),
      site.make_region("XX", {"x1", "x2"}), site.make_region("Y", {"m"})};
  RegionUniverse universe(site, declared);
  const std::size_t n = 2;
  std::vector<Generator> gens = {
      {"X", detail::event_where(n, [](std::size_t h) { return h == 0; }),
       universe.find("XX"), true}};
  Model m(std::move(site), {"h0", "h1"}, std::move(universe), std::move(gens),
          {Rational(1, 2), Rational(1, 2)});
  return {std::move(m), std::nullopt, std::nullopt, std::nullopt};
}

/// Common-cause EPRB model: a past binary cause, free settings, outcomes
/// that copy the cause in both wings. Screens perfectly, CHSH = 2.
inline GalleryModel deterministic_common_cause() {
  // Coordinates: 0=lam 1=as 2=bs 3=ao 4=bo. Support: ao = bo = lam.
  const int K = 5;
  const std::size_t n = std::size_t(1) << K;
  using detail::bit;
  CausalSite site({"c", "a", "b"}, {{"c", "a"}, {"c", "b"}});
  std::vector<Region> declared = {site.make_region("C", {"c"}), site.make_region("A", {"a"}),
                                  site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"cause", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("C")},
      {"set_a", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("A")},
      {"set_b", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("B")},
      {"out_a", ev([](std::size_t h) { return bit(h, 3) == 1; }), universe.find("A")},
      {"out_b", ev([](std::size_t h) { return bit(h, 4) == 1; }), universe.find("B")}};
  auto support = [](std::size_t h) { return bit(h, 3) == bit(h, 0) && bit(h, 4) == bit(h, 0); };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("set_a").event;
  scen.setting_b = m.generator("set_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "set_a";
  scen.setting_b_name = "set_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Extremal no-signalling correlations over a trivial past: outcomes agree
/// unless both settings are 1. CHSH = 4, no local model.
inline GalleryModel pr_box() {
  // Coordinates: 0=as 1=bs 2=r. Outcome A is r; outcome B is r xor (as & bs).
  const int K = 3;
  const std::size_t n = 8;
  using detail::bit;
  CausalSite site({"a", "b"}, {});
  std::vector<Region> declared = {site.make_region("A", {"a"}), site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"set_a", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("A")},
      {"set_b", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("B")},
      {"out_a", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("A")},
      {"out_b",
       ev([](std::size_t h) { return (bit(h, 2) ^ (bit(h, 0) & bit(h, 1))) == 1; }),
       universe.find("B")}};
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, [](std::size_t) { return true; }));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("set_a").event;
  scen.setting_b = m.generator("set_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "set_a";
  scen.setting_b_name = "set_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Rational approximation of the singlet correlations at the angles that
/// maximise CHSH, within 1/cap per entry.
inline SingletTable tsirelson_approx(const Integer& cap) {
  const double pi = std::acos(-1.0);
  return singlet_table(0.0, pi / 2, pi / 4, -pi / 4, cap);
}

/// Deterministic outcomes given the hidden state and both settings; the
/// distant setting enters the outcome function, but uniform hidden bits hide
/// it from every operational marginal.
inline GalleryModel pilot_wave_like() {
  // Coordinates: 0=l1 1=l2 2=as 3=bs 4=ao 5=bo.
  // Support: ao = l1 xor (as & bs), bo = l1 xor (l2 & bs); A's outcome reads
  // the distant setting.
  const int K = 6;
  const std::size_t n = 64;
  using detail::bit;
  CausalSite site({"c", "a", "b"}, {{"c", "a"}, {"c", "b"}});
  std::vector<Region> declared = {site.make_region("C", {"c"}), site.make_region("A", {"a"}),
                                  site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"lam1", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("C")},
      {"lam2", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("C")},
      {"set_a", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("A")},
      {"set_b", ev([](std::size_t h) { return bit(h, 3) == 1; }), universe.find("B")},
      {"out_a", ev([](std::size_t h) { return bit(h, 4) == 1; }), universe.find("A")},
      {"out_b", ev([](std::size_t h) { return bit(h, 5) == 1; }), universe.find("B")}};
  auto support = [](std::size_t h) {
    return bit(h, 4) == (bit(h, 0) ^ (bit(h, 2) & bit(h, 3))) &&
           bit(h, 5) == (bit(h, 0) ^ (bit(h, 1) & bit(h, 3)));
  };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("set_a").event;
  scen.setting_b = m.generator("set_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "set_a";
  scen.setting_b_name = "set_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Settings copied from a past plan: every screening works (everything is
/// decided in the past) but the settings are anything but free, and the
/// plan can steer the table to CHSH = 4.
inline GalleryModel superdeterministic() {
  // Coordinates: 0=pa 1=pb 2=r 3=as 4=bs 5=ao 6=bo.
  // Support: as=pa, bs=pb, ao=r, bo=r xor (as & bs).
  const int K = 7;
  const std::size_t n = 128;
  using detail::bit;
  CausalSite site({"c", "a", "b"}, {{"c", "a"}, {"c", "b"}});
  std::vector<Region> declared = {site.make_region("C", {"c"}), site.make_region("A", {"a"}),
                                  site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"plan_a", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("C")},
      {"plan_b", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("C")},
      {"seed", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("C")},
      {"set_a", ev([](std::size_t h) { return bit(h, 3) == 1; }), universe.find("A")},
      {"set_b", ev([](std::size_t h) { return bit(h, 4) == 1; }), universe.find("B")},
      {"out_a", ev([](std::size_t h) { return bit(h, 5) == 1; }), universe.find("A")},
      {"out_b", ev([](std::size_t h) { return bit(h, 6) == 1; }), universe.find("B")}};
  auto support = [](std::size_t h) {
    return bit(h, 3) == bit(h, 0) && bit(h, 4) == bit(h, 1) && bit(h, 5) == bit(h, 2) &&
           bit(h, 6) == (bit(h, 2) ^ (bit(h, 3) & bit(h, 4)));
  };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("set_a").event;
  scen.setting_b = m.generator("set_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "set_a";
  scen.setting_b_name = "set_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Timelike "wings": a random outcome in A fires a ball through an
/// interposed point-homed mechanism that fixes B's outcome. Separable
/// through and through, yet the wing-state factorisation fails.
inline GalleryModel backyard_pingpong() {
  // Coordinates: 0=x (A outcome) 1=mflag (ball in flight) 2=bout.
  // Support: mflag = x, bout = mflag.
  const int K = 3;
  const std::size_t n = 8;
  using detail::bit;
  CausalSite site({"pa", "pb", "a", "m", "b"},
                  {{"pa", "a"}, {"a", "m"}, {"m", "b"}, {"pb", "b"}});
  std::vector<Region> declared = {
      site.make_region("PA", {"pa"}), site.make_region("PB", {"pb"}),
      site.make_region("P", {"pa", "pb"}), site.make_region("A", {"a"}),
      site.make_region("MID", {"m"}), site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  auto omega = [&] { return detail::event_where(n, [](std::size_t) { return true; }); };
  std::vector<Generator> gens = {
      {"out_a", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("A")},
      {"mech", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("MID")},
      {"out_b", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("B")},
      {"run_a", omega(), universe.find("A")},
      {"run_b", omega(), universe.find("B")}};
  auto support = [](std::size_t h) { return bit(h, 1) == bit(h, 0) && bit(h, 2) == bit(h, 1); };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("run_a").event;
  scen.setting_b = m.generator("run_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "run_a";
  scen.setting_b_name = "run_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::custom(m.universe().find("P"));
  scen.past_partition = {m.universe().find("PA"), m.universe().find("PB")};
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Perfectly correlated outcomes above a past with no non-trivial events at
/// all. Nothing to condition on, nothing non-separable anywhere.
inline GalleryModel maudlin_bare_correlation() {
  // Coordinates: 0=xa 1=xb. Support: xa = xb.
  const int K = 2;
  const std::size_t n = 4;
  using detail::bit;
  CausalSite site({"pa", "pb", "a", "b"}, {{"pa", "a"}, {"pb", "b"}});
  std::vector<Region> declared = {
      site.make_region("PA", {"pa"}), site.make_region("PB", {"pb"}),
      site.make_region("A", {"a"}), site.make_region("B", {"b"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  auto omega = [&] { return detail::event_where(n, [](std::size_t) { return true; }); };
  std::vector<Generator> gens = {
      {"out_a", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("A")},
      {"out_b", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("B")},
      {"run_a", omega(), universe.find("A")},
      {"run_b", omega(), universe.find("B")}};
  auto support = [](std::size_t h) { return bit(h, 0) == bit(h, 1); };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("run_a").event;
  scen.setting_b = m.generator("run_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "run_a";
  scen.setting_b_name = "run_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  scen.past_partition = {m.universe().find("PA"), m.universe().find("PB")};
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// The reductio for conditioning on non-separable events with regions only
/// partly in the past: a carrier homed on a region straddling A's future and
/// B's past copies A's setting into B's outcome. The weakened condition is
/// satisfied while the model signals.
inline GalleryModel weakened_locality_signalling() {
  // Coordinates: 0=s (A setting) 1=e (carrier) 2=o (B outcome) 3=t (B
  // setting) 4=u (A outcome). Support: e = s, o = e.
  const int K = 5;
  const std::size_t n = 32;
  using detail::bit;
  CausalSite site({"a", "b", "c1", "c2"}, {{"a", "c1"}, {"c2", "b"}});
  std::vector<Region> declared = {
      site.make_region("A", {"a"}), site.make_region("B", {"b"}),
      site.make_region("C", {"c1", "c2"}), site.make_region("C1", {"c1"}),
      site.make_region("C2", {"c2"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"set_a", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("A")},
      {"link", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("C"), true},
      {"out_b", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("B")},
      {"set_b", ev([](std::size_t h) { return bit(h, 3) == 1; }), universe.find("B")},
      {"out_a", ev([](std::size_t h) { return bit(h, 4) == 1; }), universe.find("A")}};
  auto support = [](std::size_t h) { return bit(h, 1) == bit(h, 0) && bit(h, 2) == bit(h, 1); };
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support));
  EPRBScenario scen;
  scen.wing_a = m.universe().find("A");
  scen.wing_b = m.universe().find("B");
  scen.setting_a = m.generator("set_a").event;
  scen.setting_b = m.generator("set_b").event;
  scen.outcome_a = m.generator("out_a").event;
  scen.outcome_b = m.generator("out_b").event;
  scen.setting_a_name = "set_a";
  scen.setting_b_name = "set_b";
  scen.outcome_a_name = "out_a";
  scen.outcome_b_name = "out_b";
  scen.past = PastSelector::joint_past();
  return {std::move(m), std::move(scen), std::nullopt, std::nullopt};
}

/// Conditioning on the full joint past screens the wing correlation, but a
/// non-separable carrier spanning the middle slice skips it: the slice-block
/// condition fails, and so does slice screening for the spanning pair.
inline GalleryModel simpsons_slice() {
  // Coordinates: 0=l (deep cause) 1=c (spanning carrier) 2=x (A outcome)
  // 3=y (B outcome). Support: c = l, x = l, y = l.
  const int K = 4;
  const std::size_t n = 16;
  using detail::bit;
  CausalSite site({"d", "m1", "m2", "a", "b"},
                  {{"d", "m1"}, {"d", "m2"}, {"m1", "a"}, {"m2", "b"}});
  std::vector<Region> declared = {
      site.make_region("D", {"d"}), site.make_region("A", {"a"}),
      site.make_region("B", {"b"}), site.make_region("SPAN", {"d", "a"}),
      site.make_region("MID", {"m1", "m2"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"cause", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("D")},
      {"carrier", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("SPAN"),
       true},
      {"out_a", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("A")},
      {"out_b", ev([](std::size_t h) { return bit(h, 3) == 1; }), universe.find("B")}};
  auto support = [](std::size_t h) {
    return bit(h, 1) == bit(h, 0) && bit(h, 2) == bit(h, 0) && bit(h, 3) == bit(h, 0);
  };
  std::map<std::string, Slice> slices;
  {
    Bits mid(site.size());
    mid.set(site.point("m1"));
    mid.set(site.point("m2"));
    slices.emplace("S", Slice::between(site, "S", mid, mid));
  }
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support), std::move(slices));
  auto pair = std::make_pair(m.universe().find("A"), m.universe().find("B"));
  auto span_pair = std::make_pair(m.universe().find("D"), m.universe().find("A"));
  return {std::move(m), std::nullopt, std::move(pair), std::move(span_pair)};
}

/// Layered chain where each layer copies the previous one: the interposed
/// slice screens the top from the bottom.
inline GalleryModel markov_chain() {
  // Coordinates: 0=l 1=mm 2=tt. Support: mm = l, tt = mm.
  const int K = 3;
  const std::size_t n = 8;
  using detail::bit;
  CausalSite site({"d", "m", "t"}, {{"d", "m"}, {"m", "t"}});
  std::vector<Region> declared = {site.make_region("D", {"d"}), site.make_region("M", {"m"}),
                                  site.make_region("T", {"t"})};
  RegionUniverse universe(site, declared);
  auto ev = [&](std::function<bool(std::size_t)> p) { return detail::event_where(n, p); };
  std::vector<Generator> gens = {
      {"bottom", ev([](std::size_t h) { return bit(h, 0) == 1; }), universe.find("D")},
      {"mid", ev([](std::size_t h) { return bit(h, 1) == 1; }), universe.find("M")},
      {"top", ev([](std::size_t h) { return bit(h, 2) == 1; }), universe.find("T")}};
  auto support = [](std::size_t h) { return bit(h, 1) == bit(h, 0) && bit(h, 2) == bit(h, 1); };
  std::map<std::string, Slice> slices;
  {
    Bits mid(site.size());
    mid.set(site.point("m"));
    slices.emplace("S", Slice::between(site, "S", mid, mid));
  }
  Model m(std::move(site), detail::tuple_histories(K), std::move(universe), std::move(gens),
          detail::uniform_on(n, support), std::move(slices));
  auto span_pair = std::make_pair(m.universe().find("D"), m.universe().find("T"));
  return {std::move(m), std::nullopt, std::nullopt, std::move(span_pair)};
}

// ---------------------------------------------------------------------------
// Random models.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Uniform draw in [0, n) from the standardised mt19937_64 stream; rejection
/// keeps it exact and platform-independent.
inline std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InputError("rnd_below(0)");
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline Bits random_subset(std::mt19937_64& rng, std::size_t n, bool nonempty) {
  Bits b(n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      if (rnd_below(rng, 2) == 1) b.set(i);
  } while (nonempty && b.none());
  return b;
}

}  // namespace detail

/// Deterministic function of its arguments: a random poset, a few declared
/// regions and slices, random homed generators, and a bounded-denominator
/// rational measure. Same seed, same model, byte for byte.
inline Model random_model(std::uint64_t seed, std::size_t max_points, std::size_t max_histories,
                          std::size_t max_generators) {
  if (max_points < 1 || max_histories < 1)
    throw InputError("random_model caps must be at least 1");
  std::mt19937_64 rng(seed);
  using detail::rnd_below;

  const std::size_t n_points = 1 + rnd_below(rng, max_points);
  std::vector<std::string> points;
  points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) points.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 0; i < n_points; ++i)
    for (std::size_t j = i + 1; j < n_points; ++j)
      if (rnd_below(rng, 2) == 1) order.emplace_back(points[i], points[j]);
  CausalSite site(points, order);

  const std::size_t n_regions = 2 + rnd_below(rng, 3);
  std::vector<Region> declared;
  for (std::size_t r = 0; r < n_regions; ++r)
    declared.push_back(
        Region{"R" + std::to_string(r), detail::random_subset(rng, n_points, true)});
  RegionUniverse universe(site, declared);

  std::map<std::string, Slice> slices;
  const std::size_t n_slices = 1 + rnd_below(rng, 2);
  for (std::size_t s = 0; s < n_slices; ++s) {
    // Minimal elements of a random set form the lower antichain, maximal
    // elements of another the upper one.
    const Bits lo_src = detail::random_subset(rng, n_points, true);
    const Bits hi_src = detail::random_subset(rng, n_points, true);
    Bits lower(n_points), upper(n_points);
    for (auto i = lo_src.find_first(); i != Bits::npos; i = lo_src.find_next(i)) {
      bool minimal = true;
      for (auto j = lo_src.find_first(); j != Bits::npos; j = lo_src.find_next(j))
        if (j != i && site.precedes(j, i)) minimal = false;
      if (minimal) lower.set(i);
    }
    for (auto i = hi_src.find_first(); i != Bits::npos; i = hi_src.find_next(i)) {
      bool maximal = true;
      for (auto j = hi_src.find_first(); j != Bits::npos; j = hi_src.find_next(j))
        if (j != i && site.precedes(i, j)) maximal = false;
      if (maximal) upper.set(i);
    }
    const std::string name = "s" + std::to_string(s);
    slices.emplace(name, Slice::between(site, name, lower, upper));
  }

  const std::size_t n_hist = 1 + rnd_below(rng, max_histories);
  std::vector<std::string> histories;
  for (std::size_t h = 0; h < n_hist; ++h) histories.push_back("h" + std::to_string(h));

  std::vector<Generator> gens;
  const std::size_t n_gens = rnd_below(rng, max_generators + 1);
  for (std::size_t g = 0; g < n_gens; ++g) {
    const Event e = detail::random_subset(rng, n_hist, false);
    // Home on any declared region or the full site; never the empty region.
    const std::size_t pick = 1 + rnd_below(rng, universe.declared_count() - 1);
    const bool nonsep = rnd_below(rng, 8) == 0;
    gens.push_back({"g" + std::to_string(g), e, universe.regions()[pick], nonsep});
  }

  std::vector<Rational> mu(n_hist, Rational(0));
  while (true) {
    Integer total = 0;
    std::vector<std::uint64_t> w(n_hist);
    for (std::size_t h = 0; h < n_hist; ++h) {
      w[h] = rnd_below(rng, 65);
      total += w[h];
    }
    if (total == 0) continue;
    for (std::size_t h = 0; h < n_hist; ++h) mu[h] = Rational(Integer(w[h]), total);
    break;
  }
  return Model(std::move(site), std::move(histories), std::move(universe), std::move(gens),
               std::move(mu), std::move(slices));
}

/// A random EPRB binding over a model: spacelike declared wings, setting and
/// outcome events drawn from the wing algebras, a random standard past
/// selector, and a random split of the past as the state partition. Returns
/// nothing when the model has no spacelike declared pair.
inline std::optional<EPRBScenario> random_scenario(const Model& m, std::uint64_t seed) {
  std::mt19937_64 rng(detail::splitmix64(seed));
  using detail::rnd_below;
  const auto& u = m.universe();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 2; i < u.declared_count(); ++i)
    for (std::size_t j = 2; j < u.declared_count(); ++j) {
      if (i == j) continue;
      if (!u.regions()[i].empty() && !u.regions()[j].empty() &&
          spacelike(m.site(), u.regions()[i], u.regions()[j]))
        pairs.emplace_back(i, j);
    }
  if (pairs.empty()) return std::nullopt;
  const auto [ia, ib] = pairs[rnd_below(rng, pairs.size())];

  EPRBScenario scen;
  scen.wing_a = u.regions()[ia];
  scen.wing_b = u.regions()[ib];
  auto pick_event = [&](const Algebra& alg) {
    // Random union of atoms, preferring a non-trivial one.
    for (int attempt = 0; attempt < 8; ++attempt) {
      Event e(m.history_count());
      for (const auto& atom : alg.atoms())
        if (rnd_below(rng, 2) == 1) e |= atom;
      if (e.any() && !e.all()) return e;
    }
    return m.omega();
  };
  const Algebra alg_a = region_algebra(m, scen.wing_a);
  const Algebra alg_b = region_algebra(m, scen.wing_b);
  scen.setting_a = pick_event(alg_a);
  scen.outcome_a = pick_event(alg_a);
  scen.setting_b = pick_event(alg_b);
  scen.outcome_b = pick_event(alg_b);
  scen.setting_a_name = "As";
  scen.setting_b_name = "Bs";
  scen.outcome_a_name = "Ao";
  scen.outcome_b_name = "Bo";
  switch (rnd_below(rng, 4)) {
    case 0: scen.past = PastSelector::mutual_past(); break;
    case 1: scen.past = PastSelector::joint_past(); break;
    case 2: scen.past = PastSelector::past_of_a(); break;
    default: scen.past = PastSelector::past_of_b(); break;
  }
  const Region past = scenario_past(m, scen);
  Bits pa(m.site().size()), pb(m.site().size());
  for (auto i = past.points.find_first(); i != Bits::npos; i = past.points.find_next(i)) {
    if (rnd_below(rng, 2) == 1)
      pa.set(i);
    else
      pb.set(i);
  }
  scen.past_partition = {Region{"PA", pa}, Region{"PB", pb}};
  return scen;
}

/// Adds a fresh non-separable event to a model by doubling the history
/// space: old events lift to cylinders, the measure splits evenly, and the
/// new event reads the fresh bit, homed on the union of the first disjoint
/// pair of nonempty universe regions. Keeps the localised-events conditions
/// intact and breaks separability across that pair.
struct InjectedModel {
  Model model;
  Region part_a;
  Region part_b;
  Region home;
};

inline std::optional<InjectedModel> inject_nonseparable(const Model& m) {
  const auto& u = m.universe();
  std::optional<std::pair<std::size_t, std::size_t>> split;
  for (std::size_t i = 0; i < u.size() && !split; ++i) {
    if (u.regions()[i].empty()) continue;
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u.regions()[j].empty()) continue;
      if (!u.regions()[i].points.intersects(u.regions()[j].points)) {
        split = {i, j};
        break;
      }
    }
  }
  if (!split) return std::nullopt;
  const Region& ra = u.regions()[split->first];
  const Region& rb = u.regions()[split->second];
  Region home{"NSHOME", ra.points | rb.points};

  const std::size_t n = m.history_count();
  std::vector<std::string> histories;
  histories.reserve(2 * n);
  for (std::size_t h = 0; h < n; ++h) {
    histories.push_back(m.histories()[h] + "_0");
    histories.push_back(m.histories()[h] + "_1");
  }
  auto lift = [&](const Event& e) {
    Event out(2 * n);
    for (auto h = e.find_first(); h != Bits::npos; h = e.find_next(h)) {
      out.set(2 * h);
      out.set(2 * h + 1);
    }
    return out;
  };
  std::vector<Generator> gens;
  for (const auto& g : m.generators()) gens.push_back({g.name, lift(g.event), g.home, g.nonseparable});
  Event fresh(2 * n);
  for (std::size_t h = 0; h < n; ++h) fresh.set(2 * h + 1);
  gens.push_back({"nsx", fresh, home, true});

  std::vector<Rational> mu;
  mu.reserve(2 * n);
  for (std::size_t h = 0; h < n; ++h) {
    mu.push_back(m.measure()[h] / 2);
    mu.push_back(m.measure()[h] / 2);
  }
  std::vector<Region> declared(u.regions().begin() + 2,
                               u.regions().begin() + u.declared_count());
  bool home_declared = false;
  for (const auto& r : declared)
    if (r.points == home.points) home_declared = true;
  if (!home_declared) declared.push_back(home);

  Model out(m.site(), histories, RegionUniverse(m.site(), declared), std::move(gens),
            std::move(mu), m.slices());
  return InjectedModel{std::move(out), ra, rb, home};
}

// ---------------------------------------------------------------------------
// The gallery itself.

struct GalleryEntry {
  std::string name;
  std::string description;
  GalleryModel (*build)();
  // Expected verdict matrix, reproduced by the regression suite on every
  // build. Keys are the dispatcher's condition names.
  std::vector<std::pair<std::string, Verdict>> expected;
};

inline const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = {
      {"nonseparable_minimal",
       "one event homed on a two-part region; localised events hold, separability fails",
       &nonseparable_minimal,
       {{"axioms", Verdict::Pass}, {"separability", Verdict::Fail}}},
      {"deterministic_common_cause",
       "past binary cause, free settings, outcomes copy the cause; screens perfectly, CHSH 2",
       &deterministic_common_cause,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"bell", Verdict::Pass},
        {"freedom", Verdict::Pass},
        {"factorisability", Verdict::Pass},
        {"chain", Verdict::Pass},
        {"no-signalling", Verdict::Pass},
        {"outcome-independence", Verdict::Pass},
        {"parameter-independence", Verdict::Pass},
        {"jarrett", Verdict::Pass}}},
      {"pr_box",
       "extremal no-signalling correlations over a trivial past; CHSH 4, no local model",
       &pr_box,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"bell", Verdict::Fail},
        {"freedom", Verdict::Pass},
        {"factorisability", Verdict::Fail},
        {"no-signalling", Verdict::Pass},
        {"outcome-independence", Verdict::Fail},
        {"parameter-independence", Verdict::Pass},
        {"jarrett", Verdict::Pass}}},
      {"pilot_wave_like",
       "outcomes deterministic given hidden state and both settings; no signalling, "
       "parameter independence fails",
       &pilot_wave_like,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"bell", Verdict::Fail},
        {"freedom", Verdict::Pass},
        {"no-signalling", Verdict::Pass},
        {"outcome-independence", Verdict::Pass},
        {"parameter-independence", Verdict::Fail},
        {"jarrett", Verdict::Pass}}},
      {"superdeterministic",
       "settings copied from a past plan; every screening passes, freedom of settings fails",
       &superdeterministic,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"bell", Verdict::Pass},
        {"freedom", Verdict::Fail}}},
      {"backyard_pingpong",
       "timelike wings linked by a point-homed mechanism; separable, yet the wing-state "
       "factorisation fails",
       &backyard_pingpong,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"howard", Verdict::Fail},
        {"outcome-independence", Verdict::Fail}}},
      {"maudlin_bare_correlation",
       "perfectly correlated outcomes over a past with no non-trivial events",
       &maudlin_bare_correlation,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Pass},
        {"howard", Verdict::Fail},
        {"bell", Verdict::Fail}}},
      {"weakened_locality_signalling",
       "carrier homed across A's future and B's past; weakened screening passes while the "
       "model signals",
       &weakened_locality_signalling,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Fail},
        {"bell", Verdict::Fail},
        {"weakened", Verdict::Pass},
        {"freedom", Verdict::Pass},
        {"no-signalling", Verdict::Fail}}},
      {"simpsons_slice",
       "joint past screens the wings but a carrier spanning the middle slice skips it",
       &simpsons_slice,
       {{"axioms", Verdict::Pass},
        {"separability", Verdict::Fail},
        {"bell", Verdict::Pass},
        {"nouvelle", Verdict::Fail},
        {"srla", Verdict::Fail}}},
      {"markov_chain",
       "each layer copies the previous one; the interposed slice screens top from bottom",
       &markov_chain,
       {{"axioms", Verdict::Pass}, {"srla", Verdict::Pass}}},
  };
  return entries;
}

inline const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return e;
  throw InputError("unknown gallery model '" + name + "'");
}

/// Runs one named condition against a gallery model. Used by the regression
/// suite to reproduce the expected verdict matrices.
inline CheckReport evaluate_gallery_condition(const GalleryModel& gm, const std::string& key) {
  const Model& m = gm.model;
  auto wings = [&]() -> std::pair<Region, Region> {
    if (gm.region_pair) return *gm.region_pair;
    if (gm.scenario) return {gm.scenario->wing_a, gm.scenario->wing_b};
    throw InputError("gallery model has no wing bindings");
  };
  auto past_sel = [&]() {
    return gm.scenario ? gm.scenario->past : PastSelector::joint_past();
  };
  if (key == "axioms") return check_localised_axioms(m);
  if (key == "separability") return check_separability_universe(m);
  if (key == "bell") {
    auto [a, b] = wings();
    return check_bell_locality(m, a, b, past_sel());
  }
  if (key == "weakened") {
    auto [a, b] = wings();
    return check_bell_locality_weakened(m, a, b, past_sel());
  }
  if (key == "nouvelle") {
    auto [a, b] = wings();
    return check_bell_locality(m, a, b, PastSelector::slice_block(m.slices().begin()->second));
  }
  if (key == "srla") {
    if (!gm.srla_pair) throw InputError("gallery model has no srla pair");
    return check_srla(m, gm.srla_pair->first, gm.srla_pair->second,
                      m.slices().begin()->second);
  }
  if (!gm.scenario) throw InputError("condition '" + key + "' needs a scenario");
  const EPRBScenario& scen = *gm.scenario;
  if (key == "freedom") return check_freedom_of_settings(m, scen);
  if (key == "factorisability") return check_factorisability(m, scen);
  if (key == "chain") return verify_derivation_chain(m, scen);
  if (key == "no-signalling") return check_no_signalling(m, scen);
  if (key == "outcome-independence") return check_outcome_independence(m, scen);
  if (key == "parameter-independence") return check_parameter_independence(m, scen);
  if (key == "jarrett") return check_jarrett_decomposition(m, scen);
  if (key == "howard") return check_howard_separability_of_states(m, scen);
  throw InputError("unknown gallery condition '" + key + "'");
}

}  // namespace bellcheck
