#include <catch_amalgamated.hpp>

#include <random>

#include "bellcheck/causal_site.hpp"

using namespace bellcheck;

namespace {

CausalSite chain3() { return CausalSite({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

CausalSite diamond() {
  return CausalSite({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

CausalSite random_site(std::mt19937_64& rng, std::size_t max_points) {
  const std::size_t n = 1 + rng() % max_points;
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2) order.emplace_back(pts[i], pts[j]);
  return CausalSite(pts, order);
}

Region random_region(std::mt19937_64& rng, const CausalSite& s, bool nonempty) {
  Bits b(s.size());
  do {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (rng() % 2) b.set(i);
  } while (nonempty && b.none());
  return Region{"r", b};
}

Slice random_slice(std::mt19937_64& rng, const CausalSite& s) {
  const Bits src = random_region(rng, s, true).points;
  Bits lower(s.size()), upper(s.size());
  for (auto i = src.find_first(); i != Bits::npos; i = src.find_next(i)) {
    bool minimal = true, maximal = true;
    for (auto j = src.find_first(); j != Bits::npos; j = src.find_next(j)) {
      if (j == i) continue;
      if (s.precedes(j, i)) minimal = false;
      if (s.precedes(i, j)) maximal = false;
    }
    if (minimal) lower.set(i);
    if (maximal) upper.set(i);
  }
  return Slice::between(s, "s", lower, upper);
}

}  // namespace

TEST_CASE("construction rejects cycles and duplicates") {
  CHECK_THROWS_AS(CausalSite({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(CausalSite({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(CausalSite({"a"}, {{"a", "z"}}), InputError);
}

TEST_CASE("transitive closure is applied") {
  const CausalSite s = chain3();
  CHECK(s.precedes(s.point("a"), s.point("c")));
  CHECK(s.precedes(s.point("a"), s.point("a")));
  CHECK_FALSE(s.precedes(s.point("c"), s.point("a")));
}

TEST_CASE("causal past on a chain") {
  const CausalSite s = chain3();
  CHECK(causal_past(s, s.make_region("r", {"c"})).points == make_bits(3, {0, 1, 2}));
  CHECK(causal_past(s, s.empty_region()).points.none());
  CHECK(causal_future(s, s.make_region("r", {"a"})).points == make_bits(3, {0, 1, 2}));
}

TEST_CASE("causal past on the diamond") {
  const CausalSite s = diamond();
  CHECK(causal_past(s, s.make_region("r", {"b"})).points ==
        make_bits(4, {s.point("a"), s.point("b")}));
}

TEST_CASE("spacelike relation") {
  const CausalSite s = diamond();
  CHECK(spacelike(s, s.make_region("x", {"b"}), s.make_region("y", {"c"})));
  CHECK_FALSE(spacelike(s, s.make_region("x", {"a"}), s.make_region("y", {"b"})));
  CHECK_THROWS_AS(spacelike(s, s.empty_region(), s.make_region("y", {"b"})), InputError);

  const CausalSite two({"x", "y"}, {});
  CHECK(spacelike(two, two.make_region("x", {"x"}), two.make_region("y", {"y"})));
}

TEST_CASE("resolve_past on the diamond") {
  const CausalSite s = diamond();
  const Region b = s.make_region("B", {"b"});
  const Region c = s.make_region("C", {"c"});
  const Bits just_a = make_bits(4, {s.point("a")});
  CHECK(resolve_past(s, b, c, PastSelector::mutual_past()).points == just_a);
  CHECK(resolve_past(s, b, c, PastSelector::joint_past()).points == just_a);
  CHECK(resolve_past(s, b, c, PastSelector::past_of_a()).points == just_a);
  // Custom past subtracts the wings.
  CHECK(resolve_past(s, b, c, PastSelector::custom(s.full_region())).points ==
        make_bits(4, {s.point("a"), s.point("d")}));
  // Non-spacelike wings are rejected for the standard selectors.
  const Region a = s.make_region("A", {"a"});
  CHECK_THROWS_AS(resolve_past(s, a, b, PastSelector::joint_past()), InputError);
}

TEST_CASE("slices validate their bounding antichains") {
  const CausalSite s = chain3();
  Bits lo(3), hi(3);
  lo.set(s.point("a"));
  hi.set(s.point("a"));
  hi.set(s.point("b"));  // a and b are comparable
  CHECK_THROWS_AS(Slice::between(s, "bad", lo, hi), InputError);

  Bits m(3);
  m.set(s.point("b"));
  const Slice ok = Slice::between(s, "mid", m, m);
  CHECK(ok.points == make_bits(3, {s.point("b")}));
}

TEST_CASE("srla region on a chain") {
  const CausalSite s = chain3();
  Bits m(3);
  m.set(s.point("b"));
  const Slice mid = Slice::between(s, "mid", m, m);
  const Region x = s.make_region("X", {"a"});
  const Region z = s.make_region("Z", {"c"});
  CHECK(srla_region(s, x, z, mid).points == make_bits(3, {s.point("b")}));

  // Directly covering pair with nothing interposed.
  const CausalSite two({"x", "y"}, {{"x", "y"}});
  Bits one(2);
  one.set(0);
  const Slice s0 = Slice::between(two, "s", one, one);
  CHECK(srla_region(two, two.make_region("X", {"x"}), two.make_region("Y", {"y"}), s0)
            .points.none());

  // Precondition: x entirely to the past of y, disjoint from it.
  CHECK_THROWS_AS(srla_region(s, z, x, mid), InputError);
  CHECK_THROWS_AS(srla_region(s, x, x, mid), InputError);
}

TEST_CASE("random poset properties") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    const CausalSite s = random_site(rng, 10);
    const Region r1 = random_region(rng, s, false);
    const Region r2 = random_region(rng, s, false);

    // Monotone and idempotent past operator, inclusive of its argument.
    CHECK(subset(causal_past(s, Region{"sub", r1.points & r2.points}).points,
                 causal_past(s, r1).points));
    const Region past1 = causal_past(s, r1);
    CHECK(causal_past(s, past1).points == past1.points);
    CHECK(subset(r1.points, past1.points));

    if (r1.points.any() && r2.points.any()) {
      CHECK(spacelike(s, r1, r2) == spacelike(s, r2, r1));
      CHECK_FALSE(spacelike(s, r1, r1));
      if (spacelike(s, r1, r2)) {
        const Region mp = resolve_past(s, r1, r2, PastSelector::mutual_past());
        const Region jp = resolve_past(s, r1, r2, PastSelector::joint_past());
        CHECK(subset(mp.points, jp.points));
        CHECK_FALSE(mp.points.intersects(r1.points | r2.points));
        CHECK_FALSE(jp.points.intersects(r1.points | r2.points));
      }
      if (!r1.points.intersects(r2.points) &&
          subset(r1.points, causal_past(s, r2).points)) {
        const Slice sl = random_slice(rng, s);
        const Region d = srla_region(s, r1, r2, sl);
        CHECK_FALSE(d.points.intersects(r1.points | r2.points));
        CHECK(subset(d.points, causal_past(s, r2).points));
        CHECK(subset(d.points, causal_future(s, r1).points));
      }
    }
  }
}
