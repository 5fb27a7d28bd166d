#include <catch_amalgamated.hpp>

#include <random>

#include "bellcheck/event_algebra.hpp"

using namespace bellcheck;

TEST_CASE("generated algebra from one event") {
  // Four histories, one generator {h0, h1}: two atoms.
  const Event x = make_bits(4, {0, 1});
  const Algebra alg = generated_algebra(4, {x});
  REQUIRE(alg.atom_count() == 2);
  CHECK(alg.atoms()[0] == x);
  CHECK(alg.atoms()[1] == make_bits(4, {2, 3}));
  CHECK(alg.contains(x));
  CHECK(alg.contains(~x));
  CHECK_FALSE(alg.contains(make_bits(4, {0})));
}

TEST_CASE("empty generating set gives the trivial algebra") {
  const Algebra alg = generated_algebra(3, {});
  CHECK(alg.is_trivial());
  CHECK(alg.atoms()[0] == make_bits(3, {0, 1, 2}));
}

TEST_CASE("two independent events give singleton atoms") {
  const Event x = make_bits(4, {0, 1});
  const Event y = make_bits(4, {0, 2});
  const Algebra alg = generated_algebra(4, {x, y});
  CHECK(alg.atom_count() == 4);
}

TEST_CASE("meet is the common coarsening, join the common refinement") {
  const Event x = make_bits(4, {0, 1});
  const Event y = make_bits(4, {0, 2});
  const Algebra ax = generated_algebra(4, {x});
  const Algebra ay = generated_algebra(4, {y});
  CHECK(algebra_meet(ax, ay).is_trivial());
  CHECK(algebra_join(ax, ay).atom_count() == 4);
  // Meet of an algebra with itself is itself; identical events shared by
  // both algebras stay in the meet.
  CHECK(algebra_meet(ax, ax) == ax);
  const Algebra both = generated_algebra(4, {x, y});
  CHECK(algebra_meet(both, ax) == ax);
  CHECK(ax.subalgebra_of(both));
  CHECK_FALSE(both.subalgebra_of(ax));
}

TEST_CASE("atoms decide every event of the algebra") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<Event> gens;
    const std::size_t k = rng() % 4;
    for (std::size_t g = 0; g < k; ++g) {
      Event e(n);
      for (std::size_t h = 0; h < n; ++h)
        if (rng() % 2) e.set(h);
      gens.push_back(e);
    }
    const Algebra alg = generated_algebra(n, gens);
    // Atom property: each generating event contains or avoids each atom.
    for (const auto& g : gens)
      for (const auto& atom : alg.atoms())
        CHECK((atom.is_subset_of(g) || !atom.intersects(g)));
    // Partition property.
    Event all(n);
    for (const auto& atom : alg.atoms()) {
      CHECK(atom.any());
      CHECK_FALSE(all.intersects(atom));
      all |= atom;
    }
    CHECK(all.all());
  }
}

TEST_CASE("algebra cardinality is two to the atom count") {
  const Event x = make_bits(4, {0, 1});
  const Event y = make_bits(4, {0, 2});
  const Algebra alg = generated_algebra(4, {x, y});
  // Enumerate all unions of atoms; they must be distinct and exactly the
  // members of the algebra.
  const std::size_t k = alg.atom_count();
  std::vector<Event> members;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    Event e(4);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i)) e |= alg.atoms()[i];
    CHECK(alg.contains(e));
    for (const auto& prev : members) CHECK(prev != e);
    members.push_back(e);
  }
  CHECK(members.size() == 16);
}
