#include <catch_amalgamated.hpp>

#include <cmath>

#include "bellcheck/behavior.hpp"
#include "bellcheck/gallery.hpp"
#include "bellcheck/polytope.hpp"

using namespace bellcheck;

namespace {

BehaviorTable white_noise() {
  BehaviorTable t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.at(x, y, i, j) = Rational(1, 4);
  return t;
}

}  // namespace

TEST_CASE("table validation") {
  BehaviorTable t = white_noise();
  t.at(0, 0, 0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(t.validate(), InputError);
  t = white_noise();
  t.at(0, 0, 0, 0) = Rational(-1, 4);
  t.at(0, 0, 1, 1) = Rational(3, 4);
  CHECK_THROWS_AS(t.validate(), InputError);
}

TEST_CASE("all-positive deterministic outcomes give CHSH 2") {
  const BehaviorTable t = strategy_table(0);  // +1 everywhere
  const ChshResult r = chsh_value(t);
  CHECK(r.value == 2);
}

TEST_CASE("PR box gives CHSH 4, white noise 0") {
  const GalleryModel pr = pr_box();
  const BehaviorTable t = behavior_from_model(pr.model, *pr.scenario);
  CHECK(chsh_value(t).value == 4);
  CHECK(chsh_value(white_noise()).value == 0);
  CHECK(check_no_signalling_behavior(t).passed());
}

TEST_CASE("singlet correlations reach Tsirelson within the rounding bound") {
  const SingletTable st = tsirelson_approx(Integer(10000));
  const double chsh = to_double(chsh_value(st.table).value);
  CHECK(std::abs(chsh - 2.0 * std::sqrt(2.0)) <= 1e-3);
  CHECK(st.max_deviation <= Rational(1, 10000));
  CHECK(check_no_signalling_behavior(st.table).passed());
}

TEST_CASE("singlet edge angles") {
  // Equal angles: perfect anticorrelation.
  const SingletTable eq = singlet_table(0.3, 1.0, 0.3, 2.0, Integer(1000));
  const Correlators c = correlators(eq.table);
  CHECK(c.E[0][0] == -1);
  // Right angles: vanishing correlator.
  const double pi = std::acos(-1.0);
  const SingletTable orth = singlet_table(0.0, 1.0, pi / 2, 2.0, Integer(1000));
  CHECK(correlators(orth.table).E[0][0] == 0);
  CHECK_THROWS_AS(singlet_table(0, 1, 2, 3, Integer(1)), InputError);
}

TEST_CASE("behavior text format round-trips") {
  const GalleryModel pr = pr_box();
  const BehaviorTable t = behavior_from_model(pr.model, *pr.scenario);
  const std::string text = behavior_to_text(t);
  const BehaviorTable back = behavior_from_text(text);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(back.at(x, y, i, j) == t.at(x, y, i, j));
  CHECK(behavior_to_text(back) == text);
}

TEST_CASE("behavior text rejects malformed input") {
  CHECK_THROWS_AS(behavior_from_text("0 0 +1 +1 1/4\n"), InputError);  // missing cells
  const std::string good = behavior_to_text(white_noise());
  CHECK_THROWS_AS(behavior_from_text(good + "0 0 +1 +1 1/4\n"), InputError);  // duplicate
  CHECK_THROWS_AS(behavior_from_text("0 0 +1 +2 1/4\n"), InputError);
  CHECK_THROWS_AS(behavior_from_text("0 0 +1 +1 1/4 extra\n"), InputError);
  // Comments and blank lines are fine.
  CHECK_NOTHROW(behavior_from_text("# comment\n\n" + good));
}

TEST_CASE("behavior from a model needs positive setting pairs") {
  const GalleryModel by = backyard_pingpong();
  CHECK_THROWS_AS(behavior_from_model(by.model, *by.scenario), InputError);
}

TEST_CASE("product behaviors pass no-signalling") {
  // p(a|x) * p(b|y) with asymmetric marginals.
  BehaviorTable t;
  const Rational pa[2] = {Rational(1, 3), Rational(2, 3)};
  const Rational pb[2] = {Rational(1, 5), Rational(4, 5)};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Rational ma = (i == 0) ? pa[x] : 1 - pa[x];
          const Rational mb = (j == 0) ? pb[y] : 1 - pb[y];
          t.at(x, y, i, j) = ma * mb;
        }
  CHECK(check_no_signalling_behavior(t).passed());
  CHECK(chsh_value(t).value <= 2);
}

TEST_CASE("signalling table is caught") {
  BehaviorTable t = white_noise();
  // Wing A marginal depends on b_s.
  t.at(0, 1, 0, 0) = Rational(1, 2);
  t.at(0, 1, 0, 1) = Rational(1, 4);
  t.at(0, 1, 1, 0) = Rational(0);
  t.at(0, 1, 1, 1) = Rational(1, 4);
  const CheckReport rep = check_no_signalling_behavior(t);
  REQUIRE(rep.failed());
  CHECK(rep.witnesses.front().where == "marginal-a");
}
