#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "bellcheck/errors.hpp"
#include "bellcheck/model.hpp"
#include "bellcheck/rational.hpp"
#include "bellcheck/report.hpp"
#include "bellcheck/scenario.hpp"

namespace bellcheck {

/// Conditional distribution p(a_o, b_o | a_s, b_s) for two settings and two
/// outcomes per wing. Indices: settings x,y in {0,1} (0 is the scenario's
/// setting event itself, 1 its complement); outcomes i,j in {0,1} standing
/// for +1 and -1.
struct BehaviorTable {
  std::array<std::array<std::array<std::array<Rational, 2>, 2>, 2>, 2> p{};

  const Rational& at(int x, int y, int i, int j) const { return p[x][y][i][j]; }
  Rational& at(int x, int y, int i, int j) { return p[x][y][i][j]; }

  void validate() const {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        Rational sum = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            if (p[x][y][i][j] < 0)
              throw InputError("behavior entry below zero at settings " + std::to_string(x) +
                               "," + std::to_string(y));
            sum += p[x][y][i][j];
          }
        if (sum != 1)
          throw InputError("behavior entries for settings " + std::to_string(x) + "," +
                           std::to_string(y) + " sum to " + bellcheck::to_string(sum));
      }
  }
};

inline int outcome_sign(int idx) { return idx == 0 ? +1 : -1; }

struct Correlators {
  std::array<std::array<Rational, 2>, 2> E{};
};

inline Correlators correlators(const BehaviorTable& t) {
  Correlators c;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Rational e = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          e += Rational(outcome_sign(i) * outcome_sign(j)) * t.at(x, y, i, j);
      c.E[x][y] = e;
    }
  return c;
}

struct ChshResult {
  Rational value;
  std::array<int, 4> signs;  // coefficients of E(0,0), E(0,1), E(1,0), E(1,1)

  std::string convention() const {
    std::string out;
    for (int s : signs) out += (s > 0 ? '+' : '-');
    return out;
  }
};

/// Maximum over the eight odd-minus sign conventions of
/// |s00 E(0,0) + s01 E(0,1) + s10 E(1,0) + s11 E(1,1)|.
inline ChshResult chsh_value(const BehaviorTable& t) {
  t.validate();
  const Correlators c = correlators(t);
  ChshResult best{Rational(-1), {1, 1, 1, 1}};
  for (int mask = 0; mask < 16; ++mask) {
    int minus = 0;
    for (int b = 0; b < 4; ++b)
      if (mask & (1 << b)) minus++;
    if (minus % 2 == 0) continue;
    std::array<int, 4> signs;
    Rational s = 0;
    int b = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y, ++b) {
        signs[b] = (mask & (1 << b)) ? -1 : 1;
        s += Rational(signs[b]) * c.E[x][y];
      }
    if (s < 0) s = -s;
    if (s > best.value) best = {s, signs};
  }
  return best;
}

/// The experimental table a scenario induces: p(a_o, b_o | a_s, b_s) from
/// the model's measure. All four setting pairs must have positive
/// probability.
inline BehaviorTable behavior_from_model(const Model& m, const EPRBScenario& scen) {
  validate_scenario(m, scen);
  const std::array<Event, 2> as = {scen.setting_a, ~scen.setting_a};
  const std::array<Event, 2> bs = {scen.setting_b, ~scen.setting_b};
  const std::array<Event, 2> ao = {scen.outcome_a, ~scen.outcome_a};
  const std::array<Event, 2> bo = {scen.outcome_b, ~scen.outcome_b};
  BehaviorTable t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Event setting = as[x] & bs[y];
      if (probability(m, setting) == 0)
        throw InputError("setting pair " + std::to_string(x) + "," + std::to_string(y) +
                         " has zero probability; no behavior table");
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.at(x, y, i, j) = conditional(m, ao[i] & bo[j], setting);
    }
  t.validate();
  return t;
}

/// No-signalling at the level of a bare table: outcome marginals in each
/// wing agree across the distant setting.
inline CheckReport check_no_signalling_behavior(const BehaviorTable& t) {
  t.validate();
  CheckReport rep;
  rep.condition = "no-signalling-behavior";
  for (int x = 0; x < 2; ++x)
    for (int i = 0; i < 2; ++i) {
      const Rational m0 = t.at(x, 0, i, 0) + t.at(x, 0, i, 1);
      const Rational m1 = t.at(x, 1, i, 0) + t.at(x, 1, i, 1);
      rep.checked++;
      if (m0 != m1)
        rep.add_witness({"marginal-a", "-",
                         "a_s=" + std::to_string(x) + " a_o=" + std::to_string(outcome_sign(i)),
                         m0, m1});
    }
  for (int y = 0; y < 2; ++y)
    for (int j = 0; j < 2; ++j) {
      const Rational m0 = t.at(0, y, 0, j) + t.at(0, y, 1, j);
      const Rational m1 = t.at(1, y, 0, j) + t.at(1, y, 1, j);
      rep.checked++;
      if (m0 != m1)
        rep.add_witness({"marginal-b", "-",
                         "b_s=" + std::to_string(y) + " b_o=" + std::to_string(outcome_sign(j)),
                         m0, m1});
    }
  rep.finalize();
  return rep;
}

struct SingletTable {
  BehaviorTable table;
  Rational max_deviation;  // largest |rounded - exact| over the 16 entries
};

/// Quantum singlet correlations E(a,b) = -cos(a-b) with uniform marginals,
/// rounded entrywise to rationals with denominator <= cap and renormalised
/// per setting pair. Equal entries round equally, so the renormalisation
/// keeps the marginals exactly uniform and no-signalling exact.
inline SingletTable singlet_table(double angle_a, double angle_a2, double angle_b,
                                  double angle_b2, const Integer& cap) {
  if (cap < 2) throw InputError("denominator cap must be >= 2");
  const double aa[2] = {angle_a, angle_a2};
  const double bb[2] = {angle_b, angle_b2};
  SingletTable out;
  out.max_deviation = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const double e = -std::cos(aa[x] - bb[y]);
      std::array<std::array<Rational, 2>, 2> rounded;
      Rational sum = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double pd = (1.0 + outcome_sign(i) * outcome_sign(j) * e) / 4.0;
          const Rational exact = rational_from_double(pd);
          rounded[i][j] = best_approximation(exact, cap);
          if (rounded[i][j] < 0)
            throw InputError("denominator cap too coarse; rounded entry is negative");
          sum += rounded[i][j];
        }
      if (sum == 0) throw InputError("denominator cap too coarse; all entries rounded to 0");
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          out.table.at(x, y, i, j) = rounded[i][j] / sum;
          const Rational exact =
              rational_from_double((1.0 + outcome_sign(i) * outcome_sign(j) * e) / 4.0);
          Rational dev = out.table.at(x, y, i, j) - exact;
          if (dev < 0) dev = -dev;
          if (dev > out.max_deviation) out.max_deviation = dev;
        }
    }
  out.table.validate();
  return out;
}

/// Serialises the sixteen-line text format: "a_s b_s a_o b_o p/q" with
/// outcomes written as +1 / -1.
inline std::string behavior_to_text(const BehaviorTable& t) {
  std::ostringstream os;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          os << x << " " << y << " " << (outcome_sign(i) > 0 ? "+1" : "-1") << " "
             << (outcome_sign(j) > 0 ? "+1" : "-1") << " " << to_string(t.at(x, y, i, j))
             << "\n";
  return os.str();
}

/// Parses the text format. Lines may appear in any order; all sixteen cells
/// must be present exactly once. Blank lines and '#' comments are ignored.
inline BehaviorTable behavior_from_text(const std::string& text) {
  BehaviorTable t;
  bool seen[2][2][2][2] = {};
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string xs, ys, is_, js, ps;
    if (!(ls >> xs)) continue;  // blank
    if (!(ls >> ys >> is_ >> js >> ps))
      throw InputError("bad behavior line: '" + line + "'");
    std::string trailing;
    if (ls >> trailing) throw InputError("trailing tokens on behavior line: '" + line + "'");
    auto setting = [](const std::string& s) {
      if (s == "0") return 0;
      if (s == "1") return 1;
      throw InputError("bad setting value '" + s + "'");
    };
    auto outcome = [](const std::string& s) {
      if (s == "+1" || s == "1") return 0;
      if (s == "-1") return 1;
      throw InputError("bad outcome value '" + s + "'");
    };
    const int x = setting(xs), y = setting(ys), i = outcome(is_), j = outcome(js);
    if (seen[x][y][i][j]) throw InputError("duplicate behavior cell in line: '" + line + "'");
    seen[x][y][i][j] = true;
    t.at(x, y, i, j) = parse_rational(ps);
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (!seen[x][y][i][j]) throw InputError("behavior table is missing cells");
  t.validate();
  return t;
}

}  // namespace bellcheck
