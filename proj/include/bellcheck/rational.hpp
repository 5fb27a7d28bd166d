#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>

#include "bellcheck/errors.hpp"

namespace bellcheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num, den);
}

/// Canonical "p/q" form, lowest terms, positive denominator. Integers are
/// rendered as "p/1" so every rational in a file or report parses the same
/// way.
inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q" (or a bare integer "p"). Strict: optional leading '-',
/// decimal digits only, nonzero denominator.
inline Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw InputError("bad rational literal: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw InputError("bad rational literal: '" + text + "'");
  return make_rational(Integer(num), Integer(den));
}

/// Best rational approximation to `target` with denominator <= cap, via the
/// continued-fraction convergent/semiconvergent walk. `target` must itself be
/// exact (callers convert a double to its exact dyadic rational first).
inline Rational best_approximation(const Rational& target, const Integer& cap) {
  if (cap < 1) throw InputError("denominator cap must be >= 1");
  if (denominator(target) <= cap) return target;

  const bool negative = target < 0;
  const Rational t = negative ? -target : target;

  // Convergent recurrence: (p0/q0, p1/q1) are the previous two convergents
  // of the continued fraction of t.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = numerator(t), d = denominator(t);

  Rational best;
  while (true) {
    const Integer a = n / d;
    const Integer p2 = a * p1 + p0;
    const Integer q2 = a * q1 + q0;
    if (q2 > cap) {
      // Largest semiconvergent whose denominator still fits. q1 >= 1 here:
      // the first convergent has denominator 1 <= cap.
      const Integer k = (cap - q0) / q1;
      const Rational semi(k * p1 + p0, k * q1 + q0);
      const Rational conv(p1, q1);
      best = (abs(semi - t) < abs(conv - t)) ? semi : conv;
      break;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const Integer r = n - a * d;
    if (r == 0) { best = Rational(p1, q1); break; }
    n = d;
    d = r;
  }
  return negative ? -best : best;
}

/// Exact rational value of a double (doubles are dyadic rationals).
inline Rational rational_from_double(double x) {
  if (x != x) throw InputError("cannot convert NaN to a rational");
  Rational r(x);
  return r;
}

}  // namespace bellcheck
