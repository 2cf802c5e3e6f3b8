#pragma once

#include <cmath>
#include <cstdlib>

#include "qpas/rational.hpp"

namespace qpas {

/// Tolerances governing the floating backend. The exact backend ignores all
/// of them; comparisons there are literal.
struct tolerance_policy {
  double snap = 1e-9;    // inner-product clustering radius
  double zero = 1e-8;    // design-moment / deviation zero test
  int report_digits = 12;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static Rat from_rat(const Rat& q) { return q; }
  static Rat from_int(long v) { return Rat(v); }
  static double approx(const Rat& v) { return v.get_d(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_rat(const Rat& q) { return q.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double approx(double v) { return v; }
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <class S>
S from_rat(const Rat& q) {
  return scalar_traits<S>::from_rat(q);
}

template <class S>
S from_int(long v) {
  return scalar_traits<S>::from_int(v);
}

template <class S>
S abs_value(const S& v) {
  return v < S(0) ? S(-v) : v;
}

/// Zero test: literal on the exact backend, |v| <= tol on the float backend.
template <class S>
bool is_zero_within(const S& v, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return v == 0;
  } else {
    return std::abs(v) <= tol;
  }
}

/// Backend equality: literal, or |a - b| <= tol * max(1, |a|, |b|).
template <class S>
bool scalar_eq(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
  }
}

}  // namespace qpas
