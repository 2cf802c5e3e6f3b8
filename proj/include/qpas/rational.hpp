#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qpas {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Parse "p", "-p" or "p/q" (arbitrary precision). Throws parse_error.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

/// Nonnegative square root r with r*r == q, when q is a square in Q.
std::optional<Rat> is_rational_square(const Rat& q);

/// C(a, b) with C(a, b) = 0 whenever b < 0 or b > a.
Int binomial(long a, long b);

Int factorial(long a);

/// Nearest double; exact rationals round once here.
double to_double(const Rat& q);

}  // namespace qpas
