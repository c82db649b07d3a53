#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace a2lab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical rational from a pair of machine integers.
Rational rat(long num, long den = 1);

/// Parses "num/den" or plain "num". Throws std::invalid_argument on bad input.
Rational rat_from_string(const std::string& s);

/// Canonical "num/den" form ("num" when den == 1). Inverse of rat_from_string.
std::string rat_to_string(const Rational& q);

/// 3^e for any integer e (negative e gives 1/3^|e|).
Rational pow3(long e);

/// 2^e for any integer e.
Rational pow2(long e);

/// floor(q) as a big integer.
BigInt floor_rat(const Rational& q);

/// sqrt(q) when q is the square of a rational, nullopt otherwise. Requires q >= 0.
std::optional<Rational> exact_sqrt(const Rational& q);

inline int sgn(const Rational& q) { return ::sgn(q); }

}  // namespace a2lab
