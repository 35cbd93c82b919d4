#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace agstab {

/// Exact rational number, always canonical (lowest terms, positive
/// denominator). Backed by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms. Use this instead of the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational make_rational(const BigInt &num, const BigInt &den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" text form; integers are written with an explicit "/1".
std::string to_string(const Rational &q);

/// Accepts "p/q", "p" and optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

} // namespace agstab
