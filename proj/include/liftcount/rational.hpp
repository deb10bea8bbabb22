#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftcount {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with optional leading '-'. Anything else (in particular
// decimal or floating notation) is rejected: weights are exact rationals.
Rational parse_rational(const std::string& text);

bool looks_like_rational(const std::string& text);

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// q^e with the 0^0 = 1 convention used throughout the count formulas.
Rational pow_rational(const Rational& base, unsigned long exp);

Integer factorial(unsigned long n);

// n! / (k_1! ... k_u!) for a composition of n.
Integer multinomial(unsigned long n, const std::vector<unsigned>& parts);

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace liftcount
