#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rhombus {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a finite decimal such as "-1.25".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Primitive integer vectors: gcd of entries is one (zero vector stays zero).
std::vector<Integer> make_primitive(std::vector<Integer> v);

}  // namespace rhombus
