#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ocs {

// Exact rational scalar. All circuit and dynamics arithmetic is exact, so
// functor laws are equality tests rather than tolerance tests.
using Rational = mpq_class;

// Canonicalized fraction; mpq equality assumes canonical form, so prefer
// this over the raw two-argument constructor.
inline Rational make_rational(long numerator, long denominator = 1) {
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

// Accepts "3", "-3", "3/2"; rejects everything else.
Rational parse_rational(const std::string& text);

// Canonical form: "n" or "n/d" with d > 0 and gcd(n, d) = 1.
std::string rational_string(const Rational& value);

std::string rational_vector_string(const std::vector<Rational>& values);

}  // namespace ocs
