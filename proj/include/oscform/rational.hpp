#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace oscform {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of affine parameter space or a vector of homogeneous coordinates.
using Point = std::vector<Rational>;

/// Parses "3", "-7", "2/5", "-10/4" (reduced on return).
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1,0,1/2".
Point parse_point(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Point& p);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace oscform
