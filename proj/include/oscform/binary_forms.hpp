#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oscform/polynomial.hpp"
#include "oscform/quotient_ring.hpp"

namespace oscform {

/// Monic gcd of two homogeneous forms in exactly two variables. A positive
/// degree means the forms share a zero on P^1.
Polynomial binary_form_gcd(const Polynomial& f, const Polynomial& g);

/// Determinant of the Sylvester matrix of two binary forms of positive
/// degree; zero exactly when they share a zero on P^1.
Rational resultant_binary(const Polynomial& f, const Polynomial& g);

/// Coefficients a_0..a_d of f = sum a_i v1^(d-i) v2^i.
std::vector<Rational> binary_form_coefficients(const Polynomial& f);

/// A zero (a : b) of a binary form. Rational zeros have no modulus;
/// otherwise a and b live in Q[s]/(modulus) with the modulus irreducible.
struct BinaryDirection {
  std::optional<UPoly> modulus;
  std::vector<Rational> rational;                  // (a, b) when rational
  std::vector<QuotientRingElement> algebraic;      // (a, b) otherwise
};

/// Distinct zeros on P^1 of a nonzero binary form of degree at most 2.
std::vector<BinaryDirection> binary_form_zeros(const Polynomial& f);

/// Value of p at a point with coordinates in one quotient ring.
QuotientRingElement evaluate_algebraic(const Polynomial& p, std::span<const QuotientRingElement> point);

}  // namespace oscform
