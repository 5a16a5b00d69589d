#pragma once

#include <memory>
#include <string>

#include "oscform/univariate.hpp"

namespace oscform {

/// Element of Q[s]/(p) for a monic squarefree p. Used to evaluate forms at
/// a root of an irreducible factor without leaving exact arithmetic.
class QuotientRingElement {
 public:
  /// Requires p of positive degree; p is made monic and must be squarefree.
  QuotientRingElement(const UPoly& modulus, const UPoly& value);
  QuotientRingElement(const std::shared_ptr<const UPoly>& modulus, const UPoly& value);

  /// The class of s.
  static QuotientRingElement generator(const UPoly& modulus);

  const UPoly& modulus() const { return *modulus_; }
  const std::shared_ptr<const UPoly>& modulus_ptr() const { return modulus_; }
  const UPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  QuotientRingElement constant(const Rational& c) const { return {modulus_, UPoly(c)}; }

  /// Throws NotInvertible when gcd(value, modulus) is not 1.
  QuotientRingElement inverse() const;

  std::string to_string() const;

  QuotientRingElement operator-() const;
  friend QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b);
  friend QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b);
  friend QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b);
  friend QuotientRingElement operator*(const Rational& a, const QuotientRingElement& b);
  friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b);

 private:
  std::shared_ptr<const UPoly> modulus_;
  UPoly value_;
};

}  // namespace oscform
