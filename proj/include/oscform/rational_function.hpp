#pragma once

#include <span>
#include <string>

#include "oscform/polynomial.hpp"

namespace oscform {

/// Quotient of polynomials over Q, kept reduced: gcd(num, den) = 1 and the
/// leading coefficient of den is 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const VarList& vars() const { return num_.bound() ? num_.vars() : den_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws PreconditionError otherwise.
  Rational constant_value() const;

  RationalFunction rebound(const VarList& target) const;

  /// Throws DenominatorVanishes when the denominator is zero at the point.
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction derivative(std::size_t k) const;
  RationalFunction hasse(const MultiIndex& i) const;

  std::string to_string() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_{1};
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace oscform
