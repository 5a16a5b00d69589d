#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscform/rational.hpp"

namespace oscform {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies s^i. No
/// trailing zero coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(unsigned degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational leading_coefficient() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& s) const;
  std::string to_string(const std::string& var = "s") const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly gcd;  // monic
  UPoly x;    // x*a + y*b = gcd
  UPoly y;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

}  // namespace oscform
