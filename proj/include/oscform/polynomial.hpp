#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oscform/multi_index.hpp"
#include "oscform/rational.hpp"

namespace oscform {

/// Ordered variable names of a polynomial ring. Shared and immutable; two
/// lists denote the same ring when their names agree.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
bool same_vars(const VarList& a, const VarList& b);

struct Term {
  MultiIndex exponents;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponents == b.exponents && a.coeff == b.coeff;
  }
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted by GrlexGreater with no zero coefficients, so two
/// equal polynomials have identical term lists. A polynomial built from a bare
/// rational (no VarList) is an unbound constant: it combines with a
/// polynomial of any ring and adopts that ring.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(VarList vars);
  Polynomial(VarList vars, const Rational& c);

  static Polynomial variable(const VarList& vars, std::size_t k);
  static Polynomial variable(const VarList& vars, std::string_view name);
  static Polynomial monomial(const VarList& vars, const MultiIndex& e, const Rational& c);
  /// Sorts, merges equal exponents and drops zeros.
  static Polynomial from_terms(const VarList& vars, std::vector<Term> terms);

  const VarList& vars() const { return vars_; }
  bool bound() const { return vars_ != nullptr; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t k) const;
  bool is_homogeneous() const;

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coeff; }
  Rational coefficient(const MultiIndex& e) const;

  Polynomial homogeneous_part(unsigned d) const;
  /// Drops all terms of total degree > max_degree.
  Polynomial truncated(unsigned max_degree) const;
  /// Re-expresses this polynomial over `target`, matching variables by name.
  Polynomial rebound(const VarList& target) const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned n) const;

  Polynomial derivative(std::size_t k) const;
  /// Hasse derivative D_I = (1/I!) d^I: u^J maps to prod_k C(j_k, i_k) u^(J-I).
  Polynomial hasse(const MultiIndex& i) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes values[k] for variable k. All values must share one ring
  /// (unbound constants allowed); the result lives in that ring.
  Polynomial substitute(std::span<const Polynomial> values) const;

  /// Coefficients as a polynomial in variable k: degree -> coefficient
  /// (still over this ring, free of variable k).
  std::map<unsigned, Polynomial> coefficients_in(std::size_t k) const;

  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  friend class PolynomialAccess;
  VarList vars_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws InternalError when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (recursive primitive PRS).
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Monic gcd of the coefficients of p seen as a polynomial in variable k.
Polynomial content_in(const Polynomial& p, std::size_t k);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace oscform
