#include "oscform/univariate.hpp"

#include <algorithm>

#include "oscform/errors.hpp"

namespace oscform {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UPoly UPoly::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly out = *this;
  const Rational lc = c_.back();
  for (Rational& x : out.c_) x /= lc;
  return out;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& s) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    const bool negative = sgn(c_[i]) < 0;
    const Rational mag = abs(c_[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (Rational& x : out.c_) x = -x;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("univariate division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lc = b.leading_coefficient();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lc;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0(Rational(1)), s1;
  UPoly t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
  const Rational lc = r0.leading_coefficient();
  const UPoly inv(Rational(1) / lc);
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

}  // namespace oscform
