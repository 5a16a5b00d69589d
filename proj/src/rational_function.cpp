#include "oscform/rational_function.hpp"

#include <utility>

#include "oscform/errors.hpp"

namespace oscform {

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {
  if (num_.bound()) den_ = Polynomial(num_.vars(), Rational(1));
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    const VarList v = vars();
    num_ = Polynomial(v);
    den_ = Polynomial(v, Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  // Keep both halves in the same ring.
  if (num_.bound() && !den_.bound()) den_ = den_.rebound(num_.vars());
  if (den_.bound() && !num_.bound()) num_ = num_.rebound(den_.vars());
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionError("'" + to_string() + "' is not constant");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::rebound(const VarList& target) const {
  RationalFunction out;
  out.num_ = num_.rebound(target);
  out.den_ = den_.rebound(target);
  return out;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.bound() ? den_.evaluate(point) : den_.constant_term();
  if (sgn(d) == 0) throw DenominatorVanishes(den_.to_string());
  const Rational n = num_.bound() ? num_.evaluate(point) : num_.constant_term();
  return n / d;
}

RationalFunction RationalFunction::derivative(std::size_t k) const {
  if (den_.is_constant()) {
    RationalFunction out;
    out.num_ = num_.derivative(k).scaled(1 / den_.constant_term());
    out.den_ = Polynomial(num_.vars(), Rational(1));
    return out;
  }
  return RationalFunction(num_.derivative(k) * den_ - num_ * den_.derivative(k), den_ * den_);
}

RationalFunction RationalFunction::hasse(const MultiIndex& i) const {
  if (den_.is_constant()) {
    RationalFunction out;
    out.num_ = num_.hasse(i).scaled(1 / den_.constant_term());
    out.den_ = Polynomial(num_.vars(), Rational(1));
    return out;
  }
  RationalFunction d = *this;
  for (std::size_t k = 0; k < i.size(); ++k) {
    for (unsigned c = 0; c < i[k]; ++c) d = d.derivative(k);
  }
  const Integer f = factorial_product(i);
  if (f != 1) d.num_ = d.num_.scaled(Rational(1) / Rational(f));
  return d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  const auto wrap = [](const Polynomial& p) {
    return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_ || (den_.is_constant() && o.den_.is_constant() && den_.constant_term() == o.den_.constant_term())) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    const VarList v = vars() ? vars() : o.vars();
    num_ = Polynomial(v);
    den_ = Polynomial(v, Rational(1));
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = (num_ * o.num_).scaled(1 / (den_.constant_term() * o.den_.constant_term()));
    den_ = Polynomial(num_.vars(), Rational(1));
    return *this;
  }
  // Cross-cancel first so the products stay small.
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  num_ = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  den_ = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  RationalFunction inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this *= inv;
}

}  // namespace oscform
