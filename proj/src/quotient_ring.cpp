#include "oscform/quotient_ring.hpp"

#include "oscform/errors.hpp"

namespace oscform {

namespace {

std::shared_ptr<const UPoly> checked_modulus(const UPoly& p) {
  if (p.degree() < 1) throw PreconditionError("quotient ring modulus must have positive degree");
  UPoly m = p.monic();
  if (gcd(m, m.derivative()).degree() > 0) throw PreconditionError("quotient ring modulus must be squarefree");
  return std::make_shared<const UPoly>(std::move(m));
}

void require_same(const QuotientRingElement& a, const QuotientRingElement& b) {
  if (a.modulus_ptr() != b.modulus_ptr() && a.modulus() != b.modulus()) {
    throw PreconditionError("quotient ring elements have different moduli");
  }
}

}  // namespace

QuotientRingElement::QuotientRingElement(const UPoly& modulus, const UPoly& value)
    : QuotientRingElement(checked_modulus(modulus), value) {}

QuotientRingElement::QuotientRingElement(const std::shared_ptr<const UPoly>& modulus, const UPoly& value)
    : modulus_(modulus), value_(divmod(value, *modulus).second) {}

QuotientRingElement QuotientRingElement::generator(const UPoly& modulus) {
  return QuotientRingElement(modulus, UPoly::monomial(1));
}

QuotientRingElement QuotientRingElement::inverse() const {
  const ExtendedGcd e = extended_gcd(value_, *modulus_);
  if (e.gcd.degree() != 0) {
    throw NotInvertible("'" + value_.to_string() + "' shares the factor '" + e.gcd.to_string() + "' with the modulus '" +
                        modulus_->to_string() + "'");
  }
  return {modulus_, e.x};
}

std::string QuotientRingElement::to_string() const { return value_.to_string(); }

QuotientRingElement QuotientRingElement::operator-() const { return {modulus_, -value_}; }

QuotientRingElement operator+(const QuotientRingElement& a, const QuotientRingElement& b) {
  require_same(a, b);
  return {a.modulus_, a.value_ + b.value_};
}

QuotientRingElement operator-(const QuotientRingElement& a, const QuotientRingElement& b) {
  require_same(a, b);
  return {a.modulus_, a.value_ - b.value_};
}

QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b) {
  require_same(a, b);
  return {a.modulus_, a.value_ * b.value_};
}

QuotientRingElement operator*(const Rational& a, const QuotientRingElement& b) {
  return {b.modulus_, UPoly(a) * b.value_};
}

bool operator==(const QuotientRingElement& a, const QuotientRingElement& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

}  // namespace oscform
