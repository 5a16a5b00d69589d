#include "oscform/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "oscform/errors.hpp"

namespace oscform {

VarList make_vars(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw VariableMismatch("duplicate variable name '" + names[i] + "'");
    }
  }
  if (names.size() > MultiIndex::kMaxVars) {
    throw PreconditionError("too many variables (max " + std::to_string(MultiIndex::kMaxVars) + ")");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

std::string describe(const VarList& v) {
  if (!v) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < v->size(); ++i) {
    if (i) s += ",";
    s += (*v)[i];
  }
  return s + ")";
}

VarList common_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.bound()) return b.vars();
  if (!b.bound()) return a.vars();
  if (!same_vars(a.vars(), b.vars())) {
    throw VariableMismatch("mismatched variable lists " + describe(a.vars()) + " and " + describe(b.vars()));
  }
  return a.vars();
}

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return GrlexGreater{}(x.exponents, y.exponents); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exponents == terms[i].exponents) {
      c += terms[j].coeff;
      ++j;
    }
    if (sgn(c) != 0) {
      terms[out].exponents = terms[i].exponents;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

/// Grants the free functions below access to the raw term storage.
class PolynomialAccess {
 public:
  static Polynomial make(VarList vars, std::vector<Term> sorted_terms) {
    Polynomial p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(sorted_terms);
    return p;
  }
  static std::vector<Term>& terms(Polynomial& p) { return p.terms_; }
  static void set_vars(Polynomial& p, VarList v) { p.vars_ = std::move(v); }
};

namespace {

/// Returns p expressed over `ring`; p must be over `ring` already or unbound.
Polynomial lift(const Polynomial& p, const VarList& ring) {
  if (!ring || p.bound()) return p;
  std::vector<Term> terms;
  for (const Term& t : p.terms()) terms.push_back({MultiIndex(ring->size()), t.coeff});
  return PolynomialAccess::make(ring, std::move(terms));
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({MultiIndex(0), c});
}

Polynomial::Polynomial(VarList vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VarList vars, const Rational& c) : vars_(std::move(vars)) {
  if (sgn(c) != 0) terms_.push_back({MultiIndex(nvars()), c});
}

Polynomial Polynomial::variable(const VarList& vars, std::size_t k) {
  if (!vars || k >= vars->size()) throw VariableMismatch("variable index out of range");
  MultiIndex e(vars->size());
  e.set(k, 1);
  return monomial(vars, e, Rational(1));
}

Polynomial Polynomial::variable(const VarList& vars, std::string_view name) {
  if (vars) {
    for (std::size_t k = 0; k < vars->size(); ++k) {
      if ((*vars)[k] == name) return variable(vars, k);
    }
  }
  throw VariableMismatch("unknown variable '" + std::string(name) + "'");
}

Polynomial Polynomial::monomial(const VarList& vars, const MultiIndex& e, const Rational& c) {
  Polynomial p(vars);
  if (e.size() != p.nvars()) throw VariableMismatch("exponent vector length does not match the ring");
  if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::from_terms(const VarList& vars, std::vector<Term> terms) {
  const std::size_t n = vars ? vars->size() : 0;
  for (const Term& t : terms) {
    if (t.exponents.size() != n) throw VariableMismatch("exponent vector length does not match the ring");
  }
  sort_and_combine(terms);
  return PolynomialAccess::make(vars, std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.degree() == 0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exponents.degree() == 0) return terms_.back().coeff;
  return Rational(0);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().exponents.degree());
}

int Polynomial::degree_in(std::size_t k) const {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.exponents[k]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().exponents.degree() == terms_.back().exponents.degree();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const MultiIndex& e) const {
  for (const Term& t : terms_) {
    if (t.exponents == e) return t.coeff;
  }
  return Rational(0);
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial out(vars_);
  for (const Term& t : terms_) {
    if (t.exponents.degree() == d) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial out(vars_);
  for (const Term& t : terms_) {
    if (t.exponents.degree() <= max_degree) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::rebound(const VarList& target) const {
  if (same_vars(vars_, target)) {
    Polynomial out = *this;
    out.vars_ = target;
    return out;
  }
  if (!bound()) return lift(*this, target);
  std::vector<std::size_t> slot(nvars());
  for (std::size_t k = 0; k < nvars(); ++k) {
    const auto it = std::find(target->begin(), target->end(), (*vars_)[k]);
    if (it == target->end()) {
      // A variable that does not occur may be dropped.
      if (degree_in(k) > 0) throw VariableMismatch("variable '" + (*vars_)[k] + "' missing from target ring");
      slot[k] = target->size();
    } else {
      slot[k] = static_cast<std::size_t>(it - target->begin());
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    MultiIndex e(target->size());
    for (std::size_t k = 0; k < nvars(); ++k) {
      if (slot[k] < target->size()) e.set(slot[k], t.exponents[k]);
    }
    terms.push_back({e, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading_coefficient());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(vars_);
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t k) const {
  if (!bound()) return Polynomial();
  if (k >= nvars()) throw VariableMismatch("derivative with respect to a variable outside the ring");
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    const unsigned e = t.exponents[k];
    if (e == 0) continue;
    terms.push_back({t.exponents.decremented(k), t.coeff * e});
  }
  // Differentiation preserves the grlex order of the surviving terms only
  // within a degree, so re-sort.
  return from_terms(vars_, std::move(terms));
}

Polynomial Polynomial::hasse(const MultiIndex& i) const {
  if (!bound()) return i.degree() == 0 ? *this : Polynomial();
  if (i.size() != nvars()) throw VariableMismatch("multi-index length does not match the ring");
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    if (!i.divides(t.exponents)) continue;
    terms.push_back({t.exponents - i, t.coeff * Rational(binomial_product(t.exponents, i))});
  }
  return from_terms(vars_, std::move(terms));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw VariableMismatch("point has the wrong number of coordinates");
  std::vector<std::vector<Rational>> powers(nvars(), std::vector<Rational>{Rational(1)});
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < nvars(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      auto& pk = powers[k];
      while (pk.size() <= e) pk.push_back(pk.back() * point[k]);
      v *= pk[e];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != nvars()) throw VariableMismatch("substitution has the wrong number of values");
  VarList ring;
  for (const Polynomial& v : values) {
    if (!v.bound()) continue;
    if (ring && !same_vars(ring, v.vars())) throw VariableMismatch("substituted values live in different rings");
    ring = v.vars();
  }
  std::vector<std::vector<Polynomial>> powers(nvars());
  Polynomial sum(ring);
  for (const Term& t : terms_) {
    Polynomial v(ring, t.coeff);
    for (std::size_t k = 0; k < nvars(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(Polynomial(ring, Rational(1)));
      while (pk.size() <= e) pk.push_back(pk.back() * lift(values[k], ring));
      v *= pk[e];
    }
    sum += v;
  }
  return sum;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(std::size_t k) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const Term& t : terms_) {
    MultiIndex e = t.exponents;
    const unsigned d = e[k];
    e.set(k, 0);
    buckets[d].push_back({e, t.coeff});
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, from_terms(vars_, std::move(terms)));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    std::string mono;
    for (std::size_t k = 0; k < nvars(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[k];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

void merge_add(std::vector<Term>& into, const std::vector<Term>& other, bool subtract) {
  std::vector<Term> out;
  out.reserve(into.size() + other.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const GrlexGreater before;
  while (i < into.size() || j < other.size()) {
    if (j == other.size() || (i < into.size() && before(into[i].exponents, other[j].exponents))) {
      out.push_back(std::move(into[i++]));
    } else if (i == into.size() || before(other[j].exponents, into[i].exponents)) {
      out.push_back(other[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(into[i].coeff - other[j].coeff) : Rational(into[i].coeff + other[j].coeff);
      if (sgn(c) != 0) out.push_back({into[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  into = std::move(out);
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  const VarList ring = common_ring(*this, o);
  if (!bound() && ring) *this = lift(*this, ring);
  if (o.is_zero()) return *this;
  merge_add(terms_, o.bound() ? o.terms_ : lift(o, ring).terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  const VarList ring = common_ring(*this, o);
  if (!bound() && ring) *this = lift(*this, ring);
  if (o.is_zero()) return *this;
  merge_add(terms_, o.bound() ? o.terms_ : lift(o, ring).terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const VarList ring = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  if (a.is_constant()) return lift(b, ring).scaled(a.terms_.front().coeff);
  if (b.is_constant()) return lift(a, ring).scaled(b.terms_.front().coeff);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) terms.push_back({x.exponents + y.exponents, x.coeff * y.coeff});
  }
  sort_and_combine(terms);
  return PolynomialAccess::make(ring, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.bound() && b.bound() && !same_vars(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    const MultiIndex& ea = a.terms_[i].exponents;
    const MultiIndex& eb = b.terms_[i].exponents;
    if (ea.size() == eb.size()) {
      if (ea != eb) return false;
    } else if (ea.degree() != 0 || eb.degree() != 0) {
      return false;
    }
  }
  return true;
}

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const VarList ring = common_ring(a, b);
  if (a.is_zero()) return Polynomial(ring);
  if (b.is_constant()) return lift(a, ring).scaled(1 / b.leading_coefficient());
  const Polynomial bb = lift(b, ring);
  const Term& lead = bb.leading_term();
  std::map<MultiIndex, Rational, GrlexGreater> rem;
  const Polynomial aa = lift(a, ring);
  for (const Term& t : aa.terms()) rem.emplace(t.exponents, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.exponents.divides(it->first)) return std::nullopt;
    const MultiIndex shift = it->first - lead.exponents;
    const Rational c = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < bb.terms().size(); ++k) {
      const Term& t = bb.terms()[k];
      const MultiIndex e = t.exponents + shift;
      auto [pos, inserted] = rem.try_emplace(e, 0);
      pos->second -= c * t.coeff;
      if (sgn(pos->second) == 0) rem.erase(pos);
    }
    quotient.push_back({shift, c});
  }
  // Quotient terms are produced in strictly decreasing order.
  return PolynomialAccess::make(ring, std::move(quotient));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide(a, b);
  if (!q) throw InternalError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *std::move(q);
}

namespace {

MultiIndex min_exponents(const Polynomial& p) {
  MultiIndex m = p.terms().front().exponents;
  for (const Term& t : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) m.set(k, std::min(m[k], t.exponents[k]));
  }
  return m;
}

Polynomial shift_down(const Polynomial& p, const MultiIndex& m) {
  if (m.degree() == 0) return p;
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.exponents = t.exponents - m;
  return PolynomialAccess::make(p.vars(), std::move(terms));
}

Polynomial primitive_part(const Polynomial& p, std::size_t k) {
  return divide_exact(p, content_in(p, k)).monic();
}

/// A multiple of the pseudo-remainder of a by b with respect to variable k.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t k) {
  const int db = b.degree_in(k);
  const auto bcoeffs = b.coefficients_in(k);
  const Polynomial& lcb = bcoeffs.at(static_cast<unsigned>(db));
  while (!a.is_zero()) {
    const int da = a.degree_in(k);
    if (da < db) break;
    const auto acoeffs = a.coefficients_in(k);
    const Polynomial& lca = acoeffs.at(static_cast<unsigned>(da));
    MultiIndex shift(a.nvars());
    shift.set(k, static_cast<unsigned>(da - db));
    const Polynomial g = gcd(lca, lcb);
    const Polynomial fa = divide_exact(lcb, g);
    const Polynomial fb = divide_exact(lca, g);
    a = fa * a - fb * Polynomial::monomial(b.vars(), shift, Rational(1)) * b;
  }
  return a;
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

}  // namespace

Polynomial content_in(const Polynomial& p, std::size_t k) {
  Polynomial g(p.vars());
  for (const auto& [d, c] : p.coefficients_in(k)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const VarList ring = common_ring(a, b);
  if (a.is_zero()) return lift(b, ring).monic();
  if (b.is_zero()) return lift(a, ring).monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(ring, Rational(1));
  const MultiIndex ma = min_exponents(a);
  const MultiIndex mb = min_exponents(b);
  MultiIndex m = ma;
  for (std::size_t k = 0; k < m.size(); ++k) m.set(k, std::min(ma[k], mb[k]));
  const Polynomial pa = shift_down(a, ma);
  const Polynomial pb = shift_down(b, mb);
  Polynomial core = (pa.is_constant() || pb.is_constant()) ? Polynomial(ring, Rational(1)) : gcd_core(pa, pb);
  return (core * Polynomial::monomial(ring, m, Rational(1))).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(common_ring(a, b));
  return divide_exact(a * b, gcd(a, b)).monic();
}

namespace {

Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  std::size_t best = n;
  int best_deg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const int da = a.degree_in(k);
    const int db = b.degree_in(k);
    if (da > 0 && db == 0) return gcd(content_in(a, k), b);
    if (db > 0 && da == 0) return gcd(a, content_in(b, k));
    if (da > 0 && db > 0) {
      const int d = std::max(da, db);
      if (best == n || d < best_deg) {
        best = k;
        best_deg = d;
      }
    }
  }
  if (best == n) return Polynomial(a.vars(), Rational(1));
  const std::size_t k = best;
  const Polynomial ca = content_in(a, k);
  const Polynomial cb = content_in(b, k);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = divide_exact(a, ca).monic();
  Polynomial q = divide_exact(b, cb).monic();
  if (p.degree_in(k) < q.degree_in(k)) std::swap(p, q);
  Polynomial g;
  while (true) {
    const Polynomial r = pseudo_remainder(p, q, k);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(k) == 0) {
      g = Polynomial(a.vars(), Rational(1));
      break;
    }
    p = std::move(q);
    q = primitive_part(r, k);
  }
  if (g.degree_in(k) > 0) g = primitive_part(g, k);
  return (c * g).monic();
}

}  // namespace

}  // namespace oscform
