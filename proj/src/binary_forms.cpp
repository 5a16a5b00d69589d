#include "oscform/binary_forms.hpp"

#include "oscform/errors.hpp"

namespace oscform {

namespace {

void require_binary_form(const Polynomial& f, const char* what) {
  if (f.nvars() != 2) throw PreconditionError(std::string(what) + ": expected a form in exactly two variables");
  if (!f.is_homogeneous()) throw PreconditionError(std::string(what) + ": '" + f.to_string() + "' is not homogeneous");
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

BinaryDirection rational_direction(const Rational& a, const Rational& b) {
  BinaryDirection d;
  d.rational = {a, b};
  return d;
}

}  // namespace

Polynomial binary_form_gcd(const Polynomial& f, const Polynomial& g) {
  require_binary_form(f, "binary_form_gcd");
  require_binary_form(g, "binary_form_gcd");
  return gcd(f, g);
}

std::vector<Rational> binary_form_coefficients(const Polynomial& f) {
  require_binary_form(f, "binary form");
  if (f.is_zero()) return {};
  const unsigned d = static_cast<unsigned>(f.total_degree());
  std::vector<Rational> out(d + 1);
  for (const Term& t : f.terms()) out[t.exponents[1]] = t.coeff;
  return out;
}

Rational resultant_binary(const Polynomial& f, const Polynomial& g) {
  require_binary_form(f, "resultant_binary");
  require_binary_form(g, "resultant_binary");
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant_binary: zero form");
  const auto a = binary_form_coefficients(f);
  const auto b = binary_form_coefficients(g);
  const std::size_t p = a.size() - 1;
  const std::size_t q = b.size() - 1;
  if (p == 0 || q == 0) throw PreconditionError("resultant_binary: forms must have positive degree");
  const std::size_t n = p + q;
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = 0; k <= p; ++k) s[i][i + k] = a[k];
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k <= q; ++k) s[q + i][i + k] = b[k];
  }
  return determinant(std::move(s));
}

std::vector<BinaryDirection> binary_form_zeros(const Polynomial& f) {
  const auto c = binary_form_coefficients(f);
  if (c.empty()) throw PreconditionError("binary_form_zeros: zero form");
  std::vector<BinaryDirection> out;
  const std::size_t d = c.size() - 1;
  if (d == 0) return out;
  if (d > 2) throw UnsupportedAmbient("binary_form_zeros: forms of degree above 2 are not split");
  // f = c0 v1^d + c1 v1^(d-1) v2 + ...
  if (d == 1) {
    // c0 v1 + c1 v2 = 0 at (-c1 : c0)
    out.push_back(rational_direction(-c[1], c[0]));
    return out;
  }
  const Rational& a = c[0];
  const Rational& b = c[1];
  const Rational& cc = c[2];
  if (sgn(a) == 0) {
    // v2 (b v1 + cc v2)
    out.push_back(rational_direction(1, 0));
    if (sgn(b) != 0) out.push_back(rational_direction(-cc, b));
    return out;
  }
  // Zeros (x : 1) with a x^2 + b x + cc = 0.
  const Rational disc = b * b - 4 * a * cc;
  if (sgn(disc) == 0) {
    out.push_back(rational_direction(-b / (2 * a), 1));
    return out;
  }
  Rational root;
  if (is_rational_square(disc, root)) {
    out.push_back(rational_direction((-b + root) / (2 * a), 1));
    out.push_back(rational_direction((-b - root) / (2 * a), 1));
    return out;
  }
  const UPoly modulus = UPoly(std::vector<Rational>{cc / a, b / a, Rational(1)});
  BinaryDirection dir;
  dir.modulus = modulus;
  const QuotientRingElement s = QuotientRingElement::generator(modulus);
  dir.algebraic = {s, s.constant(1)};
  out.push_back(std::move(dir));
  return out;
}

QuotientRingElement evaluate_algebraic(const Polynomial& p, std::span<const QuotientRingElement> point) {
  if (point.size() != p.nvars()) throw VariableMismatch("point has the wrong number of coordinates");
  if (point.empty()) throw PreconditionError("evaluate_algebraic needs at least one coordinate");
  QuotientRingElement sum = point[0].constant(0);
  for (const Term& t : p.terms()) {
    QuotientRingElement v = point[0].constant(t.coeff);
    for (std::size_t k = 0; k < p.nvars(); ++k) {
      for (unsigned e = 0; e < t.exponents[k]; ++e) v = v * point[k];
    }
    sum = sum + v;
  }
  return sum;
}

}  // namespace oscform
