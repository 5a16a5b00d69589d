#include "oscform/series.hpp"

#include <algorithm>

#include "oscform/errors.hpp"
#include "oscform/matrix.hpp"

namespace oscform {

Polynomial substitute_truncated(const Polynomial& p, std::span<const Polynomial> values, unsigned max_degree) {
  if (values.size() != p.nvars()) throw VariableMismatch("substitution has the wrong number of values");
  VarList ring;
  for (const Polynomial& v : values) {
    if (v.bound()) ring = v.vars();
  }
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  Polynomial sum(ring);
  for (const Term& t : p.terms()) {
    Polynomial v(ring, t.coeff);
    for (std::size_t k = 0; k < p.nvars() && !v.is_zero(); ++k) {
      const unsigned e = t.exponents[k];
      if (e == 0) continue;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(Polynomial(ring, Rational(1)));
      while (pk.size() <= e) pk.push_back((pk.back() * values[k]).truncated(max_degree));
      v = (v * pk[e]).truncated(max_degree);
    }
    sum += v;
  }
  return sum;
}

Polynomial series_reciprocal(const Polynomial& a, unsigned order) {
  const Rational c = a.constant_term();
  if (sgn(c) == 0) throw DomainError("series reciprocal of a function vanishing at the origin");
  Polynomial w(a.vars(), 1 / c);
  unsigned precision = 1;
  while (precision <= order) {
    precision = std::min(2 * precision, order + 1);
    const Polynomial aw = (a.truncated(precision - 1) * w).truncated(precision - 1);
    w = (w * (Polynomial(a.vars(), Rational(2)) - aw)).truncated(precision - 1);
  }
  return w;
}

namespace {

using SeriesMatrix = std::vector<std::vector<Polynomial>>;

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b, unsigned max_degree) {
  const std::size_t n = a.size();
  const std::size_t m = b.front().size();
  SeriesMatrix out(n, std::vector<Polynomial>(m, Polynomial(a[0][0].vars())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += (a[i][k] * b[k][j]).truncated(max_degree);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Polynomial> newton_series_solve(const std::vector<Polynomial>& equations, const VarList& params,
                                            unsigned order) {
  const std::size_t c = equations.size();
  const std::size_t r = params->size();
  if (c == 0) return {};
  const VarList ring = equations.front().vars();
  if (!ring || ring->size() != r + c) throw PreconditionError("series system needs one unknown per equation");
  for (const Polynomial& g : equations) {
    if (!same_vars(g.vars(), ring)) throw VariableMismatch("series equations live in different rings");
  }

  const Point origin(r + c, Rational(0));
  for (const Polynomial& g : equations) {
    if (sgn(g.evaluate(origin)) != 0) throw PointNotOnVariety("equation '" + g.to_string() + "' does not vanish at the base point");
  }

  std::vector<std::vector<Polynomial>> jac(c, std::vector<Polynomial>(c));
  Matrix<Rational> j0(c, c, Rational(0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      jac[i][k] = equations[i].derivative(r + k);
      j0(i, k) = jac[i][k].evaluate(origin);
    }
  }
  const auto j0inv = inverse(j0);
  if (!j0inv) throw SingularPoint("the Jacobian block of the dependent coordinates is not invertible");

  const Polynomial zero(params);
  std::vector<Polynomial> values;
  for (std::size_t k = 0; k < r; ++k) values.push_back(Polynomial::variable(params, k));
  for (std::size_t k = 0; k < c; ++k) values.push_back(zero);

  SeriesMatrix jinv(c, std::vector<Polynomial>(c, zero));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < c; ++k) jinv[i][k] = Polynomial(params, (*j0inv)(i, k));
  }

  unsigned precision = 1;
  while (precision <= order) {
    const unsigned target = std::min(2 * precision, order + 1);
    const unsigned cut = target - 1;
    SeriesMatrix residual(c, std::vector<Polynomial>(1, zero));
    for (std::size_t i = 0; i < c; ++i) residual[i][0] = substitute_truncated(equations[i], values, cut);
    const SeriesMatrix step = multiply(jinv, residual, cut);
    for (std::size_t k = 0; k < c; ++k) values[r + k] -= step[k][0];
    precision = target;
    if (precision > order) break;

    SeriesMatrix jz(c, std::vector<Polynomial>(c, zero));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < c; ++k) jz[i][k] = substitute_truncated(jac[i][k], values, cut);
    }
    SeriesMatrix defect = multiply(jz, jinv, cut);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < c; ++k) {
        defect[i][k] = -defect[i][k];
        if (i == k) defect[i][k] += Polynomial(params, Rational(1));
      }
    }
    const SeriesMatrix correction = multiply(jinv, defect, cut);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < c; ++k) jinv[i][k] += correction[i][k];
    }
  }

  for (const Polynomial& g : equations) {
    if (!substitute_truncated(g, values, order).is_zero()) {
      throw InternalError("series solution leaves a residual below the requested order");
    }
  }
  return {values.begin() + static_cast<std::ptrdiff_t>(r), values.end()};
}

}  // namespace oscform
