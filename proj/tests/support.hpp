#pragma once

#include <random>
#include <string>
#include <vector>

#include "oscform/expression.hpp"
#include "oscform/fundforms.hpp"
#include "oscform/jets.hpp"
#include "oscform/ruled.hpp"

namespace oscform::testing {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long bound = 9, long max_den = 4) {
  Rational q(random_int(rng, -bound, bound), random_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Point random_point(Rng& rng, std::size_t n) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng));
  return p;
}

inline Parameterization chart(const std::vector<std::string>& params, const std::vector<std::string>& coords,
                              const std::string& label = {}) {
  const VarList vars = make_vars(params);
  std::vector<RationalFunction> c;
  for (const std::string& s : coords) c.push_back(parse_expression(s, vars));
  return Parameterization::make(params, c, label);
}

inline Parameterization togliatti() {
  return chart({"x", "y"}, {"1", "x", "y", "x*y^2", "x^2*y", "x^2*y^2"}, "togliatti");
}

inline Parameterization shifrin() {
  return chart({"x", "y"},
               {"1", "x + y^2", "y", "y^3 + 3*x*y", "y^4 + 6*x*y^2 + 3*x^2", "y^5 + 10*x*y^3 + 15*x^2*y"}, "shifrin");
}

inline Parameterization twisted_cubic() { return chart({"t"}, {"1", "t", "t^2", "t^3"}, "twisted-cubic"); }

inline Parameterization veronese() { return chart({"x", "y"}, {"1", "x", "y", "x^2", "x*y", "y^2"}, "veronese"); }

/// Integer coefficients in [-3, 3], at most `terms` terms of degree <= max_degree.
inline Polynomial random_polynomial(const VarList& vars, unsigned max_degree, std::size_t terms, Rng& rng) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<unsigned> e(vars->size(), 0);
    const unsigned d = static_cast<unsigned>(random_int(rng, 0, max_degree));
    for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(vars->size()) - 1))];
    out.push_back(Term{MultiIndex(e), Rational(random_int(rng, -3, 3))});
  }
  return Polynomial::from_terms(vars, out);
}

/// (1 : u_1 : ... : u_r : random polynomials), immersive everywhere.
inline Parameterization random_chart(Rng& rng, std::size_t r, std::size_t ambient, unsigned max_degree) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("u" + std::to_string(i + 1));
  const VarList vars = make_vars(names);
  std::vector<RationalFunction> coords{RationalFunction(Polynomial(vars, Rational(1)))};
  for (std::size_t i = 0; i < r; ++i) coords.emplace_back(Polynomial::variable(vars, i));
  while (coords.size() < ambient + 1) {
    Polynomial p = random_polynomial(vars, max_degree, 4, rng);
    if (p.total_degree() < 2) p += Polynomial::variable(vars, 0).pow(2);
    coords.emplace_back(p);
  }
  return Parameterization::make(names, coords, "random");
}

/// Coordinates a_j(u) + sum_k t_k b_jk(u) led by 1, the base parameters and
/// the fiber parameters.
inline RuledParameterization random_ruled(Rng& rng, std::size_t n, std::size_t e, unsigned base_degree,
                                          std::size_t extra) {
  std::vector<std::string> names;
  std::vector<std::string> fiber;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  for (std::size_t k = 0; k < e; ++k) {
    names.push_back("t" + std::to_string(k + 1));
    fiber.push_back(names.back());
  }
  const VarList all = make_vars(names);
  std::vector<std::string> base_names(names.begin(), names.begin() + static_cast<long>(n));
  const VarList base = make_vars(base_names);
  std::vector<RationalFunction> coords{RationalFunction(Polynomial(all, Rational(1)))};
  for (std::size_t i = 0; i < n + e; ++i) coords.emplace_back(Polynomial::variable(all, i));
  for (std::size_t j = 0; j < extra; ++j) {
    Polynomial c = random_polynomial(base, base_degree, 3, rng).rebound(all);
    for (std::size_t k = 0; k < e; ++k) {
      c += random_polynomial(base, base_degree, 3, rng).rebound(all) * Polynomial::variable(all, n + k);
    }
    coords.emplace_back(c);
  }
  return RuledParameterization::make(Parameterization::make(names, coords, "random-ruled"), fiber);
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> rows_of(const Matrix<Rational>& m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

/// d/du_k term by term.
inline Polynomial naive_partial(const Polynomial& p, std::size_t k) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.exponents[k] == 0) continue;
    out.push_back(Term{t.exponents.decremented(k), t.coeff * t.exponents[k]});
  }
  return p.bound() ? Polynomial::from_terms(p.vars(), out) : Polynomial();
}

/// Sum of coeff * prod point_k^e_k over the terms.
inline Rational naive_evaluate(const Polynomial& p, const Point& at) {
  Rational sum = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < at.size(); ++k) {
      for (unsigned e = 0; e < t.exponents[k]; ++e) v *= at[k];
    }
    sum += v;
  }
  return sum;
}

/// (1/I!) d^I p through repeated single partials.
inline Polynomial naive_hasse(const Polynomial& p, const MultiIndex& i) {
  Polynomial out = p;
  Integer scale = 1;
  for (std::size_t k = 0; k < i.size(); ++k) {
    for (unsigned e = 1; e <= i[k]; ++e) {
      out = naive_partial(out, k);
      scale *= e;
    }
  }
  return out.scaled(Rational(1) / Rational(scale));
}

/// Jet matrix at a point by naive differentiation; every coordinate must be
/// a polynomial (constant denominator).
/// Rows: |I| <= m, degree ascending, graded-lex descending within a degree.
inline std::vector<std::vector<Rational>> naive_jet_rows(const Parameterization& f, unsigned m, const Point& at) {
  std::vector<std::vector<Rational>> rows;
  for (unsigned d = 0; d <= m; ++d) {
    for (const MultiIndex& i : multi_indices_of_degree(f.dim(), d)) {
      std::vector<Rational> row;
      for (const RationalFunction& x : f.coords) row.push_back(naive_evaluate(naive_hasse(x.numerator(), i), at) /
                                                               naive_evaluate(x.denominator(), at));
      rows.push_back(row);
    }
  }
  return rows;
}

/// s(m) at a point of a polynomial chart, from the naive jet matrix.
inline long naive_s(const Parameterization& f, unsigned m, const Point& at) {
  return static_cast<long>(naive_rank(naive_jet_rows(f, m, at))) - 1;
}

/// dim |Phi_m(x)| = s(m) - s(m-1) - 1 with both sides recomputed from the
/// naive jet matrix at the point.
inline bool dimension_law_at(const Parameterization& f, unsigned m, const Point& at,
                             const FundamentalForm<Rational>& ff) {
  const long dim = static_cast<long>(ff.system.size()) - 1;
  return ff.dimension_law_holds() && dim == naive_s(f, m, at) - naive_s(f, m - 1, at) - 1;
}

/// Generic version: the generic s is the largest naive rank over a few
/// random points.
inline bool dimension_law_generic(const Parameterization& f, unsigned m, const FundamentalForm<RationalFunction>& ff,
                                  Rng& rng) {
  long s_cur = -1;
  long s_prev = -1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const Point p = random_point(rng, f.dim());
    s_cur = std::max(s_cur, naive_s(f, m, p));
    s_prev = std::max(s_prev, naive_s(f, m - 1, p));
  }
  const long dim = static_cast<long>(ff.system.size()) - 1;
  return ff.dimension_law_holds() && dim == s_cur - s_prev - 1;
}

template <class F>
LinearSystem<F> forms(const LinearSystem<F>& like, const std::vector<std::string>& texts) {
  std::vector<Polynomial> ps;
  for (const std::string& t : texts) ps.push_back(parse_polynomial(t, like.form_ring()));
  return system_from_forms<F>(ps, like.params, like.tangent_vars, like.degree);
}

}  // namespace oscform::testing
