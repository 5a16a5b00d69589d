#include "oscform/jets.hpp"

#include <algorithm>
#include <cctype>

#include "oscform/errors.hpp"
#include "oscform/series.hpp"

namespace oscform {

Parameterization Parameterization::make(const std::vector<std::string>& params, std::vector<RationalFunction> coords,
                                        std::string label) {
  if (params.empty()) throw PreconditionError("a parameterization needs at least one parameter");
  if (coords.size() < params.size() + 1) {
    throw PreconditionError("a parameterization with " + std::to_string(params.size()) + " parameters needs at least " +
                            std::to_string(params.size() + 1) + " coordinates");
  }
  Parameterization f;
  f.params = make_vars(params);
  bool all_zero = true;
  for (RationalFunction& c : coords) {
    c = c.rebound(f.params);
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) throw PreconditionError("all coordinates are zero");
  f.coords = std::move(coords);
  f.label = std::move(label);
  return f;
}

std::vector<MultiIndex> jet_rows(std::size_t r, unsigned m) { return multi_indices_up_to(r, m); }

JetTable::JetTable(const Parameterization& f) : f_(std::make_shared<const Parameterization>(f)) {}

const std::vector<RationalFunction>& JetTable::row(const MultiIndex& i) {
  if (i.size() != f_->dim()) throw PreconditionError("multi-index length does not match the parameter count");
  auto it = rows_.find(i);
  if (it != rows_.end()) return it->second;
  std::vector<RationalFunction> out;
  if (i.degree() == 0) {
    out = f_->coords;
  } else {
    std::size_t k = 0;
    while (i[k] == 0) ++k;
    const MultiIndex lower = i.decremented(k);
    const std::vector<RationalFunction> base = row(lower);
    const Rational scale = Rational(1, i[k]);
    out.reserve(base.size());
    for (const RationalFunction& x : base) out.push_back(x.derivative(k) * RationalFunction(scale));
  }
  return rows_.emplace(i, std::move(out)).first->second;
}

namespace {

template <class Rows>
Matrix<RationalFunction> build_generic(JetTable& table, const Rows& rows) {
  const std::size_t cols = table.parameterization().coords.size();
  Matrix<RationalFunction> out(rows.size(), cols, RationalFunction(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& values = table.row(rows[i]);
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = values[j];
  }
  return out;
}

template <class Rows>
Matrix<Rational> build_at(JetTable& table, const Rows& rows, const Point& at) {
  const Parameterization& f = table.parameterization();
  if (at.size() != f.dim()) {
    throw PreconditionError("point has " + std::to_string(at.size()) + " coordinates, expected " + std::to_string(f.dim()));
  }
  const std::size_t cols = f.coords.size();
  Matrix<Rational> out(rows.size(), cols, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& values = table.row(rows[i]);
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = values[j].evaluate(at);
  }
  return out;
}

void require_order(const Parameterization& f, unsigned m) {
  if (f.truncation_order && m > *f.truncation_order) {
    throw PreconditionError("order " + std::to_string(m) + " exceeds the truncation order " +
                            std::to_string(*f.truncation_order) + " of the series chart");
  }
}

// A cut series has the right derivatives only at its center.
void require_center(const Parameterization& f, const Point* at) {
  if (!f.truncation_order) return;
  const bool centered = at && std::all_of(at->begin(), at->end(), [](const Rational& q) { return sgn(q) == 0; });
  if (!centered) throw PreconditionError("a series chart can only be evaluated at its center (all parameters 0)");
}

}  // namespace

Matrix<RationalFunction> jet_matrix(JetTable& table, unsigned m) {
  require_order(table.parameterization(), m);
  require_center(table.parameterization(), nullptr);
  return build_generic(table, jet_rows(table.parameterization().dim(), m));
}

Matrix<RationalFunction> jet_matrix(const Parameterization& f, unsigned m) {
  JetTable table(f);
  return jet_matrix(table, m);
}

Matrix<Rational> jet_matrix(JetTable& table, unsigned m, const Point& at) {
  require_order(table.parameterization(), m);
  require_center(table.parameterization(), &at);
  return build_at(table, jet_rows(table.parameterization().dim(), m), at);
}

Matrix<Rational> jet_matrix(const Parameterization& f, unsigned m, const Point& at) {
  JetTable table(f);
  return jet_matrix(table, m, at);
}

Matrix<RationalFunction> top_jet_block(JetTable& table, unsigned m) {
  require_order(table.parameterization(), m);
  require_center(table.parameterization(), nullptr);
  return build_generic(table, multi_indices_of_degree(table.parameterization().dim(), m));
}

Matrix<Rational> top_jet_block(JetTable& table, unsigned m, const Point& at) {
  require_order(table.parameterization(), m);
  require_center(table.parameterization(), &at);
  return build_at(table, multi_indices_of_degree(table.parameterization().dim(), m), at);
}

bool is_immersive_at(JetTable& table, const Point& at) {
  return rank(jet_matrix(table, 1, at)) == table.parameterization().dim() + 1;
}

Point PointSampler::next(std::size_t n) {
  Point p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<long>(rng_() % 60) + 1;
    const auto sign = (rng_() % 2 == 0) ? 1L : -1L;
    const auto b = static_cast<long>(rng_() % 7) + 1;
    Rational q(sign * a, b);
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

std::string to_string(RankMode mode) {
  switch (mode) {
    case RankMode::kSampled:
      return "generic-sampled";
    case RankMode::kSymbolic:
      return "generic-symbolic";
    case RankMode::kPoint:
      return "point";
  }
  return "unknown";
}

SampledRank sampled_rank(const Matrix<RationalFunction>& m, std::size_t nvars, PointSampler& sampler) {
  constexpr int kMaxAttempts = 12;
  SampledRank out;
  int hits = 0;
  for (int attempt = 0; attempt < kMaxAttempts && hits < 2; ++attempt) {
    const Point p = sampler.next(nvars);
    Matrix<Rational> value;
    try {
      value = evaluate(m, p);
    } catch (const DenominatorVanishes&) {
      continue;
    }
    const std::size_t r = rank(value);
    out.points.push_back(p);
    if (r > out.rank) {
      out.rank = r;
      hits = 1;
    } else if (r == out.rank) {
      ++hits;
    }
  }
  if (out.points.empty()) throw DomainError("every sampled point hit a vanishing denominator");
  return out;
}

OsculatingProfile osculating_profile(const Parameterization& f, unsigned m_max, const ProfileOptions& options) {
  if (m_max < 1) throw PreconditionError("the profile needs m_max >= 1");
  require_order(f, m_max);
  JetTable table(f);
  OsculatingProfile out;
  if (options.at) {
    out.mode = RankMode::kPoint;
    out.point = options.at;
    for (unsigned i = 0; i <= m_max; ++i) out.dims.push_back(rank(jet_matrix(table, i, *options.at)) - 1);
    return out;
  }
  if (options.symbolic) {
    out.mode = RankMode::kSymbolic;
    for (unsigned i = 0; i <= m_max; ++i) out.dims.push_back(rank(jet_matrix(table, i)) - 1);
    return out;
  }
  out.mode = RankMode::kSampled;
  PointSampler sampler(options.seed);
  for (unsigned i = 0; i <= m_max; ++i) {
    const SampledRank s = sampled_rank(jet_matrix(table, i), f.dim(), sampler);
    out.dims.push_back(s.rank - 1);
    for (const Point& p : s.points) {
      if (std::find(out.sampled_points.begin(), out.sampled_points.end(), p) == out.sampled_points.end()) {
        out.sampled_points.push_back(p);
      }
    }
  }
  return out;
}

Subspace<Rational> osculating_space(const Parameterization& f, unsigned m, const Point& at) {
  return row_space(jet_matrix(f, m, at));
}

namespace {

template <class F>
void check_chain(const std::vector<Subspace<F>>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i - 1].contains(chain[i])) {
      throw ChainBroken("kernel K_" + std::to_string(i) + " is not contained in K_" + std::to_string(i - 1));
    }
  }
}

}  // namespace

std::vector<Subspace<RationalFunction>> kernel_chain(const Parameterization& f, unsigned m) {
  JetTable table(f);
  std::vector<Subspace<RationalFunction>> chain;
  for (unsigned i = 0; i <= m; ++i) chain.push_back(kernel_basis(jet_matrix(table, i)));
  check_chain(chain);
  return chain;
}

std::vector<Subspace<Rational>> kernel_chain(const Parameterization& f, unsigned m, const Point& at) {
  JetTable table(f);
  std::vector<Subspace<Rational>> chain;
  for (unsigned i = 0; i <= m; ++i) chain.push_back(kernel_basis(jet_matrix(table, i, at)));
  check_chain(chain);
  return chain;
}

void validate(const ImplicitVariety& iv) {
  if (!iv.coords || iv.coords->size() < 2) throw ConsistencyError("implicit variety needs at least two coordinates");
  if (iv.point.size() != iv.coords->size()) {
    throw ConsistencyError("point has " + std::to_string(iv.point.size()) + " coordinates, expected " +
                           std::to_string(iv.coords->size()));
  }
  if (std::all_of(iv.point.begin(), iv.point.end(), [](const Rational& q) { return sgn(q) == 0; })) {
    throw ConsistencyError("the zero vector is not a projective point");
  }
  if (iv.equations.size() >= iv.coords->size() - 1) {
    throw ConsistencyError("too many equations for a positive-dimensional complete intersection");
  }
  for (const Polynomial& g : iv.equations) {
    if (g.is_zero()) throw ConsistencyError("zero equation");
    if (!g.is_homogeneous()) throw ConsistencyError("equation '" + g.to_string() + "' is not homogeneous");
    if (sgn(g.evaluate(iv.point)) != 0) {
      throw PointNotOnVariety("the point does not satisfy '" + g.to_string() + "'");
    }
  }
}

namespace {

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string lowercase(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

Parameterization jet_parameterize(const ImplicitVariety& iv, unsigned order, const JetParameterizeOptions& options) {
  validate(iv);
  if (order < 1) throw PreconditionError("jet parameterization needs order >= 1");
  const std::size_t n_coords = iv.coords->size();
  const std::size_t c = iv.equations.size();

  std::size_t chart = 0;
  while (sgn(iv.point[chart]) == 0) ++chart;
  Point p = iv.point;
  for (Rational& q : p) q /= iv.point[chart];

  // Affine coordinates are every index except the chart index.
  std::vector<std::size_t> affine;
  for (std::size_t j = 0; j < n_coords; ++j) {
    if (j != chart) affine.push_back(j);
  }
  const std::size_t r = affine.size() - c;

  Matrix<Rational> jac(c, n_coords, Rational(0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < n_coords; ++j) jac(i, j) = iv.equations[i].derivative(j).evaluate(p);
  }

  const auto block_invertible = [&](const std::vector<std::size_t>& free) {
    std::vector<std::size_t> dep;
    for (std::size_t j : affine) {
      if (std::find(free.begin(), free.end(), j) == free.end()) dep.push_back(j);
    }
    Matrix<Rational> b(c, c, Rational(0));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k < c; ++k) b(i, k) = jac(i, dep[k]);
    }
    return rank(b) == c;
  };

  std::vector<std::size_t> free;
  if (options.free_coordinates) {
    free = *options.free_coordinates;
    std::sort(free.begin(), free.end());
    if (free.size() != r || std::adjacent_find(free.begin(), free.end()) != free.end()) {
      throw PreconditionError("expected " + std::to_string(r) + " distinct free coordinates");
    }
    for (std::size_t j : free) {
      if (j >= n_coords || j == chart) throw PreconditionError("free coordinate " + std::to_string(j) + " is not an affine coordinate of the chart");
    }
    if (!block_invertible(free)) throw SingularPoint("the Jacobian block of the chosen dependent coordinates is singular");
  } else {
    if (rank(jac) < c) throw SingularPoint("the equations have a rank-deficient Jacobian at the point");
    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    bool found = false;
    do {
      std::vector<std::size_t> candidate;
      for (std::size_t i : comb) candidate.push_back(affine[i]);
      if (block_invertible(candidate)) {
        free = candidate;
        found = true;
        break;
      }
    } while (next_combination(comb, affine.size()));
    if (!found) throw SingularPoint("no choice of free coordinates has an invertible Jacobian block");
  }
  std::vector<std::size_t> dep;
  for (std::size_t j : affine) {
    if (std::find(free.begin(), free.end(), j) == free.end()) dep.push_back(j);
  }

  std::vector<std::string> param_names;
  for (std::size_t j : free) param_names.push_back(lowercase((*iv.coords)[j]));
  const VarList params = make_vars(param_names);
  std::vector<std::string> system_names = param_names;
  for (std::size_t j : dep) system_names.push_back("_z" + std::to_string(j));
  const VarList system_ring = make_vars(system_names);

  // X_chart = 1, X_free = p + u, X_dep = p + z.
  std::vector<Polynomial> shifted(n_coords);
  shifted[chart] = Polynomial(system_ring, Rational(1));
  for (std::size_t k = 0; k < free.size(); ++k) {
    shifted[free[k]] = Polynomial::variable(system_ring, k) + Polynomial(system_ring, p[free[k]]);
  }
  for (std::size_t k = 0; k < dep.size(); ++k) {
    shifted[dep[k]] = Polynomial::variable(system_ring, r + k) + Polynomial(system_ring, p[dep[k]]);
  }
  std::vector<Polynomial> system;
  for (const Polynomial& g : iv.equations) system.push_back(g.substitute(shifted));

  const std::vector<Polynomial> solution = newton_series_solve(system, params, order);

  std::vector<RationalFunction> coords(n_coords);
  coords[chart] = RationalFunction(Polynomial(params, Rational(1)));
  for (std::size_t k = 0; k < free.size(); ++k) {
    coords[free[k]] = RationalFunction(Polynomial::variable(params, k) + Polynomial(params, p[free[k]]));
  }
  for (std::size_t k = 0; k < dep.size(); ++k) {
    coords[dep[k]] = RationalFunction(solution[k] + Polynomial(params, p[dep[k]]));
  }
  Parameterization out = Parameterization::make(param_names, std::move(coords), iv.label);
  out.truncation_order = order;
  return out;
}

}  // namespace oscform
