#include "oscform/ruled.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "oscform/errors.hpp"
#include "oscform/series.hpp"

namespace oscform {

RuledParameterization RuledParameterization::make(const Parameterization& chart,
                                                  const std::vector<std::string>& fiber_params) {
  std::vector<std::string> base;
  for (const std::string& p : *chart.params) {
    if (std::find(fiber_params.begin(), fiber_params.end(), p) == fiber_params.end()) base.push_back(p);
  }
  for (const std::string& p : fiber_params) {
    if (std::find(chart.params->begin(), chart.params->end(), p) == chart.params->end()) {
      throw PreconditionError("fiber parameter '" + p + "' is not a parameter of the chart");
    }
  }
  if (base.empty()) throw PreconditionError("a ruled chart needs at least one base parameter");
  std::vector<std::string> names = base;
  names.insert(names.end(), fiber_params.begin(), fiber_params.end());

  RuledParameterization out;
  out.chart = Parameterization::make(names, chart.coords, chart.label);
  out.chart.truncation_order = chart.truncation_order;
  out.base_count = base.size();
  out.fiber_count = fiber_params.size();
  const std::size_t n = out.base_count;
  for (const RationalFunction& c : out.chart.coords) {
    for (std::size_t k = n; k < names.size(); ++k) {
      if (c.denominator().degree_in(k) > 0) {
        throw PreconditionError("coordinate " + c.to_string() + " has a denominator depending on a fiber parameter");
      }
    }
    for (const Term& t : c.numerator().terms()) {
      unsigned fiber_degree = 0;
      for (std::size_t k = n; k < names.size(); ++k) fiber_degree += t.exponents[k];
      if (fiber_degree > 1) {
        throw PreconditionError("coordinate " + c.to_string() + " is not affine-linear in the fiber parameters");
      }
    }
  }
  return out;
}

std::vector<std::string> RuledParameterization::tangent_names() const {
  std::vector<std::string> names;
  if (base_count == 1) {
    names.push_back("v");
  } else {
    for (std::size_t k = 0; k < base_count; ++k) names.push_back("v" + std::to_string(k + 1));
  }
  for (std::size_t k = 0; k < fiber_count; ++k) names.push_back("w" + std::to_string(k + 1));
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (std::find(chart.params->begin(), chart.params->end(), names[k]) != chart.params->end()) {
      names[k] = "d" + (*chart.params)[k];
    }
  }
  return names;
}

ScrollSpec ScrollSpec::make(std::vector<unsigned> degrees) {
  if (degrees.empty()) throw PreconditionError("a scroll needs at least one degree");
  if (std::any_of(degrees.begin(), degrees.end(), [](unsigned d) { return d == 0; })) {
    throw PreconditionError("scroll degrees must be positive");
  }
  std::sort(degrees.begin(), degrees.end());
  return ScrollSpec{std::move(degrees)};
}

std::size_t ScrollSpec::ambient_dim() const {
  std::size_t n = 0;
  for (unsigned d : degrees) n += d + 1;
  return n - 1;
}

RuledParameterization scroll(const ScrollSpec& spec) {
  std::vector<std::string> names{"t"};
  std::vector<std::string> fiber;
  for (std::size_t i = 1; i < spec.degrees.size(); ++i) fiber.push_back("s" + std::to_string(i));
  names.insert(names.end(), fiber.begin(), fiber.end());
  const VarList vars = make_vars(names);
  const Polynomial t = Polynomial::variable(vars, 0);
  std::vector<RationalFunction> coords;
  for (std::size_t i = 0; i < spec.degrees.size(); ++i) {
    const Polynomial lead = i == 0 ? Polynomial(vars, Rational(1)) : Polynomial::variable(vars, i);
    Polynomial power(vars, Rational(1));
    for (unsigned k = 0; k <= spec.degrees[i]; ++k) {
      coords.emplace_back(lead * power);
      power *= t;
    }
  }
  std::string label = "scroll";
  for (unsigned d : spec.degrees) label += "-" + std::to_string(d);
  return RuledParameterization::make(Parameterization::make(names, std::move(coords), label), fiber);
}

ScrollRankReport scroll_rank_check(const ScrollSpec& spec, unsigned m) {
  if (m < 1 || m > spec.degrees.front()) {
    throw PreconditionError("the scroll rank formula needs 1 <= m <= " + std::to_string(spec.degrees.front()));
  }
  const RuledParameterization f = scroll(spec);
  ScrollRankReport out;
  out.order = m;
  out.rank = rank(jet_matrix(f.chart, m));
  out.expected = m * (spec.fiber_count() + 1) + 1;
  out.match = out.rank == out.expected;
  return out;
}

PushdownReport scroll_pushdown_check(const ScrollSpec& spec, unsigned m, std::uint64_t seed) {
  const RuledParameterization f = scroll(spec);
  PointSampler sampler(seed);
  PushdownReport out;
  out.order = m;
  out.point = sampler.next(f.chart.dim());
  JetTable table(f.chart);
  std::vector<std::vector<Rational>> rows;
  for (unsigned k = 0; k <= m; ++k) {
    MultiIndex i(f.chart.dim());
    i.set(0, k);
    std::vector<Rational> row;
    for (const RationalFunction& x : table.row(i)) row.push_back(x.evaluate(out.point));
    rows.push_back(std::move(row));
  }
  std::size_t first = 0;
  for (unsigned d : spec.degrees) {
    Matrix<Rational> block(m + 1, d + 1, Rational(0));
    for (unsigned k = 0; k <= m; ++k) {
      for (unsigned c = 0; c <= d; ++c) block(k, c) = rows[k][first + c];
    }
    out.block_ranks.push_back(rank(block));
    out.rank += out.block_ranks.back();
    out.expected += std::min(m + 1, d + 1);
    first += d + 1;
  }
  out.match = out.rank == out.expected;
  return out;
}

namespace {

struct FiberSplit {
  std::size_t n;
  std::vector<MultiIndex> monos;

  unsigned base_degree(std::size_t i) const {
    unsigned d = 0;
    for (std::size_t k = 0; k < n; ++k) d += monos[i][k];
    return d;
  }
};

// True when every basis member has no monomials of base degree below `least`.
template <class F>
bool vanishes_to_order(const LinearSystem<F>& l, std::size_t n, unsigned least) {
  const FiberSplit split{n, multi_indices_of_degree(l.tangent_vars->size(), l.degree)};
  for (std::size_t i = 0; i < l.span.dim(); ++i) {
    const std::vector<F> c = l.span.vector(i);
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (!is_zero(c[t]) && split.base_degree(t) < least) return false;
    }
  }
  return true;
}

template <class F>
RulingReport ruling_report(const RuledParameterization& f, const FundamentalForm<F>& ff, unsigned m) {
  const LinearSystem<F>& l = ff.system;
  if (!ff.dimension_law_holds()) throw InternalError("fundamental form violates the dimension law");
  RulingReport out;
  out.order = m;
  out.size = l.size();
  out.all_members_contain_ruling = vanishes_to_order(l, f.base_count, 1);
  // Total degree m with fiber degree <= 1 is the same as base degree >= m-1.
  out.monomial_support_ok = vanishes_to_order(l, f.base_count, m - 1);
  if (f.base_count >= 2 && m >= 3) {
    out.singular_along_fiber = vanishes_to_order(jacobian_system(l), f.base_count, 1);
  }
  out.fixed_component = common_factor(l);
  out.generators = l.generators();
  return out;
}

}  // namespace

RulingReport ruling_fixed_component_check(const RuledParameterization& f, unsigned m, const std::optional<Point>& at) {
  if (m < 2) throw PreconditionError("the ruling check needs m >= 2");
  const auto names = f.tangent_names();
  if (at) return ruling_report(f, fundamental_form(f.chart, m, *at, names), m);
  return ruling_report(f, fundamental_form(f.chart, m, names), m);
}

DimBoundReport dim_bound_check(const RuledParameterization& f, unsigned m, const std::optional<Point>& at) {
  if (m < 2) throw PreconditionError("the dimension bound needs m >= 2");
  std::size_t size = 0;
  if (at) {
    const auto ff = fundamental_form(f.chart, m, *at, f.tangent_names());
    if (!ff.dimension_law_holds()) throw InternalError("fundamental form violates the dimension law");
    size = ff.system.size();
  } else {
    const auto ff = fundamental_form(f.chart, m, f.tangent_names());
    if (!ff.dimension_law_holds()) throw InternalError("fundamental form violates the dimension law");
    size = ff.system.size();
  }
  const auto n = static_cast<unsigned>(f.base_count);
  const Integer bound = binomial(n + m - 1, m) + Integer(static_cast<unsigned long>(f.fiber_count)) * binomial(n + m - 2, m - 1) - 1;
  DimBoundReport out;
  out.order = m;
  out.dim = static_cast<long>(size) - 1;
  out.bound = bound.get_si();
  out.ok = out.dim <= out.bound;
  out.attained = out.dim == out.bound;
  return out;
}

const Polynomial& MongeData::piece(unsigned d) const {
  if (d >= pieces.size()) {
    throw PreconditionError("Monge form computed only through order " + std::to_string(order));
  }
  return pieces[d];
}

namespace {

const std::vector<std::string> kMongeNames{"x1", "x2"};

void finish_monge(MongeData& md, Polynomial f) {
  for (unsigned d = 0; d <= 1; ++d) {
    if (!f.homogeneous_part(d).is_zero()) throw InternalError("Monge graph function has a constant or linear part");
  }
  md.f = std::move(f);
  for (unsigned d = 0; d <= md.order; ++d) md.pieces.push_back(md.f.homogeneous_part(d));
}

}  // namespace

MongeData monge_form(const Parameterization& f, const Point& at, unsigned order) {
  if (f.dim() != 2 || f.coords.size() != 4) throw NotASurfaceInP3("the Monge form needs a surface chart in P^3");
  if (order < 3) throw PreconditionError("the Monge form needs order >= 3");
  JetTable table(f);
  const Matrix<Rational> jets = jet_matrix(table, order, at);
  const auto rows = jet_rows(2, order);

  Matrix<Rational> frame(3, 4, Rational(0));
  for (std::size_t c = 0; c < 4; ++c) {
    frame(0, c) = jets(0, c);
    frame(1, c) = jets(1, c);
    frame(2, c) = jets(2, c);
  }
  if (rank(frame) < 3) throw SingularPoint("the chart is not immersive at the point");

  MongeData md;
  md.point = at;
  md.order = order;
  md.vars = make_vars(kMongeNames);
  std::optional<Matrix<Rational>> inv;
  for (std::size_t k = 0; k < 4 && !inv; ++k) {
    md.chart = Matrix<Rational>(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t c = 0; c < 3; ++c) md.chart(i, c) = frame(c, i);
      md.chart(i, 3) = i == k ? 1 : 0;
    }
    inv = inverse(md.chart);
  }

  const VarList u = make_vars({"_u1", "_u2"});
  std::vector<Polynomial> y(4, Polynomial(u));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Polynomial mono = Polynomial::monomial(u, rows[r], Rational(1));
    for (std::size_t i = 0; i < 4; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += (*inv)(i, j) * jets(r, j);
      if (sgn(s) != 0) y[i] += mono.scaled(s);
    }
  }
  const Polynomial reciprocal = series_reciprocal(y[0], order);
  std::vector<Polynomial> z;
  for (std::size_t i = 1; i < 4; ++i) z.push_back((y[i] * reciprocal).truncated(order));

  // Invert (z1, z2)(u) = (x1, x2) for u as a series in x.
  const VarList ring = make_vars({"x1", "x2", "_u1", "_u2"});
  std::vector<Polynomial> equations;
  for (std::size_t k = 0; k < 2; ++k) equations.push_back(z[k].rebound(ring) - Polynomial::variable(ring, k));
  const std::vector<Polynomial> inverse_series = newton_series_solve(equations, md.vars, order);
  finish_monge(md, substitute_truncated(z[2], inverse_series, order));
  return md;
}

MongeData monge_form(const ImplicitVariety& iv, unsigned order) {
  if (iv.coords->size() != 4 || iv.equations.size() != 1) {
    throw NotASurfaceInP3("the Monge form needs one equation in four homogeneous coordinates");
  }
  if (order < 3) throw PreconditionError("the Monge form needs order >= 3");
  validate(iv);
  const Polynomial& g = iv.equations.front();
  Matrix<Rational> gradient(1, 4, Rational(0));
  for (std::size_t k = 0; k < 4; ++k) gradient(0, k) = g.derivative(k).evaluate(iv.point);
  if (gradient.is_zero()) throw SingularPoint("the surface is singular at the point");

  // Frame: the point, two more vectors of the tangent plane, one vector off it.
  std::vector<std::vector<Rational>> frame{iv.point};
  const Subspace<Rational> plane = kernel_basis(gradient);
  for (std::size_t i = 0; i < plane.dim() && frame.size() < 3; ++i) {
    frame.push_back(plane.vector(i));
    if (rank(Matrix<Rational>::from_rows(frame, 4)) < frame.size()) frame.pop_back();
  }
  std::size_t off = 0;
  while (sgn(gradient(0, off)) == 0) ++off;
  std::vector<Rational> w(4, Rational(0));
  w[off] = 1;
  frame.push_back(w);

  MongeData md;
  md.point = iv.point;
  md.order = order;
  md.vars = make_vars(kMongeNames);
  md.chart = Matrix<Rational>::from_rows(frame, 4).transpose();

  const VarList ring = make_vars({"x1", "x2", "_y3"});
  std::vector<Polynomial> values;
  for (std::size_t i = 0; i < 4; ++i) {
    Polynomial v(ring, md.chart(i, 0));
    for (std::size_t c = 1; c < 4; ++c) v += Polynomial::variable(ring, c - 1).scaled(md.chart(i, c));
    values.push_back(std::move(v));
  }
  const Polynomial local = g.substitute(values);
  finish_monge(md, newton_series_solve({local}, md.vars, order).front());
  return md;
}

FubiniReport fubini_intersection_test(const MongeData& md) {
  const Polynomial& f2 = md.f2();
  const Polynomial& f3 = md.f3();
  if (f2.is_zero()) throw DegenerateSecondForm("the second fundamental form vanishes at the point");
  FubiniReport out;
  if (f3.is_zero()) {
    out.resultant = 0;
    out.intersects = true;
    out.common_factor = f2.monic();
    return out;
  }
  out.resultant = resultant_binary(f2, f3);
  out.intersects = sgn(out.resultant) == 0;
  out.common_factor = binary_form_gcd(f2, f3);
  return out;
}

namespace {

void require_direction(std::size_t size, bool all_zero) {
  if (size != 2) throw PreconditionError("a tangent direction has two entries");
  if (all_zero) throw PreconditionError("direction must be nonzero");
}

}  // namespace

std::optional<unsigned> line_contact_order(const MongeData& md, const std::vector<Rational>& direction) {
  require_direction(direction.size(), std::all_of(direction.begin(), direction.end(), [](const Rational& q) { return sgn(q) == 0; }));
  for (unsigned m = 2; m <= md.order; ++m) {
    if (sgn(md.piece(m).evaluate(direction)) != 0) return m;
  }
  return std::nullopt;
}

std::optional<unsigned> line_contact_order(const MongeData& md, const std::vector<QuotientRingElement>& direction) {
  require_direction(direction.size(),
                    std::all_of(direction.begin(), direction.end(), [](const QuotientRingElement& q) { return q.is_zero(); }));
  for (unsigned m = 2; m <= md.order; ++m) {
    const Polynomial& p = md.piece(m);
    if (!p.is_zero() && !evaluate_algebraic(p, direction).is_zero()) return m;
  }
  return std::nullopt;
}

std::string to_string(RuledVerdict v) {
  switch (v) {
    case RuledVerdict::kRuledEvidence:
      return "ruled-evidence";
    case RuledVerdict::kNotRuledEvidence:
      return "not-ruled-evidence";
    case RuledVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

constexpr unsigned kRulingContact = 4;

PointDiagnostic diagnose(const MongeData& md) {
  PointDiagnostic out;
  out.point = md.point;
  const FubiniReport fubini = fubini_intersection_test(md);
  out.resultant = fubini.resultant;
  out.intersects = fubini.intersects;
  out.common_factor = fubini.common_factor;
  if (!fubini.intersects) return out;
  for (const BinaryDirection& d : binary_form_zeros(fubini.common_factor)) {
    FlaggedDirection flagged;
    if (d.modulus) {
      flagged.description = "(" + d.algebraic[0].to_string() + " : " + d.algebraic[1].to_string() + ") mod " +
                            d.modulus->to_string();
      flagged.contact = line_contact_order(md, d.algebraic);
    } else {
      flagged.description = "(" + to_string(d.rational[0]) + " : " + to_string(d.rational[1]) + ")";
      flagged.contact = line_contact_order(md, d.rational);
    }
    if (!flagged.contact || *flagged.contact >= kRulingContact) out.line_evidence = true;
    out.directions.push_back(std::move(flagged));
  }
  return out;
}

template <class Task>
PointDiagnostic guarded(const Point& point, Task task) {
  try {
    return task();
  } catch (const DomainError& e) {
    PointDiagnostic out;
    out.point = point;
    out.error = e.what();
    return out;
  }
}

RuledVerdict verdict_of(const std::vector<PointDiagnostic>& points) {
  const bool all_lines = !points.empty() && std::all_of(points.begin(), points.end(), [](const PointDiagnostic& p) {
    return !p.error && p.line_evidence;
  });
  if (all_lines) return RuledVerdict::kRuledEvidence;
  const bool some_empty = std::any_of(points.begin(), points.end(), [](const PointDiagnostic& p) {
    return !p.error && !p.intersects;
  });
  return some_empty ? RuledVerdict::kNotRuledEvidence : RuledVerdict::kInconclusive;
}

}  // namespace

RuledDiagnostic ruled_surface_diagnostic(const Parameterization& f, const std::vector<Point>& points,
                                         const DiagnosticOptions& options) {
  if (f.dim() != 2 || f.coords.size() != 4) throw NotASurfaceInP3("the diagnostic needs a surface chart in P^3");
  RuledDiagnostic out;
  out.order = options.order;
  out.points.resize(points.size());
  const auto work = [&](std::size_t i) {
    out.points[i] = guarded(points[i], [&] { return diagnose(monge_form(f, points[i], options.order)); });
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, points.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += jobs) work(i);
      });
    }
  }
  out.verdict = verdict_of(out.points);
  return out;
}

RuledDiagnostic ruled_surface_diagnostic(const ImplicitVariety& iv, const DiagnosticOptions& options) {
  RuledDiagnostic out;
  out.order = options.order;
  out.points.push_back(guarded(iv.point, [&] { return diagnose(monge_form(iv, options.order)); }));
  out.verdict = verdict_of(out.points);
  return out;
}

Parameterization project_to_p3(const Parameterization& f, const std::optional<Matrix<Rational>>& matrix,
                               std::uint64_t seed, Matrix<Rational>* used) {
  const std::size_t cols = f.coords.size();
  Matrix<Rational> m;
  if (matrix) {
    m = *matrix;
    if (m.rows() != 4 || m.cols() != cols) throw PreconditionError("projection matrix must be 4 x (N+1)");
  } else {
    std::mt19937_64 rng(seed);
    m = Matrix<Rational>(4, cols, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
    }
  }
  if (used) *used = m;
  std::vector<RationalFunction> coords;
  for (std::size_t i = 0; i < 4; ++i) {
    RationalFunction c(0);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(m(i, j)) != 0) c += RationalFunction(m(i, j)) * f.coords[j];
    }
    coords.push_back(std::move(c));
  }
  Parameterization out = Parameterization::make(*f.params, std::move(coords), f.label);
  out.truncation_order = f.truncation_order;
  return out;
}

bool heat_equation_check(const Parameterization& f, const RationalFunction& phi, std::size_t x_slot, std::size_t y_slot) {
  if (f.dim() != 2) throw PreconditionError("the heat equation check needs two parameters");
  if (x_slot > 1 || y_slot > 1 || x_slot == y_slot) throw PreconditionError("x and y must be the two parameter slots");
  MultiIndex yy(2);
  yy.set(y_slot, 2);
  MultiIndex x(2);
  x.set(x_slot, 1);
  const RationalFunction factor = phi.rebound(f.params);
  return std::all_of(f.coords.begin(), f.coords.end(),
                     [&](const RationalFunction& c) { return c.hasse(yy) == factor * c.hasse(x); });
}

}  // namespace oscform
