#include "oscform/fundforms.hpp"

#include <algorithm>
#include <map>

#include "oscform/binary_forms.hpp"
#include "oscform/errors.hpp"

namespace oscform {

namespace {

using Positions = std::map<MultiIndex, std::size_t, GrlexGreater>;

Positions monomial_positions(std::size_t r, unsigned m) {
  Positions out;
  const auto monos = multi_indices_of_degree(r, m);
  for (std::size_t i = 0; i < monos.size(); ++i) out.emplace(monos[i], i);
  return out;
}

bool has_params(const VarList& params) { return params && !params->empty(); }

Polynomial coefficient_polynomial(const Rational& c, const VarList& ring) { return Polynomial(ring, c); }

Polynomial coefficient_polynomial(const RationalFunction& c, const VarList& ring) {
  if (!c.is_polynomial()) throw InternalError("form coefficient kept a denominator after clearing");
  return c.numerator().rebound(ring).scaled(1 / c.denominator().constant_term());
}

template <class F>
F coefficient_from(const Polynomial& p, const VarList& params);

template <>
Rational coefficient_from<Rational>(const Polynomial& p, const VarList&) {
  return p.constant_term();
}

template <>
RationalFunction coefficient_from<RationalFunction>(const Polynomial& p, const VarList& params) {
  return RationalFunction(p.rebound(params));
}

void require_form_order(const Parameterization& f, unsigned m) {
  if (f.truncation_order && m + 1 > *f.truncation_order) {
    throw PreconditionError("fundamental forms of a series chart cut at order " + std::to_string(*f.truncation_order) +
                            " are only valid up to m = " + std::to_string(*f.truncation_order - 1));
  }
}

VarList tangent_ring(const Parameterization& f, const std::vector<std::string>& names) {
  const std::vector<std::string> chosen = names.empty() ? default_tangent_names(f) : names;
  if (chosen.size() != f.dim()) throw PreconditionError("need one tangent variable per parameter");
  return make_vars(chosen);
}

// Matrices of the generic or the pointwise computation behind one interface.
struct GenericJets {
  JetTable& table;
  Matrix<RationalFunction> jets(unsigned m) const { return jet_matrix(table, m); }
  Matrix<RationalFunction> top(unsigned m) const { return top_jet_block(table, m); }
};

struct PointJets {
  JetTable& table;
  const Point& at;
  Matrix<Rational> jets(unsigned m) const { return jet_matrix(table, m, at); }
  Matrix<Rational> top(unsigned m) const { return top_jet_block(table, m, at); }
};

template <class F, class Jets>
FundamentalForm<F> form_from_jets(const Jets& source, unsigned m, const VarList& params, const VarList& tangent,
                                  const std::optional<Point>& point) {
  const Matrix<F> previous = source.jets(m - 1);
  const auto kernel = kernel_vectors(previous);
  const Matrix<F> top = source.top(m);
  std::vector<std::vector<F>> images;
  images.reserve(kernel.size());
  for (const auto& g : kernel) images.push_back(top * g);

  FundamentalForm<F> out;
  out.system.degree = m;
  out.system.params = params;
  out.system.tangent_vars = tangent;
  out.system.point = point;
  out.system.span = Subspace<F>::span(images, top.rows());
  out.s_prev = previous.cols() - kernel.size() - 1;
  out.s_cur = rank(source.jets(m)) - 1;
  return out;
}

FundamentalForm<RationalFunction> generic_form(JetTable& table, unsigned m, const VarList& tangent) {
  if (m < 2) throw PreconditionError("fundamental forms start at m = 2");
  return form_from_jets<RationalFunction>(GenericJets{table}, m, table.parameterization().params, tangent, std::nullopt);
}

FundamentalForm<Rational> point_form(JetTable& table, unsigned m, const Point& at, const VarList& tangent) {
  if (m < 2) throw PreconditionError("fundamental forms start at m = 2");
  return form_from_jets<Rational>(PointJets{table, at}, m, nullptr, tangent, at);
}

template <class F>
F monomial_value(const MultiIndex& e, const std::vector<F>& direction) {
  F v(Rational(1));
  for (std::size_t k = 0; k < e.size(); ++k) {
    for (unsigned p = 0; p < e[k]; ++p) v = v * direction[k];
  }
  return v;
}

}  // namespace

std::vector<std::string> default_tangent_names(const Parameterization& f) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < f.dim(); ++k) names.push_back("v" + std::to_string(k + 1));
  const bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
    return std::find(f.params->begin(), f.params->end(), n) != f.params->end();
  });
  if (clash) {
    for (std::size_t k = 0; k < f.dim(); ++k) names[k] = "dv_" + (*f.params)[k];
  }
  return names;
}

template <class F>
VarList LinearSystem<F>::form_ring() const {
  if (!has_params(params)) return tangent_vars;
  std::vector<std::string> names(params->begin(), params->end());
  names.insert(names.end(), tangent_vars->begin(), tangent_vars->end());
  return make_vars(std::move(names));
}

template <class F>
std::vector<Polynomial> LinearSystem<F>::generators() const {
  const VarList ring = form_ring();
  const std::size_t nparams = has_params(params) ? params->size() : 0;
  const auto monos = multi_indices_of_degree(tangent_vars->size(), degree);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < span.dim(); ++i) {
    const std::vector<F> row = primitive_vector(span.vector(i));
    Polynomial form(ring);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (is_zero(row[k])) continue;
      form += coefficient_polynomial(row[k], ring) * Polynomial::monomial(ring, monos[k].padded(nparams, 0), Rational(1));
    }
    out.push_back(std::move(form));
  }
  return out;
}

template <class F>
std::vector<F> form_coefficients(const Polynomial& form, std::size_t nparams, unsigned degree) {
  if (form.nvars() < nparams) throw VariableMismatch("form has fewer variables than parameters");
  const std::size_t r = form.nvars() - nparams;
  const Positions positions = monomial_positions(r, degree);
  VarList params;
  if (nparams > 0) params = make_vars(std::vector<std::string>(form.vars()->begin(), form.vars()->begin() + static_cast<std::ptrdiff_t>(nparams)));
  std::vector<std::vector<Term>> parts(positions.size());
  for (const Term& t : form.terms()) {
    MultiIndex tangent(r);
    MultiIndex coefficient(nparams);
    for (std::size_t k = 0; k < nparams; ++k) coefficient.set(k, t.exponents[k]);
    for (std::size_t k = 0; k < r; ++k) tangent.set(k, t.exponents[nparams + k]);
    const auto it = positions.find(tangent);
    if (it == positions.end()) {
      throw PreconditionError("form '" + form.to_string() + "' is not homogeneous of degree " + std::to_string(degree) +
                              " in the tangent variables");
    }
    parts[it->second].push_back(Term{coefficient, t.coeff});
  }
  std::vector<F> out;
  out.reserve(parts.size());
  for (auto& terms : parts) {
    if (nparams == 0) {
      out.push_back(F(terms.empty() ? Rational(0) : terms.front().coeff));
    } else {
      out.push_back(coefficient_from<F>(Polynomial::from_terms(params, std::move(terms)), params));
    }
  }
  return out;
}

template <class F>
LinearSystem<F> system_from_forms(const std::vector<Polynomial>& forms, const VarList& params, const VarList& tangent_vars,
                                  unsigned degree) {
  LinearSystem<F> out;
  out.degree = degree;
  out.params = has_params(params) ? params : nullptr;
  out.tangent_vars = tangent_vars;
  const VarList ring = out.form_ring();
  const std::size_t nparams = has_params(params) ? params->size() : 0;
  std::vector<std::vector<F>> vectors;
  for (const Polynomial& form : forms) vectors.push_back(form_coefficients<F>(form.rebound(ring), nparams, degree));
  out.span = Subspace<F>::span(vectors, monomial_positions(tangent_vars->size(), degree).size());
  return out;
}

FundamentalForm<RationalFunction> fundamental_form(const Parameterization& f, unsigned m,
                                                   const std::vector<std::string>& tangent_names) {
  require_form_order(f, m);
  JetTable table(f);
  return generic_form(table, m, tangent_ring(f, tangent_names));
}

FundamentalForm<Rational> fundamental_form(const Parameterization& f, unsigned m, const Point& at,
                                           const std::vector<std::string>& tangent_names) {
  require_form_order(f, m);
  JetTable table(f);
  return point_form(table, m, at, tangent_ring(f, tangent_names));
}

template <class F>
LinearSystem<F> jacobian_system(const LinearSystem<F>& l) {
  if (l.degree < 1) throw PreconditionError("the Jacobian needs degree >= 1");
  const std::size_t r = l.tangent_vars->size();
  const auto monos = multi_indices_of_degree(r, l.degree);
  const Positions lower = monomial_positions(r, l.degree - 1);
  std::vector<std::vector<F>> partials;
  for (std::size_t i = 0; i < l.span.dim(); ++i) {
    const std::vector<F> c = l.span.vector(i);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<F> d(lower.size(), F(Rational(0)));
      for (std::size_t t = 0; t < monos.size(); ++t) {
        if (monos[t][k] == 0 || is_zero(c[t])) continue;
        d[lower.at(monos[t].decremented(k))] += F(Rational(monos[t][k])) * c[t];
      }
      partials.push_back(std::move(d));
    }
  }
  LinearSystem<F> out;
  out.degree = l.degree - 1;
  out.params = l.params;
  out.tangent_vars = l.tangent_vars;
  out.point = l.point;
  out.span = Subspace<F>::span(partials, lower.size());
  return out;
}

template <class F>
ContainmentReport jacobian_containment(const LinearSystem<F>& phi_m, const LinearSystem<F>& phi_prev) {
  if (phi_prev.degree + 1 != phi_m.degree) throw PreconditionError("systems are not of consecutive degrees");
  const LinearSystem<F> j = jacobian_system(phi_m);
  ContainmentReport out;
  out.contained = phi_prev.span.contains(j.span);
  out.equal = out.contained && j.span.dim() == phi_prev.span.dim();
  out.jacobian_size = j.size();
  out.previous_size = phi_prev.size();
  return out;
}

ContainmentReport check_jacobian_containment(const Parameterization& f, unsigned m) {
  if (m < 3) throw PreconditionError("Jacobian containment needs m >= 3");
  require_form_order(f, m);
  JetTable table(f);
  const VarList tangent = tangent_ring(f, {});
  return jacobian_containment(generic_form(table, m, tangent).system, generic_form(table, m - 1, tangent).system);
}

ContainmentReport check_jacobian_containment(const Parameterization& f, unsigned m, const Point& at) {
  if (m < 3) throw PreconditionError("Jacobian containment needs m >= 3");
  require_form_order(f, m);
  JetTable table(f);
  const VarList tangent = tangent_ring(f, {});
  return jacobian_containment(point_form(table, m, at, tangent).system, point_form(table, m - 1, at, tangent).system);
}

PhibarReport verify_phibar_relation(const Parameterization& f, unsigned m, const std::optional<Point>& at) {
  if (m < 2) throw PreconditionError("the relation is stated for m >= 2");
  JetTable table(f);
  const std::size_t r = f.dim();
  const std::size_t cols = f.coords.size();
  const auto kernel = kernel_vectors(jet_matrix(table, m - 1));
  const Matrix<RationalFunction> top = top_jet_block(table, m);
  const Positions top_positions = monomial_positions(r, m);
  const auto vanishes = [&](const RationalFunction& v) { return at ? sgn(v.evaluate(*at)) == 0 : v.is_zero(); };

  PhibarReport out;
  out.max_order_checked = m;
  out.kernel_vectors_checked = kernel.size();
  out.lower_orders_vanish = true;
  out.top_identity_holds = true;
  for (const auto& g : kernel) {
    std::vector<std::vector<RationalFunction>> dg(r, std::vector<RationalFunction>(cols));
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < cols; ++j) dg[k][j] = g[j].derivative(k);
    }
    const auto pair = [&](std::size_t k, const MultiIndex& i) {
      const auto& jets = table.row(i);
      RationalFunction s(0);
      for (std::size_t j = 0; j < cols; ++j) {
        if (!dg[k][j].is_zero() && !jets[j].is_zero()) s += dg[k][j] * jets[j];
      }
      return s;
    };
    for (const MultiIndex& i : multi_indices_up_to(r, m - 2)) {
      for (std::size_t k = 0; k < r; ++k) {
        if (!vanishes(pair(k, i))) out.lower_orders_vanish = false;
      }
    }
    std::vector<RationalFunction> lhs(top_positions.size(), RationalFunction(0));
    for (const MultiIndex& i : multi_indices_of_degree(r, m - 1)) {
      for (std::size_t k = 0; k < r; ++k) lhs[top_positions.at(i.incremented(k))] += pair(k, i);
    }
    const std::vector<RationalFunction> image = top * g;
    const RationalFunction scale(Rational(-static_cast<long>(m)));
    for (std::size_t t = 0; t < lhs.size(); ++t) {
      if (!vanishes(lhs[t] - scale * image[t])) out.top_identity_holds = false;
    }
  }
  out.holds = out.lower_orders_vanish && out.top_identity_holds;
  return out;
}

template <class F>
Polynomial common_factor(const LinearSystem<F>& l) {
  const std::vector<Polynomial> gens = l.generators();
  const VarList ring = l.form_ring();
  if (gens.empty()) return Polynomial(ring);
  Polynomial g = gens.front();
  for (std::size_t i = 1; i < gens.size() && g.total_degree() > 0; ++i) g = gcd(g, gens[i]);
  const std::size_t nparams = has_params(l.params) ? l.params->size() : 0;
  const std::size_t r = l.tangent_vars->size();
  if (nparams > 0) {
    // Strip the factor that only depends on the parameters.
    std::map<MultiIndex, std::vector<Term>, GrlexGreater> parts;
    for (const Term& t : g.terms()) {
      MultiIndex tangent(r);
      MultiIndex coefficient(nparams);
      for (std::size_t k = 0; k < nparams; ++k) coefficient.set(k, t.exponents[k]);
      for (std::size_t k = 0; k < r; ++k) tangent.set(k, t.exponents[nparams + k]);
      parts[tangent].push_back(Term{coefficient.padded(0, r), t.coeff});
    }
    Polynomial content;
    for (auto& [tangent, terms] : parts) {
      const Polynomial c = Polynomial::from_terms(ring, std::move(terms));
      content = content.is_zero() ? c.monic() : gcd(content, c);
    }
    if (!content.is_constant()) g = divide_exact(g, content);
  }
  return g.monic();
}

template <class F>
BaseLocusReport base_locus_pencil(const LinearSystem<F>& l) {
  if (l.tangent_vars->size() != 2) {
    throw UnsupportedAmbient("base loci are only computed for binary forms (two tangent variables)");
  }
  BaseLocusReport out;
  out.common_factor = common_factor(l);
  if (l.empty()) {
    out.has_base_point = true;
    return out;
  }
  const std::size_t nparams = has_params(l.params) ? l.params->size() : 0;
  unsigned tangent_degree = 0;
  bool param_free = true;
  for (const Term& t : out.common_factor.terms()) {
    tangent_degree = std::max(tangent_degree, t.exponents[nparams] + t.exponents[nparams + 1]);
    for (std::size_t k = 0; k < nparams; ++k) param_free = param_free && t.exponents[k] == 0;
  }
  out.has_base_point = tangent_degree > 0;
  if (out.has_base_point && param_free && tangent_degree <= 2) {
    for (const BinaryDirection& d : binary_form_zeros(out.common_factor.rebound(l.tangent_vars))) {
      if (!d.modulus) out.base_points.push_back(d.rational);
    }
  }
  return out;
}

template <class F>
bool contains_candidate_point(const LinearSystem<F>& l, const std::vector<Rational>& direction) {
  if (direction.size() != l.tangent_vars->size()) throw PreconditionError("direction has the wrong length");
  if (std::all_of(direction.begin(), direction.end(), [](const Rational& q) { return sgn(q) == 0; })) {
    throw PreconditionError("direction must be nonzero");
  }
  const auto monos = multi_indices_of_degree(direction.size(), l.degree);
  std::vector<F> dir(direction.begin(), direction.end());
  for (std::size_t i = 0; i < l.span.dim(); ++i) {
    const std::vector<F> c = l.span.vector(i);
    F value(Rational(0));
    for (std::size_t t = 0; t < monos.size(); ++t) {
      if (!is_zero(c[t])) value += c[t] * monomial_value(monos[t], dir);
    }
    if (!is_zero(value)) return false;
  }
  return true;
}

bool contains_candidate_point(const LinearSystem<Rational>& l, const std::vector<QuotientRingElement>& direction) {
  if (direction.size() != l.tangent_vars->size()) throw PreconditionError("direction has the wrong length");
  if (std::all_of(direction.begin(), direction.end(), [](const QuotientRingElement& q) { return q.is_zero(); })) {
    throw PreconditionError("direction must be nonzero");
  }
  for (const Polynomial& g : l.generators()) {
    if (!evaluate_algebraic(g, direction).is_zero()) return false;
  }
  return true;
}

TangentConeReport hyperplane_tangent_cone(const Parameterization& f, const std::vector<Rational>& h, const Point& at,
                                          const std::vector<std::string>& tangent_names) {
  if (h.size() != f.coords.size()) throw PreconditionError("hyperplane needs one coefficient per coordinate");
  if (std::all_of(h.begin(), h.end(), [](const Rational& q) { return sgn(q) == 0; })) {
    throw PreconditionError("hyperplane coefficients are all zero");
  }
  const VarList tangent = tangent_ring(f, tangent_names);
  JetTable table(f);
  const auto pairing = [&](const Matrix<Rational>& block) { return block * h; };
  if (sgn(pairing(jet_matrix(table, 0, at))[0]) != 0) {
    throw PreconditionError("hyperplane does not pass through the point");
  }

  // Beyond the largest coordinate degree every Hasse derivative of a
  // polynomial chart vanishes.
  constexpr unsigned kRationalChartLimit = 12;
  unsigned limit = kRationalChartLimit;
  if (f.truncation_order) {
    limit = *f.truncation_order;
  } else if (std::all_of(f.coords.begin(), f.coords.end(), [](const RationalFunction& c) { return c.is_polynomial(); })) {
    limit = 0;
    for (const RationalFunction& c : f.coords) limit = std::max(limit, static_cast<unsigned>(std::max(0, c.numerator().total_degree())));
  }

  for (unsigned m = 1; m <= limit; ++m) {
    const std::vector<Rational> c = pairing(top_jet_block(table, m, at));
    if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) == 0; })) continue;
    TangentConeReport out;
    out.order = m;
    LinearSystem<Rational> single;
    single.degree = m;
    single.tangent_vars = tangent;
    single.point = at;
    single.span = Subspace<Rational>::span({c}, c.size());
    out.form = single.generators().front();
    out.in_fundamental_form = m == 1 || point_form(table, m, at, tangent).system.span.contains(c);
    return out;
  }
  throw HyperplaneContainsAllOsculating("hyperplane contains every computed osculating space (up to order " +
                                        std::to_string(limit) + ")");
}

template struct LinearSystem<Rational>;
template struct LinearSystem<RationalFunction>;
template std::vector<Rational> form_coefficients<Rational>(const Polynomial&, std::size_t, unsigned);
template std::vector<RationalFunction> form_coefficients<RationalFunction>(const Polynomial&, std::size_t, unsigned);
template LinearSystem<Rational> system_from_forms<Rational>(const std::vector<Polynomial>&, const VarList&, const VarList&,
                                                           unsigned);
template LinearSystem<RationalFunction> system_from_forms<RationalFunction>(const std::vector<Polynomial>&, const VarList&,
                                                                           const VarList&, unsigned);
template LinearSystem<Rational> jacobian_system(const LinearSystem<Rational>&);
template LinearSystem<RationalFunction> jacobian_system(const LinearSystem<RationalFunction>&);
template ContainmentReport jacobian_containment(const LinearSystem<Rational>&, const LinearSystem<Rational>&);
template ContainmentReport jacobian_containment(const LinearSystem<RationalFunction>&, const LinearSystem<RationalFunction>&);
template Polynomial common_factor(const LinearSystem<Rational>&);
template Polynomial common_factor(const LinearSystem<RationalFunction>&);
template BaseLocusReport base_locus_pencil(const LinearSystem<Rational>&);
template BaseLocusReport base_locus_pencil(const LinearSystem<RationalFunction>&);
template bool contains_candidate_point(const LinearSystem<Rational>&, const std::vector<Rational>&);
template bool contains_candidate_point(const LinearSystem<RationalFunction>&, const std::vector<Rational>&);

}  // namespace oscform
