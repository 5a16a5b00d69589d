#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscform/jets.hpp"
#include "oscform/quotient_ring.hpp"

namespace oscform {

/// Tangent-direction variable names for a chart: v1..vr, or dv_<param> when
/// those would collide with a parameter name.
std::vector<std::string> default_tangent_names(const Parameterization& f);

/// A linear system of degree-m forms in the tangent variables. Members are
/// stored as coefficient vectors over the degree-m monomials (graded-lex
/// order); the span is canonical, so two systems are equal iff their spans
/// are. F = RationalFunction for the generic point, Rational at a point.
template <class F>
struct LinearSystem {
  unsigned degree = 0;
  VarList params;        // coefficient variables (generic systems only)
  VarList tangent_vars;  // v1..vr
  std::optional<Point> point;
  Subspace<F> span;

  /// Number of independent generators; the projective dimension is one less.
  std::size_t size() const { return span.dim(); }
  bool empty() const { return span.dim() == 0; }

  /// Ring of the generator polynomials: params followed by tangent vars
  /// (tangent vars alone for point systems).
  VarList form_ring() const;

  /// One generator per canonical basis vector, with denominators cleared and
  /// content removed.
  std::vector<Polynomial> generators() const;

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.degree == b.degree && a.span == b.span;
  }
};

/// Builds a system from explicit forms living in `ring` (params then tangent
/// vars for F = RationalFunction, tangent vars only for F = Rational).
template <class F>
LinearSystem<F> system_from_forms(const std::vector<Polynomial>& forms, const VarList& params, const VarList& tangent_vars,
                                  unsigned degree);

/// Coefficients of a degree-m form over the degree-m monomials; the first
/// nparams variables of the form's ring are coefficient variables.
template <class F>
std::vector<F> form_coefficients(const Polynomial& form, std::size_t nparams, unsigned degree);

/// |Phi_m| together with the osculating dimensions it was derived from.
template <class F>
struct FundamentalForm {
  LinearSystem<F> system;
  std::size_t s_prev = 0;  // s(m-1)
  std::size_t s_cur = 0;   // s(m)
  /// dim |Phi_m| = s(m) - s(m-1) - 1, i.e. size() == s(m) - s(m-1).
  bool dimension_law_holds() const { return system.size() == s_cur - s_prev; }
};

/// |Phi_m(x)| spanned by sum_{|I|=m} (sum_j g_j D_I x_j) v^I over g in
/// K_(m-1). Requires m >= 2.
FundamentalForm<RationalFunction> fundamental_form(const Parameterization& f, unsigned m,
                                                   const std::vector<std::string>& tangent_names = {});
FundamentalForm<Rational> fundamental_form(const Parameterization& f, unsigned m, const Point& at,
                                           const std::vector<std::string>& tangent_names = {});

/// The degree m-1 system spanned by all partial derivatives of the members.
template <class F>
LinearSystem<F> jacobian_system(const LinearSystem<F>& l);

struct ContainmentReport {
  bool contained = false;
  bool equal = false;
  std::size_t jacobian_size = 0;
  std::size_t previous_size = 0;
};

template <class F>
ContainmentReport jacobian_containment(const LinearSystem<F>& phi_m, const LinearSystem<F>& phi_prev);

/// J(|Phi_m|) inside |Phi_(m-1)|; requires m >= 3.
ContainmentReport check_jacobian_containment(const Parameterization& f, unsigned m);
ContainmentReport check_jacobian_containment(const Parameterization& f, unsigned m, const Point& at);

struct PhibarReport {
  bool holds = false;
  bool lower_orders_vanish = false;  // the factoring identities, |I| <= m-2
  bool top_identity_holds = false;   // the S^m component equals -m phi_m(g)
  unsigned max_order_checked = 0;
  std::size_t kernel_vectors_checked = 0;
};

/// Checks, for every generator g of K_(m-1), that sum_j d_k g_j D_I x_j = 0
/// for |I| <= m-2 and that sum_{|I|=m-1,k} (sum_j d_k g_j D_I x_j) v_k v^I
/// equals -m sum_{|J|=m} (sum_j g_j D_J x_j) v^J. With a point, both sides
/// are computed over Q(u) and then evaluated there.
PhibarReport verify_phibar_relation(const Parameterization& f, unsigned m, const std::optional<Point>& at = std::nullopt);

struct BaseLocusReport {
  bool has_base_point = false;  // always true for the empty system
  Polynomial common_factor;  // in the tangent vars (and params, generically)
  /// Zeros of the common factor on P^1 when it is free of parameters and of
  /// degree <= 2; rational ones only.
  std::vector<std::vector<Rational>> base_points;
};

/// gcd of the generators with any factor free of the tangent variables
/// removed; 0 for the empty system.
template <class F>
Polynomial common_factor(const LinearSystem<F>& l);

/// Common zeros of a system of binary forms. Requires two tangent variables.
template <class F>
BaseLocusReport base_locus_pencil(const LinearSystem<F>& l);

/// True iff every generator vanishes at the direction.
template <class F>
bool contains_candidate_point(const LinearSystem<F>& l, const std::vector<Rational>& direction);
bool contains_candidate_point(const LinearSystem<Rational>& l, const std::vector<QuotientRingElement>& direction);

struct TangentConeReport {
  unsigned order = 0;  // first m with a^m(x) h != 0
  Polynomial form;     // in the tangent vars
  bool in_fundamental_form = false;  // form lies in |Phi_m(x)| (m >= 2)
};

/// Initial form at the point of the hyperplane section h = 0.
TangentConeReport hyperplane_tangent_cone(const Parameterization& f, const std::vector<Rational>& h, const Point& at,
                                          const std::vector<std::string>& tangent_names = {});

}  // namespace oscform
