#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oscform/binary_forms.hpp"
#include "oscform/fundforms.hpp"

namespace oscform {

/// A chart whose coordinates are affine-linear in the fiber parameters.
/// Parameters are the base parameters followed by the fiber parameters.
struct RuledParameterization {
  Parameterization chart;
  std::size_t base_count = 0;   // n
  std::size_t fiber_count = 0;  // e

  /// Throws PreconditionError unless every coordinate has total degree <= 1
  /// in the fiber parameters (and a denominator free of them).
  static RuledParameterization make(const Parameterization& chart, const std::vector<std::string>& fiber_params);

  /// v (or v1..vn) for base directions, then w1..we.
  std::vector<std::string> tangent_names() const;
};

struct ScrollSpec {
  std::vector<unsigned> degrees;  // d_0 <= ... <= d_e

  /// Sorts the degrees and checks that they are positive.
  static ScrollSpec make(std::vector<unsigned> degrees);
  std::size_t fiber_count() const { return degrees.size() - 1; }
  std::size_t ambient_dim() const;
};

/// (t, s_1..s_e) -> (1 : t : ... : t^d0 : s_1 : s_1 t : ... : s_e t^de).
RuledParameterization scroll(const ScrollSpec& spec);

struct ScrollRankReport {
  unsigned order = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;  // m(e+1)+1
  bool match = false;
};

/// Generic rank of a^m for the scroll, computed over the function field.
/// Requires 1 <= m <= d_0.
ScrollRankReport scroll_rank_check(const ScrollSpec& spec, unsigned m);

struct PushdownReport {
  unsigned order = 0;
  std::vector<std::size_t> block_ranks;  // one per summand O(d_i)
  std::size_t rank = 0;
  std::size_t expected = 0;              // sum_i min(m+1, d_i+1)
  bool match = false;
  Point point;                           // (t, s_1..s_e)
};

/// Rank of the pure t-derivative rows of a^m, taken block by block over the
/// coordinate groups of the summands, at a seeded random point.
PushdownReport scroll_pushdown_check(const ScrollSpec& spec, unsigned m, std::uint64_t seed = 1);

struct RulingReport {
  unsigned order = 0;
  std::size_t size = 0;
  bool all_members_contain_ruling = false;
  bool monomial_support_ok = false;
  /// Checked only when n >= 2 and m >= 3.
  std::optional<bool> singular_along_fiber;
  Polynomial fixed_component;
  std::vector<Polynomial> generators;
};

/// Fixed-component structure of |Phi_m| along the ruling {v = 0}.
RulingReport ruling_fixed_component_check(const RuledParameterization& f, unsigned m,
                                          const std::optional<Point>& at = std::nullopt);

struct DimBoundReport {
  unsigned order = 0;
  long dim = 0;
  long bound = 0;
  bool ok = false;
  bool attained = false;
};

/// dim |Phi_m| <= C(n+m-1, m) + e C(n+m-2, m-1) - 1 at `at`, or at the
/// generic point when no point is given.
DimBoundReport dim_bound_check(const RuledParameterization& f, unsigned m, const std::optional<Point>& at = std::nullopt);

/// Local graph x3 = f(x1, x2) of a surface in P^3 at a point.
struct MongeData {
  Point point;                 // parameter values or homogeneous coordinates
  Matrix<Rational> chart;      // columns: point, two tangent vectors, completion
  unsigned order = 0;
  VarList vars;                // x1, x2
  Polynomial f;                // through total degree `order`
  std::vector<Polynomial> pieces;  // pieces[d] = homogeneous part of degree d

  const Polynomial& piece(unsigned d) const;
  const Polynomial& f2() const { return piece(2); }
  const Polynomial& f3() const { return piece(3); }
};

/// Requires a chart with two parameters and four coordinates, smooth at the
/// point, and order >= 3.
MongeData monge_form(const Parameterization& f, const Point& at, unsigned order);
/// Requires one homogeneous equation in four coordinates.
MongeData monge_form(const ImplicitVariety& iv, unsigned order);

struct FubiniReport {
  Rational resultant;
  bool intersects = false;
  Polynomial common_factor;  // gcd(f2, f3); f2 itself when f3 = 0
};

FubiniReport fubini_intersection_test(const MongeData& md);

/// Smallest m >= 2 with f_m(direction) != 0, or nullopt when every computed
/// piece vanishes there (contact at least order + 1).
std::optional<unsigned> line_contact_order(const MongeData& md, const std::vector<Rational>& direction);
std::optional<unsigned> line_contact_order(const MongeData& md, const std::vector<QuotientRingElement>& direction);

struct FlaggedDirection {
  std::string description;
  std::optional<unsigned> contact;  // nullopt: at least order + 1
};

struct PointDiagnostic {
  Point point;
  std::optional<std::string> error;
  Rational resultant;
  bool intersects = false;
  Polynomial common_factor;
  std::vector<FlaggedDirection> directions;
  bool line_evidence = false;  // some direction has contact >= 4
};

enum class RuledVerdict { kRuledEvidence, kNotRuledEvidence, kInconclusive };

std::string to_string(RuledVerdict v);

struct RuledDiagnostic {
  std::vector<PointDiagnostic> points;
  RuledVerdict verdict = RuledVerdict::kInconclusive;
  unsigned order = 0;
  std::optional<Matrix<Rational>> projection;
  static constexpr const char* kDisclaimer =
      "evidence from finitely many sample points, not a proof of ruledness";
};

struct DiagnosticOptions {
  unsigned order = 4;
  unsigned jobs = 1;
};

/// Monge form, Fubini test and contact orders at each sample point.
RuledDiagnostic ruled_surface_diagnostic(const Parameterization& f, const std::vector<Point>& points,
                                         const DiagnosticOptions& options = {});
RuledDiagnostic ruled_surface_diagnostic(const ImplicitVariety& iv, const DiagnosticOptions& options = {});

/// Composes the chart with a 4 x (N+1) rational matrix; the matrix is drawn
/// from the seed when not given.
Parameterization project_to_p3(const Parameterization& f, const std::optional<Matrix<Rational>>& matrix,
                               std::uint64_t seed, Matrix<Rational>* used = nullptr);

/// D_(0,2) x_j = phi D_(1,0) x_j for every coordinate, with Hasse
/// derivatives in the (x, y) parameter slots. Requires two parameters.
bool heat_equation_check(const Parameterization& f, const RationalFunction& phi, std::size_t x_slot = 0,
                         std::size_t y_slot = 1);

}  // namespace oscform
