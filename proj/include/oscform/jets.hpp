#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oscform/matrix.hpp"
#include "oscform/rational_function.hpp"

namespace oscform {

/// Affine chart u -> (x_0(u) : ... : x_N(u)) of a projective variety.
struct Parameterization {
  VarList params;
  std::vector<RationalFunction> coords;
  std::string label;
  /// Set when the coordinates are power series cut at this total degree.
  std::optional<unsigned> truncation_order;

  /// Validates N >= r >= 1 and rebinds every coordinate to `params`.
  static Parameterization make(const std::vector<std::string>& params, std::vector<RationalFunction> coords,
                               std::string label = {});

  std::size_t dim() const { return params->size(); }
  std::size_t ambient_dim() const { return coords.size() - 1; }
};

/// Row index set of a jet matrix of order m: all I with |I| <= m, degree
/// ascending and graded-lex descending inside a degree.
std::vector<MultiIndex> jet_rows(std::size_t r, unsigned m);

/// Hasse derivatives D_I x_j, computed once and shared between orders.
class JetTable {
 public:
  explicit JetTable(const Parameterization& f);

  const Parameterization& parameterization() const { return *f_; }
  /// (D_I x_0, ..., D_I x_N)
  const std::vector<RationalFunction>& row(const MultiIndex& i);

 private:
  std::shared_ptr<const Parameterization> f_;
  std::map<MultiIndex, std::vector<RationalFunction>, GrlexGreater> rows_;
};

/// A^(m) over Q(u): entry (I, j) = D_I x_j.
Matrix<RationalFunction> jet_matrix(JetTable& table, unsigned m);
Matrix<RationalFunction> jet_matrix(const Parameterization& f, unsigned m);
/// A^(m) at a parameter point. Throws DenominatorVanishes.
Matrix<Rational> jet_matrix(JetTable& table, unsigned m, const Point& at);
Matrix<Rational> jet_matrix(const Parameterization& f, unsigned m, const Point& at);

/// The rows with |I| = m only.
Matrix<RationalFunction> top_jet_block(JetTable& table, unsigned m);
Matrix<Rational> top_jet_block(JetTable& table, unsigned m, const Point& at);

/// False when the first-order block has rank < r + 1 at the point.
bool is_immersive_at(JetTable& table, const Point& at);

/// Reproducible source of random rational parameter points.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  /// Coordinates a/b with |a| <= 60 and 1 <= b <= 7.
  Point next(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

enum class RankMode { kSampled, kSymbolic, kPoint };

std::string to_string(RankMode mode);

struct OsculatingProfile {
  std::vector<std::size_t> dims;  // s(0), ..., s(m_max)
  RankMode mode = RankMode::kSampled;
  std::optional<Point> point;     // set in point mode
  std::vector<Point> sampled_points;
};

struct ProfileOptions {
  std::optional<Point> at;
  bool symbolic = false;
  std::uint64_t seed = 1;
};

/// s(i) = rank A^(i) - 1 for i = 0..m_max. Without a point the generic rank
/// is either computed over Q(u) (symbolic) or taken as the largest rank seen
/// at random points, stopping once that rank has been met at two points.
OsculatingProfile osculating_profile(const Parameterization& f, unsigned m_max, const ProfileOptions& options = {});

/// Generic rank of a matrix over Q(u) by random evaluation.
struct SampledRank {
  std::size_t rank = 0;
  std::vector<Point> points;
};
SampledRank sampled_rank(const Matrix<RationalFunction>& m, std::size_t nvars, PointSampler& sampler);

/// Image of a^m at the point, as a subspace of Q^(N+1).
Subspace<Rational> osculating_space(const Parameterization& f, unsigned m, const Point& at);

/// K_0, ..., K_m: kernels of A^(i). Throws ChainBroken if K_i is not inside
/// K_(i-1).
std::vector<Subspace<RationalFunction>> kernel_chain(const Parameterization& f, unsigned m);
std::vector<Subspace<Rational>> kernel_chain(const Parameterization& f, unsigned m, const Point& at);

/// Homogeneous equations G_1..G_c in X_0..X_N with a rational point on them.
struct ImplicitVariety {
  VarList coords;  // X_0..X_N
  std::vector<Polynomial> equations;
  Point point;
  std::string label;

  std::size_t ambient_dim() const { return coords->size() - 1; }
};

/// Checks homogeneity and that the point lies on every equation.
void validate(const ImplicitVariety& iv);

struct JetParameterizeOptions {
  /// Indices of the coordinates used as parameters; default is the
  /// lexicographically first set whose complement has an invertible
  /// Jacobian block.
  std::optional<std::vector<std::size_t>> free_coordinates;
};

/// Power-series chart of a smooth complete intersection at its point, cut at
/// total degree `order`. The chart divides by the first nonzero coordinate
/// of the point; parameters are the free coordinates shifted to vanish at
/// the point and are named after them in lower case.
Parameterization jet_parameterize(const ImplicitVariety& iv, unsigned order, const JetParameterizeOptions& options = {});

}  // namespace oscform
