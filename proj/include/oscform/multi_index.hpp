#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "oscform/rational.hpp"

namespace oscform {

/// Exponent vector I = (i_1, ..., i_n). Stored inline; at most kMaxVars slots.
class MultiIndex {
 public:
  static constexpr std::size_t kMaxVars = 16;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<unsigned> exps);
  explicit MultiIndex(const std::vector<unsigned>& exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t k) const { return e_[k]; }
  void set(std::size_t k, unsigned value);

  /// |I|
  unsigned degree() const { return deg_; }

  /// I_k: slot k incremented.
  MultiIndex incremented(std::size_t k) const;
  /// I^k: slot k decremented. Requires i_k > 0.
  MultiIndex decremented(std::size_t k) const;

  /// Componentwise I <= J.
  bool divides(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;

  /// Prepends `zeros_before` and appends `zeros_after` zero slots.
  MultiIndex padded(std::size_t zeros_before, std::size_t zeros_after) const;

  std::vector<unsigned> to_vector() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b);
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint8_t n_ = 0;
};

/// Graded lexicographic, largest first: higher total degree first, ties
/// broken lexicographically with slot 0 most significant. So x^2 > xy > y^2.
struct GrlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// True when a comes strictly before b in jet-row order (degree ascending,
/// then lexicographically descending within a degree).
struct JetRowLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All I with |I| = m over n slots, in GrlexGreater order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned m);

/// All I with |I| <= m, degree-major ascending; inside a degree GrlexGreater.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned m);

/// prod_k C(j_k, i_k)
Integer binomial_product(const MultiIndex& j, const MultiIndex& i);

/// I! = prod_k i_k!
Integer factorial_product(const MultiIndex& i);

}  // namespace oscform
