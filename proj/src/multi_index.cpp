#include "oscform/multi_index.hpp"

#include <algorithm>
#include <limits>

#include "oscform/errors.hpp"

namespace oscform {

MultiIndex::MultiIndex(std::size_t n) {
  if (n > kMaxVars) throw PreconditionError("too many variables (max " + std::to_string(kMaxVars) + ")");
  n_ = static_cast<std::uint8_t>(n);
}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exps) : MultiIndex(exps.size()) {
  std::size_t k = 0;
  for (unsigned v : exps) set(k++, v);
}

MultiIndex::MultiIndex(const std::vector<unsigned>& exps) : MultiIndex(exps.size()) {
  for (std::size_t k = 0; k < exps.size(); ++k) set(k, exps[k]);
}

void MultiIndex::set(std::size_t k, unsigned value) {
  const unsigned new_deg = unsigned{deg_} - e_[k] + value;
  if (value > std::numeric_limits<std::uint16_t>::max() || new_deg > std::numeric_limits<std::uint16_t>::max()) {
    throw PreconditionError("exponent overflow");
  }
  e_[k] = static_cast<std::uint16_t>(value);
  deg_ = static_cast<std::uint16_t>(new_deg);
}

MultiIndex MultiIndex::incremented(std::size_t k) const {
  MultiIndex out = *this;
  out.set(k, e_[k] + 1u);
  return out;
}

MultiIndex MultiIndex::decremented(std::size_t k) const {
  if (e_[k] == 0) throw PreconditionError("cannot decrement a zero exponent");
  MultiIndex out = *this;
  out.set(k, e_[k] - 1u);
  return out;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t k = 0; k < n_; ++k) {
    if (e_[k] > other.e_[k]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex out = *this;
  for (std::size_t k = 0; k < n_; ++k) out.set(k, unsigned{e_[k]} + other.e_[k]);
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  MultiIndex out = *this;
  for (std::size_t k = 0; k < n_; ++k) {
    if (other.e_[k] > e_[k]) throw PreconditionError("negative exponent in multi-index difference");
    out.set(k, unsigned{e_[k]} - other.e_[k]);
  }
  return out;
}

MultiIndex MultiIndex::padded(std::size_t zeros_before, std::size_t zeros_after) const {
  MultiIndex out(zeros_before + n_ + zeros_after);
  for (std::size_t k = 0; k < n_; ++k) out.set(zeros_before + k, e_[k]);
  return out;
}

std::vector<unsigned> MultiIndex::to_vector() const { return {e_.begin(), e_.begin() + n_}; }

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < n_; ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
}

bool GrlexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

bool JetRowLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  return GrlexGreater{}(a, b);
}

namespace {

void fill_degree(std::size_t n, std::size_t slot, unsigned remaining, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
  if (slot + 1 == n) {
    cur.set(slot, remaining);
    out.push_back(cur);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur.set(slot, v);
    fill_degree(n, slot + 1, remaining - v, cur, out);
  }
  cur.set(slot, 0);
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned m) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (m == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(n);
  fill_degree(n, 0, m, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned m) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= m; ++d) {
    auto block = multi_indices_of_degree(n, d);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Integer binomial_product(const MultiIndex& j, const MultiIndex& i) {
  Integer r = 1;
  for (std::size_t k = 0; k < j.size(); ++k) r *= binomial(j[k], i[k]);
  return r;
}

Integer factorial_product(const MultiIndex& i) {
  Integer r = 1;
  for (std::size_t k = 0; k < i.size(); ++k) r *= factorial(i[k]);
  return r;
}

}  // namespace oscform
