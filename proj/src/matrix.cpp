#include "oscform/matrix.hpp"

#include <utility>

#include "oscform/errors.hpp"

namespace oscform {

namespace {

bool is_nonzero(const Integer& x) { return sgn(x) != 0; }
bool is_nonzero(const Polynomial& p) { return !p.is_zero(); }
bool is_nonzero(const Rational& x) { return sgn(x) != 0; }
bool is_nonzero(const RationalFunction& f) { return !f.is_zero(); }

Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) return a.scaled(1 / b.constant_term());
  return divide_exact(a, b);
}

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  using Ring = Integer;

  static std::vector<Integer> clear(const std::vector<Rational>& row) {
    Integer l = 1;
    for (const Rational& x : row) {
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(row.size());
    Integer g = 0;
    for (const Rational& x : row) {
      out.push_back(x.get_num() * (l / x.get_den()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1) {
      for (Integer& x : out) x = exact_quotient(x, g);
    }
    return out;
  }

  static Rational lift(const Integer& x) { return Rational(x); }

  static Rational divide(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
};

template <>
struct FieldTraits<RationalFunction> {
  using Ring = Polynomial;

  static std::vector<Polynomial> clear(const std::vector<RationalFunction>& row) {
    Polynomial l(1);
    for (const RationalFunction& x : row) {
      if (!x.is_zero() && !x.denominator().is_constant()) l = lcm(l, x.denominator());
    }
    std::vector<Polynomial> out;
    out.reserve(row.size());
    for (const RationalFunction& x : row) {
      if (x.is_zero()) {
        out.emplace_back();
      } else if (x.denominator().is_constant()) {
        out.push_back((x.numerator() * l).scaled(1 / x.denominator().constant_term()));
      } else {
        out.push_back(x.numerator() * exact_quotient(l, x.denominator()));
      }
    }
    return out;
  }

  static RationalFunction lift(const Polynomial& x) { return RationalFunction(x); }

  static RationalFunction divide(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }
};

template <class F>
Matrix<typename FieldTraits<F>::Ring> cleared(const Matrix<F>& m) {
  using R = typename FieldTraits<F>::Ring;
  Matrix<R> out(m.rows(), m.cols(), R(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = FieldTraits<F>::clear(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = row[j];
  }
  return out;
}

}  // namespace

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix out(rows.size(), cols, T(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n, T(0));
  for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
  return out;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
Matrix<T> Matrix<T>::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw PreconditionError("row block out of range");
  Matrix out(count, cols_, T(0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  }
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_, T(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

template <class T>
bool Matrix<T>::is_zero() const {
  for (const T& x : data_) {
    if (is_nonzero(x)) return false;
  }
  return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!is_nonzero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_nonzero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix-vector product shape mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_nonzero(a(i, k)) && is_nonzero(v[k])) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

template <class R>
FractionFreeForm<R> fraction_free_rref(Matrix<R> a) {
  FractionFreeForm<R> out;
  R prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !is_nonzero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const R piv = a(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const R factor = a(i, c);
      const bool eliminate = is_nonzero(factor);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j == c) continue;
        R v = piv * a(i, j);
        if (eliminate && is_nonzero(a(r, j))) v -= factor * a(r, j);
        a(i, j) = exact_quotient(v, prev);
      }
      a(i, c) = R(0);
    }
    // Row r keeps its entries: they already are minors of the right size.
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.denominator = prev;
  out.reduced = std::move(a);
  return out;
}

template <class F>
RowEchelon<F> rref(const Matrix<F>& m) {
  using Traits = FieldTraits<F>;
  const auto ff = fraction_free_rref(cleared(m));
  RowEchelon<F> out;
  out.rank = ff.rank;
  out.pivots = ff.pivots;
  out.reduced = Matrix<F>(m.rows(), m.cols(), F(0));
  for (std::size_t i = 0; i < ff.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == ff.pivots[i]) {
        out.reduced(i, j) = F(1);
      } else if (is_nonzero(ff.reduced(i, j))) {
        out.reduced(i, j) = Traits::divide(ff.reduced(i, j), ff.denominator);
      }
    }
  }
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return fraction_free_rref(cleared(m)).rank;
}

template <class F>
Subspace<F> Subspace<F>::span(const std::vector<std::vector<F>>& vectors, std::size_t ambient) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw PreconditionError("vector length does not match the ambient dimension");
  }
  return row_space(Matrix<F>::from_rows(vectors, ambient));
}

template <class F>
Subspace<F> Subspace<F>::row_space(const Matrix<F>& m) {
  const RowEchelon<F> e = rref(m);
  Subspace out(m.cols());
  out.basis_ = e.reduced.row_block(0, e.rank);
  out.pivots_ = e.pivots;
  return out;
}

template <class F>
bool Subspace<F>::contains(const std::vector<F>& v) const {
  if (v.size() != ambient_) throw PreconditionError("vector length does not match the ambient dimension");
  std::vector<F> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const F c = w[pivots_[i]];
    if (!is_nonzero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (is_nonzero(basis_(i, j))) w[j] -= c * basis_(i, j);
    }
  }
  for (const F& x : w) {
    if (is_nonzero(x)) return false;
  }
  return true;
}

template <class F>
bool Subspace<F>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw PreconditionError("subspaces live in different ambient spaces");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

template <class F>
bool span_contains(const Subspace<F>& a, const Subspace<F>& b) {
  return a.contains(b);
}

template <class F>
std::vector<std::vector<F>> kernel_vectors(const Matrix<F>& m) {
  using Traits = FieldTraits<F>;
  using R = typename Traits::Ring;
  const auto ff = fraction_free_rref(cleared(m));
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ff.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = Traits::lift(ff.denominator);
    for (std::size_t i = 0; i < ff.rank; ++i) v[ff.pivots[i]] = Traits::lift(R(-ff.reduced(i, f)));
    out.push_back(primitive_vector(v));
  }
  return out;
}

template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  return Subspace<F>::span(kernel_vectors(m), m.cols());
}

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon<Rational> e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<Rational> out(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

Matrix<Rational> evaluate(const Matrix<RationalFunction>& m, std::span<const Rational> point) {
  Matrix<Rational> out(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).evaluate(point);
    }
  }
  return out;
}

std::vector<Rational> primitive_vector(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  bool negate = false;
  for (const Rational& x : v) {
    if (sgn(x) != 0) {
      negate = sgn(x) < 0;
      break;
    }
  }
  for (const Integer& x : FieldTraits<Rational>::clear(v)) out.emplace_back(negate ? Integer(-x) : x);
  return out;
}

std::vector<RationalFunction> primitive_vector(const std::vector<RationalFunction>& v) {
  std::vector<Polynomial> polys = FieldTraits<RationalFunction>::clear(v);
  Polynomial g;
  for (const Polynomial& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) return v;
  // Integer coefficients with content 1; first nonzero entry's leading
  // coefficient positive.
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  Rational lead = 0;
  for (Polynomial& p : polys) {
    if (p.is_zero()) continue;
    if (!g.is_constant()) p = divide_exact(p, g);
    if (sgn(lead) == 0) lead = p.leading_coefficient();
    for (const Term& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(lead) < 0) scale = -scale;
  std::vector<RationalFunction> out;
  out.reserve(v.size());
  for (const Polynomial& p : polys) out.emplace_back(p.scaled(scale));
  return out;
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template class Matrix<Polynomial>;
template class Matrix<RationalFunction>;
template Matrix<Rational> operator*(const Matrix<Rational>&, const Matrix<Rational>&);
template Matrix<RationalFunction> operator*(const Matrix<RationalFunction>&, const Matrix<RationalFunction>&);
template std::vector<Rational> operator*(const Matrix<Rational>&, const std::vector<Rational>&);
template std::vector<RationalFunction> operator*(const Matrix<RationalFunction>&, const std::vector<RationalFunction>&);
template FractionFreeForm<Integer> fraction_free_rref(Matrix<Integer>);
template FractionFreeForm<Polynomial> fraction_free_rref(Matrix<Polynomial>);
template RowEchelon<Rational> rref(const Matrix<Rational>&);
template RowEchelon<RationalFunction> rref(const Matrix<RationalFunction>&);
template std::size_t rank(const Matrix<Rational>&);
template std::size_t rank(const Matrix<RationalFunction>&);
template class Subspace<Rational>;
template class Subspace<RationalFunction>;
template bool span_contains(const Subspace<Rational>&, const Subspace<Rational>&);
template bool span_contains(const Subspace<RationalFunction>&, const Subspace<RationalFunction>&);
template std::vector<std::vector<Rational>> kernel_vectors(const Matrix<Rational>&);
template std::vector<std::vector<RationalFunction>> kernel_vectors(const Matrix<RationalFunction>&);
template Subspace<Rational> kernel_basis(const Matrix<Rational>&);
template Subspace<RationalFunction> kernel_basis(const Matrix<RationalFunction>&);

}  // namespace oscform
