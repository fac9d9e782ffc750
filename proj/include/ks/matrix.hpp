#ifndef KS_MATRIX_HPP
#define KS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ks/scalar.hpp"

namespace ks {

struct dim_error : std::runtime_error {
  explicit dim_error(const std::string& m) : std::runtime_error(m) {}
};
struct inconsistent_system : std::runtime_error {
  inconsistent_system() : std::runtime_error("inconsistent linear system") {}
};

template <class S>
class Matrix {
 public:
  using traits = scalar_traits<S>;

  Matrix() : r_(0), c_(0) {}
  Matrix(size_t rows, size_t cols)
      : r_(rows), c_(cols), e_(rows * cols, traits::zero()) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = traits::one();
    return m;
  }
  static Matrix column(const std::vector<S>& v) {
    Matrix m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  static Matrix from_columns(size_t rows, const std::vector<std::vector<S>>& cols) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw dim_error("column length mismatch");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  S& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const S& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }

  std::vector<S> col(size_t j) const {
    std::vector<S> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<S> row(size_t i) const {
    std::vector<S> v(c_);
    for (size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  Matrix conjugate() const {
    Matrix m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = traits::conj((*this)(i, j));
    return m;
  }
  Matrix conj_transpose() const { return conjugate().transpose(); }

  bool is_zero() const {
    for (const S& v : e_)
      if (!traits::is_zero(v)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw dim_error("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const S& aik = a(i, k);
        if (traits::is_zero(aik)) continue;
        for (size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix m(a.r_, a.c_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != c_) throw dim_error("matrix-vector shape mismatch");
    std::vector<S> out(r_, traits::zero());
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j)
        if (!traits::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix hstack(const Matrix& b) const {
    if (r_ != b.r_) throw dim_error("hstack row mismatch");
    Matrix m(r_, c_ + b.c_);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
      for (size_t j = 0; j < b.c_; ++j) m(i, c_ + j) = b(i, j);
    }
    return m;
  }
  Matrix vstack(const Matrix& b) const {
    if (c_ != b.c_) throw dim_error("vstack column mismatch");
    Matrix m(r_ + b.r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (size_t i = 0; i < b.r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(r_ + i, j) = b(i, j);
    return m;
  }
  Matrix cols_slice(size_t from, size_t count) const {
    Matrix m(r_, count);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, from + j);
    return m;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw dim_error("matrix shape mismatch");
  }
  size_t r_, c_;
  std::vector<S> e_;
};

/// Reduced row echelon form, in place. Exact backends use fraction-free
/// (Bareiss) forward elimination followed by field-division normalization;
/// the float backend pivots by magnitude. Returns pivot column indices.
template <class S>
std::vector<size_t> rref(Matrix<S>& m) {
  using T = scalar_traits<S>;
  std::vector<size_t> pivots;
  size_t rank = 0;
  S prev = T::one();
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    // Pivot choice: first nonzero for exact scalars, largest for float.
    size_t best = rank;
    double best_score = T::norm_score(m(rank, col));
    if constexpr (!T::exact) {
      for (size_t i = rank + 1; i < m.rows(); ++i)
        if (T::norm_score(m(i, col)) > best_score) {
          best = i;
          best_score = T::norm_score(m(i, col));
        }
    } else {
      while (best < m.rows() && T::is_zero(m(best, col))) ++best;
      best_score = best < m.rows() ? 1.0 : 0.0;
    }
    if (best >= m.rows() || T::is_zero(m(best, col))) continue;
    if (best != rank)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(best, j));
    const S piv = m(rank, col);
    for (size_t i = rank + 1; i < m.rows(); ++i) {
      if constexpr (T::exact) {
        // Bareiss step: exact division by the previous pivot.
        for (size_t j = col + 1; j < m.cols(); ++j)
          m(i, j) = (piv * m(i, j) - m(i, col) * m(rank, j)) / prev;
      } else {
        S f = m(i, col) / piv;
        for (size_t j = col + 1; j < m.cols(); ++j)
          m(i, j) = m(i, j) - f * m(rank, j);
      }
      m(i, col) = T::zero();
    }
    prev = piv;
    pivots.push_back(col);
    ++rank;
  }
  // Back substitution and pivot normalization (field divisions).
  for (size_t k = rank; k-- > 0;) {
    size_t pc = pivots[k];
    S piv = m(k, pc);
    for (size_t j = pc; j < m.cols(); ++j) m(k, j) = m(k, j) / piv;
    for (size_t i = 0; i < k; ++i) {
      S f = m(i, pc);
      if (T::is_zero(f)) continue;
      for (size_t j = pc; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(k, j);
      m(i, pc) = T::zero();
    }
  }
  // Clear the numerically-zero tail rows for float backends.
  if constexpr (!T::exact) {
    for (size_t i = rank; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) = T::zero();
  }
  return pivots;
}

template <class S>
size_t rank_of(Matrix<S> m) {
  return rref(m).size();
}

/// Kernel basis, as columns of an n x k matrix.
template <class S>
Matrix<S> kernel_of(Matrix<S> m) {
  using T = scalar_traits<S>;
  size_t n = m.cols();
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  Matrix<S> ker(n, n - pivots.size());
  size_t k = 0;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    ker(j, k) = T::one();
    for (size_t r = 0; r < pivots.size(); ++r) {
      ker(pivots[r], k) = T::zero() - m(r, j);
    }
    ++k;
  }
  return ker;
}

struct SolveResult {
  size_t rank;
  bool consistent;
};

/// Solves M x = rhs (each rhs column independently). Throws
/// inconsistent_system when no solution exists.
template <class S>
Matrix<S> solve(const Matrix<S>& m, const Matrix<S>& rhs) {
  using T = scalar_traits<S>;
  if (m.rows() != rhs.rows()) throw dim_error("solve: rhs row mismatch");
  Matrix<S> aug = m.hstack(rhs);
  std::vector<size_t> pivots = rref(aug);
  for (size_t p : pivots)
    if (p >= m.cols()) throw inconsistent_system();
  // Residual rows must vanish.
  for (size_t i = pivots.size(); i < aug.rows(); ++i)
    for (size_t j = m.cols(); j < aug.cols(); ++j)
      if (!T::is_zero(aug(i, j))) throw inconsistent_system();
  Matrix<S> x(m.cols(), rhs.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (size_t j = 0; j < rhs.cols(); ++j)
      x(pivots[r], j) = aug(r, m.cols() + j);
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw dim_error("inverse of non-square matrix");
  Matrix<S> inv = solve(m, Matrix<S>::identity(m.rows()));
  return inv;
}

inline Matrix<ComplexQuad> complexify(const Matrix<Rational>& m) {
  Matrix<ComplexQuad> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = ComplexQuad(m(i, j));
  return out;
}

inline Matrix<ComplexQuad> complexify(const Matrix<RealQuad>& m) {
  Matrix<ComplexQuad> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = ComplexQuad(m(i, j));
  return out;
}

inline std::vector<ComplexQuad> complexify(const std::vector<Rational>& v) {
  std::vector<ComplexQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = ComplexQuad(v[i]);
  return out;
}

inline std::vector<ComplexQuad> complexify(const std::vector<RealQuad>& v) {
  std::vector<ComplexQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = ComplexQuad(v[i]);
  return out;
}

inline Matrix<std::complex<double>> to_float(const Matrix<ComplexQuad>& m) {
  Matrix<std::complex<double>> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

}  // namespace ks

#endif  // KS_MATRIX_HPP
