#ifndef KS_SUBSPACE_HPP
#define KS_SUBSPACE_HPP

#include <functional>
#include <vector>

#include "ks/matrix.hpp"

namespace ks {

/// A subspace of the ambient column space, held in a canonical form: the
/// column span is stored as the transpose of the RREF of the generators'
/// transpose. Equal spans produce identical canonical matrices, so equality
/// is entrywise comparison.
template <class S>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {
    basis_ = Matrix<S>(ambient_dim, 0);
  }
  /// Span of the columns of `gens`.
  static Subspace span(const Matrix<S>& gens) {
    Subspace s(gens.rows());
    Matrix<S> rt = gens.transpose();
    size_t rank = rref(rt).size();
    Matrix<S> canon(gens.rows(), rank);
    for (size_t r = 0; r < rank; ++r)
      for (size_t i = 0; i < gens.rows(); ++i) canon(i, r) = rt(r, i);
    s.basis_ = canon;
    return s;
  }
  static Subspace span_vectors(size_t ambient,
                               const std::vector<std::vector<S>>& vecs) {
    return span(Matrix<S>::from_columns(ambient, vecs));
  }
  static Subspace full(size_t ambient) {
    return span(Matrix<S>::identity(ambient));
  }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

  bool contains(const std::vector<S>& v) const {
    Matrix<S> aug = basis_.hstack(Matrix<S>::column(v));
    return rank_of(aug) == dim();
  }
  bool contains(const Subspace& other) const {
    check_ambient(other);
    if (other.dim() > dim()) return false;
    Matrix<S> aug = basis_.hstack(other.basis_);
    return rank_of(aug) == dim();
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    return span(basis_.hstack(other.basis_));
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // Kernel of [A | -B]: pairs (x, y) with A x = B y; intersection = A x.
    Matrix<S> nb(other.basis_.rows(), other.basis_.cols());
    for (size_t i = 0; i < nb.rows(); ++i)
      for (size_t j = 0; j < nb.cols(); ++j)
        nb(i, j) = scalar_traits<S>::zero() - other.basis_(i, j);
    Matrix<S> ker = kernel_of(basis_.hstack(nb));
    // Extract the x block (top dim() rows of each kernel vector).
    Matrix<S> xblock(dim(), ker.cols());
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < ker.cols(); ++j) xblock(i, j) = ker(i, j);
    return span(basis_ * xblock);
  }

  Subspace conjugate() const { return span(basis_.conjugate()); }

  /// Image of this subspace under a linear map given by its matrix.
  Subspace image_under(const Matrix<S>& map) const {
    return span(map * basis_);
  }

  /// Span of products mul(a_i, b_j) over basis pairs of A and B.
  static Subspace product_span(
      const Subspace& a, const Subspace& b,
      const std::function<std::vector<S>(const std::vector<S>&,
                                         const std::vector<S>&)>& mul) {
    a.check_ambient(b);
    std::vector<std::vector<S>> prods;
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < b.dim(); ++j)
        prods.push_back(mul(a.basis_.col(i), b.basis_.col(j)));
    if (prods.empty()) return Subspace(a.ambient_);
    return span_vectors(prods.front().size(), prods);
  }

  /// {v : form(s, v) = 0 for all s in S} with form(s, v) = conj(s)^T G v when
  /// `conjugate_left`, else s^T G v.
  Subspace orth_complement_in(const Matrix<S>& gram, bool conjugate_left) const {
    if (gram.rows() != ambient_ || gram.cols() != ambient_)
      throw dim_error("orth_complement: gram size mismatch");
    Matrix<S> left = conjugate_left ? basis_.conj_transpose() : basis_.transpose();
    return span(kernel_of(left * gram));
  }

 private:
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw dim_error("ambient dimension mismatch");
  }
  size_t ambient_;
  Matrix<S> basis_;
};

using CSubspace = Subspace<ComplexQuad>;

}  // namespace ks

#endif  // KS_SUBSPACE_HPP
