#ifndef KS_HODGE_HPP
#define KS_HODGE_HPP

#include "ks/forms.hpp"
#include "ks/report.hpp"
#include "ks/subspace.hpp"

namespace ks {

/// Polarized weight-2 Hodge structure: rational lattice with symmetric Gram
/// matrix and the H^{2,0} subspace of the complexification. H^{0,2} and
/// H^{1,1} are always derived, never user-supplied.
struct WeightTwoHS {
  size_t rank = 0;
  Matrix<Rational> gram;  // symmetric, nondegenerate
  CSubspace h20;

  CSubspace h02() const { return h20.conjugate(); }
  /// h-orthogonal complement of h20 + h02 (h(a,b) = <a, conj b>).
  CSubspace h11() const;
  size_t p() const { return h20.dim(); }
};

/// Weight-1 Hodge structure: rational lattice with skew form omega and the
/// H^{1,0} subspace of the complexification.
struct WeightOneHS {
  size_t rank = 0;          // 2g
  Matrix<Rational> omega;   // skew-symmetric
  CSubspace h10;
  size_t g() const { return rank / 2; }
};

/// The quadratic field Q(sqrt d) the subspace coordinates live in: the first
/// d > 1 appearing among the basis entries, or 1 when all are rational.
inline std::int64_t coefficient_field(const CSubspace& s) {
  const Matrix<ComplexQuad>& b = s.basis();
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j).re().d() > 1) return b(i, j).re().d();
      if (b(i, j).im().d() > 1) return b(i, j).im().d();
    }
  return 1;
}

/// Hermitian matrix of h(a,b) = <a, conj b> on the given basis columns.
Matrix<ComplexQuad> hermitian_gram(const Matrix<Rational>& gram,
                                   const Matrix<ComplexQuad>& basis);

/// Full Hodge-Riemann validation; throws math_error when h20 is empty
/// (the construction assumes H^{2,0} != 0).
CertReport validate_weight2(const WeightTwoHS& hs);

CertReport validate_weight1(const WeightOneHS& hs);

/// The omega-adjoint of an endomorphism f of the weight-1 lattice:
/// omega(f x, y) = omega(x, t(f) y), i.e. t(f) = omega^{-1} f^T omega.
Matrix<Rational> omega_adjoint(const Matrix<Rational>& omega,
                               const Matrix<Rational>& f);

/// The induced weight-2 structure on End(H_1): 4g^2-dimensional lattice with
/// Gram <f, g> = -Trace(f o t(g)) and H^{2,0} = Hom(conj h10, h10).
/// Endomorphisms are vectorized row-major: E_{ij} (e_j -> e_i) at i*2g + j.
WeightTwoHS induced_end_weight2(const WeightOneHS& w1);

/// Vectorization helpers for the End lattice convention above.
std::vector<ComplexQuad> vectorize(const Matrix<ComplexQuad>& f);
std::vector<Rational> vectorize(const Matrix<Rational>& f);
Matrix<ComplexQuad> unvectorize(const std::vector<ComplexQuad>& v, size_t n);

}  // namespace ks

#endif  // KS_HODGE_HPP
