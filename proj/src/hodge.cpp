#include "ks/hodge.hpp"

#include <sstream>

namespace ks {

namespace {

std::string dim_witness(const char* what, size_t got, size_t want) {
  std::ostringstream os;
  os << what << " dim " << got << ", expected " << want;
  return os.str();
}

std::string pivot_witness(const DefinitenessCert<ComplexQuad>& c) {
  std::ostringstream os;
  os << "pivots " << c.n_pos << "+/" << c.n_neg << "-/" << c.n_zero << "0 -> "
     << to_string(c.verdict);
  return os.str();
}

}  // namespace

Matrix<ComplexQuad> hermitian_gram(const Matrix<Rational>& gram,
                                   const Matrix<ComplexQuad>& basis) {
  Matrix<ComplexQuad> gc = complexify(gram);
  return basis.transpose() * gc * basis.conjugate();
}

CSubspace WeightTwoHS::h11() const {
  // h-orthogonal complement of h20 + h02; since the Gram matrix is real
  // symmetric, h(s, v) = 0 for all s in the span reads conj(s)^T G v = 0.
  CSubspace w = h20.sum(h02());
  return w.orth_complement_in(complexify(gram), /*conjugate_left=*/true);
}

CertReport validate_weight2(const WeightTwoHS& hs) {
  if (hs.h20.dim() == 0) throw math_error("H^{2,0} = 0 is excluded");
  if (hs.gram.rows() != hs.rank || hs.gram.cols() != hs.rank)
    throw dim_error("gram size does not match rank");
  if (hs.h20.ambient_dim() != hs.rank)
    throw dim_error("h20 ambient does not match rank");
  CertReport rep;
  size_t n = hs.rank, p = hs.p();

  if (!(hs.gram.transpose() == hs.gram)) {
    rep.add("gram symmetric", false);
    return rep;
  }
  rep.add("gram symmetric", true);

  Matrix<ComplexQuad> gc = complexify(hs.gram);
  const Matrix<ComplexQuad>& b20 = hs.h20.basis();

  // First Hodge-Riemann relation on H^{2,0}: <eta, eta'> = 0.
  Matrix<ComplexQuad> self = b20.transpose() * gc * b20;
  rep.add("h20 isotropic for <,>", self.is_zero());

  // h positive definite on H^{2,0}.
  auto cert20 = hermitian_definiteness(hermitian_gram(hs.gram, b20), true);
  rep.add("h positive definite on h20",
          cert20.verdict == Definiteness::positive, pivot_witness(cert20));

  // h20 and its conjugate intersect trivially (needed for dim bookkeeping).
  CSubspace h02 = hs.h02();
  rep.add("h20 independent of h02", hs.h20.intersect(h02).dim() == 0);

  CSubspace h11 = hs.h11();
  rep.add("h11 dimension", h11.dim() == n - 2 * p,
          dim_witness("h11", h11.dim(), n - 2 * p));
  rep.add("h11 conjugation-stable", h11.conjugate() == h11);
  if (h11.dim() > 0) {
    auto cert11 =
        hermitian_definiteness(hermitian_gram(hs.gram, h11.basis()), true);
    rep.add("h negative definite on h11",
            cert11.verdict == Definiteness::negative, pivot_witness(cert11));
  } else {
    rep.add("h negative definite on h11", true, "vacuous");
  }

  auto [npos, nneg, nzero] = signature_of(hs.gram);
  {
    std::ostringstream os;
    os << "signature (" << npos << "," << nneg << "), zero " << nzero;
    rep.add("gram signature (2p, n-2p)",
            npos == static_cast<int>(2 * p) &&
                nneg == static_cast<int>(n - 2 * p) && nzero == 0,
            os.str());
  }
  return rep;
}

CertReport validate_weight1(const WeightOneHS& hs) {
  CertReport rep;
  size_t n = hs.rank;
  if (hs.omega.rows() != n || hs.omega.cols() != n)
    throw dim_error("omega size does not match rank");
  if (hs.h10.ambient_dim() != n) throw dim_error("h10 ambient mismatch");

  bool skew = true;
  for (size_t i = 0; i < n && skew; ++i)
    for (size_t j = 0; j < n; ++j)
      if (hs.omega(i, j) != -hs.omega(j, i)) {
        skew = false;
        break;
      }
  rep.add("omega skew-symmetric", skew);

  CSubspace conj = hs.h10.conjugate();
  bool direct = hs.h10.intersect(conj).dim() == 0 &&
                hs.h10.dim() + conj.dim() == n;
  rep.add("H_C = h10 (+) conj(h10)", direct,
          dim_witness("h10", hs.h10.dim(), n / 2));

  Matrix<ComplexQuad> oc = complexify(hs.omega);
  const Matrix<ComplexQuad>& b = hs.h10.basis();
  Matrix<ComplexQuad> iso = b.transpose() * oc * b;
  rep.add("omega vanishes on h10 x h10", iso.is_zero());

  // h(w, w') = i * omega(w, conj w') positive definite on h10.
  Matrix<ComplexQuad> h = b.transpose() * oc * b.conjugate();
  Matrix<ComplexQuad> ih = ComplexQuad::i() * h;
  auto cert = hermitian_definiteness(ih, true);
  rep.add("i*omega(w, conj w') positive definite on h10",
          cert.verdict == Definiteness::positive, pivot_witness(cert));
  return rep;
}

Matrix<Rational> omega_adjoint(const Matrix<Rational>& omega,
                               const Matrix<Rational>& f) {
  return solve(omega, f.transpose() * omega);
}

std::vector<ComplexQuad> vectorize(const Matrix<ComplexQuad>& f) {
  std::vector<ComplexQuad> v(f.rows() * f.cols());
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j) v[i * f.cols() + j] = f(i, j);
  return v;
}

std::vector<Rational> vectorize(const Matrix<Rational>& f) {
  std::vector<Rational> v(f.rows() * f.cols());
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j) v[i * f.cols() + j] = f(i, j);
  return v;
}

Matrix<ComplexQuad> unvectorize(const std::vector<ComplexQuad>& v, size_t n) {
  Matrix<ComplexQuad> f(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) f(i, j) = v[i * n + j];
  return f;
}

WeightTwoHS induced_end_weight2(const WeightOneHS& w1) {
  size_t n = w1.rank;  // 2g
  size_t g = w1.g();
  size_t dim = n * n;

  // Gram: <E_ab, E_cd> = -Trace(E_ab o t(E_cd)).
  // Build the adjoint images of all matrix units once.
  Matrix<Rational> gram(dim, dim);
  std::vector<Matrix<Rational>> adj_units;
  adj_units.reserve(dim);
  for (size_t c = 0; c < n; ++c)
    for (size_t d = 0; d < n; ++d) {
      Matrix<Rational> e(n, n);
      e(c, d) = Rational(1);
      adj_units.push_back(omega_adjoint(w1.omega, e));
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      size_t row = a * n + b;
      for (size_t cd = 0; cd < dim; ++cd) {
        // Trace(E_ab * T) = T(b, a).
        gram(row, cd) = -adj_units[cd](b, a);
      }
    }

  // H^{2,0} of End = Hom(conj h10, h10): in the basis (w | conj w) these are
  // the block matrices P E_{k, g+l} P^{-1}.
  Matrix<ComplexQuad> P = w1.h10.basis().hstack(w1.h10.basis().conjugate());
  Matrix<ComplexQuad> Pinv = inverse(P);
  std::vector<std::vector<ComplexQuad>> gens;
  for (size_t k = 0; k < g; ++k)
    for (size_t l = 0; l < g; ++l) {
      Matrix<ComplexQuad> e(n, n);
      e(k, g + l) = ComplexQuad(1);
      gens.push_back(vectorize(P * e * Pinv));
    }
  WeightTwoHS out;
  out.rank = dim;
  out.gram = gram;
  out.h20 = CSubspace::span_vectors(dim, gens);
  return out;
}

}  // namespace ks
