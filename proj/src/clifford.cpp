#include "ks/clifford.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "ks/poly.hpp"

namespace ks {

namespace {

/// Normal-ordered product of two basis monomials: mask and coefficient.
/// Bits of b are absorbed into a in ascending order; each transposition past
/// a higher generator flips the sign, and a repeated generator contracts to
/// e_j^2 = -G'_jj.
std::pair<Rational, size_t> mono_mul(size_t a, size_t b,
                                     const Matrix<Rational>& d) {
  Rational coef(1);
  size_t acc = a;
  for (size_t j = 0; b >> j; ++j) {
    if (!((b >> j) & 1)) continue;
    size_t higher = acc >> (j + 1);
    if (std::popcount(higher) % 2 == 1) coef = -coef;
    if ((acc >> j) & 1) {
      coef *= -d(j, j);
      acc &= ~(size_t(1) << j);
    } else {
      acc |= size_t(1) << j;
    }
  }
  return {coef, acc};
}

/// Determinant of a small complex matrix by first-column Laplace expansion.
ComplexQuad small_det(const Matrix<ComplexQuad>& m) {
  size_t k = m.rows();
  if (k == 0) return ComplexQuad(1);
  if (k == 1) return m(0, 0);
  ComplexQuad out;
  for (size_t i = 0; i < k; ++i) {
    if (m(i, 0).is_zero()) continue;
    Matrix<ComplexQuad> minor(k - 1, k - 1);
    for (size_t r = 0, rr = 0; r < k; ++r) {
      if (r == i) continue;
      for (size_t c = 1; c < k; ++c) minor(rr, c - 1) = m(r, c);
      ++rr;
    }
    ComplexQuad term = m(i, 0) * small_det(minor);
    if (i % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

/// The Clifford element identified with v_1 ^ ... ^ v_k (degree-1 vectors in
/// diagonalized coordinates), via the monomial <-> wedge correspondence.
std::vector<ComplexQuad> wedge_element(
    const std::vector<std::vector<ComplexQuad>>& vs, size_t n) {
  size_t k = vs.size();
  std::vector<ComplexQuad> out(size_t(1) << n);
  for (size_t mask = 0; mask < out.size(); ++mask) {
    if (size_t(std::popcount(mask)) != k) continue;
    Matrix<ComplexQuad> m(k, k);
    size_t r = 0;
    for (size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (size_t j = 0; j < k; ++j) m(r, j) = vs[j][i];
      ++r;
    }
    out[mask] = small_det(m);
  }
  return out;
}

std::vector<ComplexQuad> conj_vec(const std::vector<ComplexQuad>& v) {
  std::vector<ComplexQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

}  // namespace

std::string monomial_name(size_t mask) {
  if (mask == 0) return "1";
  std::ostringstream os;
  for (size_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1) os << "e{" << i + 1 << "}";
  return os.str();
}

std::string element_name(const std::vector<Rational>& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t m = 0; m < v.size(); ++m) {
    if (v[m].is_zero()) continue;
    if (!first) os << " + ";
    os << to_string(v[m]);
    if (m != 0) os << "*" << monomial_name(m);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CliffordAlgebra clifford_build(const Matrix<Rational>& gram,
                               const WeightTwoHS& hs) {
  size_t n = gram.rows();
  if (n > 6) throw config_error("clifford rank cap is 6 (dimension 64)");
  if (!(gram.transpose() == gram)) throw math_error("gram is not symmetric");

  CliffordAlgebra cl;
  cl.n = n;
  cl.lattice_hs = hs;
  auto [p, d] = congruence_diagonalize(gram);
  cl.diag_transform = p;
  cl.generator_gram = d;
  size_t dim = size_t(1) << n;

  Matrix<Rational> stc(dim * dim, dim);
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b) {
      auto [coef, mask] = mono_mul(a, b, d);
      stc(a * dim + b, mask) = coef;
    }

  std::vector<Rational> unit(dim, Rational(0));
  unit[0] = 1;

  // Reversal: rebuild each monomial as the product of its generators in
  // descending order, through the general product routine.
  auto raw_mul = [&](const std::vector<Rational>& x,
                     const std::vector<Rational>& y) {
    std::vector<Rational> out(dim, Rational(0));
    for (size_t a = 0; a < dim; ++a) {
      if (x[a].is_zero()) continue;
      for (size_t b = 0; b < dim; ++b) {
        if (y[b].is_zero()) continue;
        auto [coef, mask] = mono_mul(a, b, d);
        out[mask] += x[a] * y[b] * coef;
      }
    }
    return out;
  };
  Matrix<Rational> invol(dim, dim);
  for (size_t m = 0; m < dim; ++m) {
    std::vector<Rational> acc = unit;
    for (size_t j = n; j-- > 0;) {
      if (!((m >> j) & 1)) continue;
      std::vector<Rational> gen(dim, Rational(0));
      gen[size_t(1) << j] = 1;
      acc = raw_mul(acc, gen);
    }
    for (size_t i = 0; i < dim; ++i) invol(i, m) = acc[i];
  }

  // Intersection form <x, y> = -(scalar part of t(x) y).
  Matrix<Rational> cg(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Rational> ti = invol.col(i);
    for (size_t j = 0; j < dim; ++j) {
      std::vector<Rational> ej(dim, Rational(0));
      ej[j] = 1;
      cg(i, j) = -raw_mul(ti, ej)[0];
    }
  }

  // Induced weight-2 grading: (2,0) part spanned by eta ^ (h11 monomials),
  // identified with Clifford monomials in the diagonalized basis.
  if (hs.h20.dim() != 1)
    throw math_error("induced grading needs h^{2,0} of rank 1");
  Matrix<ComplexQuad> pinv_c = inverse(complexify(p));
  std::vector<ComplexQuad> eta1 = pinv_c.apply(hs.h20.basis().col(0));
  CSubspace h11 = hs.h11();
  std::vector<std::vector<ComplexQuad>> h11_diag;
  for (size_t j = 0; j < h11.dim(); ++j)
    h11_diag.push_back(pinv_c.apply(h11.basis().col(j)));

  std::vector<std::vector<ComplexQuad>> gens;
  size_t subsets = size_t(1) << h11_diag.size();
  for (size_t s = 0; s < subsets; ++s) {
    std::vector<std::vector<ComplexQuad>> vs{eta1};
    for (size_t j = 0; j < h11_diag.size(); ++j)
      if ((s >> j) & 1) vs.push_back(h11_diag[j]);
    gens.push_back(wedge_element(vs, n));
  }

  WeightTwoHS chs;
  chs.rank = dim;
  chs.gram = cg;
  chs.h20 = CSubspace::span_vectors(dim, gens);

  cl.base = HodgeAlgebra(chs, std::move(stc), std::move(unit), std::move(invol));
  cl.eta.assign(dim, ComplexQuad());
  for (size_t j = 0; j < n; ++j) cl.eta[size_t(1) << j] = eta1[j];
  return cl;
}

const WeightTwoHS& induced_weight2(const CliffordAlgebra& cl) {
  return cl.base.hs();
}

Rational clifford_form(const CliffordAlgebra& cl, const std::vector<Rational>& x,
                       const std::vector<Rational>& y) {
  return -cl.base.multiply(cl.base.t(x), y)[0];
}

KSStructure ks_structure(const CliffordAlgebra& cl) {
  KSStructure out;
  size_t dim = cl.dim(), n = cl.n;
  const Matrix<Rational>& d = cl.generator_gram;

  // <eta, etabar> on the lattice, in diagonalized coordinates.
  ComplexQuad c;
  for (size_t j = 0; j < n; ++j) {
    const ComplexQuad& ej = cl.eta[size_t(1) << j];
    c += ComplexQuad(RealQuad(d(j, j))) * ej * ej.conj();
  }
  if (!c.is_real() || c.re().exact_sign() <= 0)
    throw math_error("<eta, etabar> is not a positive real");

  // Scale eta so that <eta, etabar> = 2.
  std::optional<RealQuad> f = field_sqrt(
      RealQuad(2) / c.re(), coefficient_field(cl.lattice_hs.h20));
  if (!f)
    throw math_error(
        "eta normalization factor lies outside the configured field");
  std::vector<ComplexQuad> eta_s(dim);
  for (size_t i = 0; i < dim; ++i) eta_s[i] = ComplexQuad(*f) * cl.eta[i];
  out.report.add("<eta, etabar> = 2 after scaling", true,
                 "factor " + to_string(*f));

  std::vector<ComplexQuad> ee = cl.base.multiply_c(eta_s, conj_vec(eta_s));
  ee[0] += ComplexQuad(2);
  ComplexQuad half_mi = -ComplexQuad::i() / ComplexQuad(2);
  out.e.assign(dim, ComplexQuad());
  for (size_t i = 0; i < dim; ++i) out.e[i] = half_mi * ee[i];

  bool real = true;
  for (const ComplexQuad& v : out.e) real = real && v.is_real();
  out.report.add("e real", real);

  std::vector<ComplexQuad> e2 = cl.base.multiply_c(out.e, out.e);
  std::vector<ComplexQuad> minus_one(dim);
  minus_one[0] = ComplexQuad(-1);
  out.report.add("e^2 = -1", e2 == minus_one);

  // W = eta C(H_C).
  std::vector<std::vector<ComplexQuad>> prods;
  for (size_t j = 0; j < dim; ++j) {
    std::vector<ComplexQuad> ej(dim);
    ej[j] = ComplexQuad(1);
    prods.push_back(cl.base.multiply_c(eta_s, ej));
  }
  CSubspace w = CSubspace::span_vectors(dim, prods);

  // i-eigenspace of left multiplication by e.
  Matrix<ComplexQuad> le = cl.base.left_mul(out.e);
  for (size_t i = 0; i < dim; ++i) le(i, i) -= ComplexQuad::i();
  CSubspace wprime = CSubspace::span(kernel_of(le));
  {
    std::ostringstream os;
    os << "dim W = " << w.dim() << ", dim W' = " << wprime.dim();
    out.report.add("i-eigenspace of L_e equals W = eta C(H_C)", w == wprime,
                   os.str());
  }

  // Float path: orthonormalize (Re eta, Im eta), form e = e2 e1, compare.
  {
    using C = std::complex<double>;
    std::vector<double> r1(n), r2(n);
    for (size_t j = 0; j < n; ++j) {
      C ej = cl.eta[size_t(1) << j].to_complex();
      r1[j] = ej.real();
      r2[j] = ej.imag();
    }
    auto form = [&](const std::vector<double>& x, const std::vector<double>& y) {
      double s = 0;
      for (size_t j = 0; j < n; ++j) s += to_double(d(j, j)) * x[j] * y[j];
      return s;
    };
    double n1 = std::sqrt(form(r1, r1)), n2 = std::sqrt(form(r2, r2));
    std::vector<C> e1v(dim), e2v(dim);
    for (size_t j = 0; j < n; ++j) {
      e1v[size_t(1) << j] = C(r1[j] / n1, 0);
      e2v[size_t(1) << j] = C(r2[j] / n2, 0);
    }
    std::vector<C> ef = cl.base.multiply_s(e2v, e1v);
    Matrix<C> lef = cl.base.left_mul(ef);
    for (size_t i = 0; i < dim; ++i) lef(i, i) -= C(0, 1);
    Matrix<C> ker = kernel_of(lef);
    // Max principal-angle sine between ker columns and W.
    Matrix<C> b = to_float(w.basis());
    Matrix<C> bh = b.conj_transpose();
    Matrix<C> gram_b = bh * b;
    double worst = 0;
    for (size_t j = 0; j < ker.cols(); ++j) {
      Matrix<C> wcol(dim, 1);
      for (size_t i = 0; i < dim; ++i) wcol(i, 0) = ker(i, j);
      Matrix<C> x = solve(gram_b, bh * wcol);
      Matrix<C> res = wcol - b * x;
      double rn = 0, wn = 0;
      for (size_t i = 0; i < dim; ++i) {
        rn += std::norm(res(i, 0));
        wn += std::norm(wcol(i, 0));
      }
      worst = std::max(worst, std::sqrt(rn / wn));
    }
    std::ostringstream os;
    os << "max principal-angle sine " << worst << " (float)";
    out.report.add("float path agrees with exact W", worst < float_tol(),
                   os.str());
  }

  out.w1.rank = dim;
  out.w1.omega = Matrix<Rational>(dim, dim);  // polarization is chosen later
  out.w1.h10 = w;
  if (!out.report.all_passed())
    throw certificate_error(out.report.failures().front());
  return out;
}

}  // namespace ks
