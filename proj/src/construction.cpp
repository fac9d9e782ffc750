#include "ks/construction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ks/poly.hpp"

namespace ks {

namespace {

std::vector<Rational> basis_vec(size_t n, size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::vector<RealQuad> to_rq(const std::vector<Rational>& v) {
  std::vector<RealQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = RealQuad(v[i]);
  return out;
}

std::vector<ComplexQuad> conj_vec(const std::vector<ComplexQuad>& v) {
  std::vector<ComplexQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

ComplexQuad pair_c(const Matrix<Rational>& gram, const std::vector<ComplexQuad>& x,
                   const std::vector<ComplexQuad>& y) {
  ComplexQuad out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      const Rational& g = gram(i, j);
      if (!g.is_zero() && !y[j].is_zero())
        out += x[i] * ComplexQuad(RealQuad(g)) * y[j];
    }
  }
  return out;
}

RealQuad pair_rq(const Matrix<Rational>& gram, const std::vector<RealQuad>& x,
                 const std::vector<RealQuad>& y) {
  RealQuad out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      const Rational& g = gram(i, j);
      if (!g.is_zero() && !y[j].is_zero()) out += x[i] * RealQuad(g) * y[j];
    }
  }
  return out;
}

/// Real vector with possible sqrt(d) parts -> rational vector, replacing
/// sqrt(d) by a continued-fraction convergent of the given depth.
std::vector<Rational> rationalize(const std::vector<ComplexQuad>& v, int depth) {
  std::vector<Rational> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_real()) throw math_error("rationalize: entry is not real");
    const RealQuad& r = v[i].re();
    if (r.is_rational()) {
      out[i] = r.a();
    } else {
      out[i] = r.a() + r.b() * sqrt_convergent(r.d(), depth);
    }
  }
  return out;
}

std::vector<Rational> rationalize(const std::vector<RealQuad>& v, int depth) {
  std::vector<ComplexQuad> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = ComplexQuad(v[i]);
  return rationalize(c, depth);
}

std::string dims_witness(const char* a, size_t x, const char* b, size_t y) {
  std::ostringstream os;
  os << a << " " << x << ", " << b << " " << y;
  return os.str();
}

Matrix<ComplexQuad> shift_by_i(Matrix<ComplexQuad> m, const ComplexQuad& s) {
  for (size_t i = 0; i < m.rows(); ++i) m(i, i) += s;
  return m;
}

}  // namespace

CSubspace compute_W(const HodgeAlgebra& a) {
  const CSubspace& h20 = a.hs().h20;
  if (h20.dim() == 0) throw math_error("H^{2,0} = 0 is excluded");
  auto mul = [&a](const std::vector<ComplexQuad>& x,
                  const std::vector<ComplexQuad>& y) { return a.multiply_c(x, y); };
  return CSubspace::product_span(h20, CSubspace::full(a.dim()), mul);
}

Decomposition decompose(const HodgeAlgebra& a) {
  size_t n = a.dim();
  auto mul = [&a](const std::vector<ComplexQuad>& x,
                  const std::vector<ComplexQuad>& y) { return a.multiply_c(x, y); };
  auto prod = [&](const CSubspace& x, const CSubspace& y) {
    return CSubspace::product_span(x, y, mul);
  };
  CSubspace full = CSubspace::full(n);
  CSubspace h20 = a.hs().h20, h02 = a.hs().h02(), h11 = a.hs().h11();

  Decomposition dec;
  dec.W = compute_W(a);
  dec.Wbar = dec.W.conjugate();
  CSubspace ww = dec.W.sum(dec.Wbar);
  dec.M = ww.orth_complement_in(complexify(a.gram()), /*conjugate_left=*/false);
  CertReport& rep = dec.certificates;

  rep.add("W contains H^{2,0}", dec.W.contains(h20),
          dims_witness("dim W", dec.W.dim(), "dim H^{2,0}", h20.dim()));
  rep.add("W cap Wbar = 0", dec.W.intersect(dec.Wbar).dim() == 0);
  rep.add("Wbar = H^{0,2} H_C", prod(h02, full) == dec.Wbar);
  rep.add("W (+) Wbar is a left ideal", ww.contains(prod(full, ww)));
  rep.add("W (+) Wbar is a right ideal", ww.contains(prod(ww, full)));
  rep.add("M complements W (+) Wbar",
          dec.M.intersect(ww).dim() == 0 && dec.M.dim() + ww.dim() == n,
          dims_witness("dim M", dec.M.dim(), "dim W(+)Wbar", ww.dim()));
  rep.add("(W (+) Wbar) M = 0",
          prod(ww, dec.M).dim() == 0 && prod(dec.M, ww).dim() == 0);
  {
    size_t graded = ww.intersect(h20).dim() + ww.intersect(h11).dim() +
                    ww.intersect(h02).dim();
    rep.add("W (+) Wbar is Hodge-stable", graded == ww.dim(),
            dims_witness("graded pieces", graded, "dim", ww.dim()));
  }
  rep.add("W (+) Wbar is t-stable",
          ww.contains(ww.image_under(complexify(a.involution()))));
  rep.add("M in H^{1,1}", dec.M.dim() == 0 || h11.contains(dec.M));
  rep.add("M conjugation-stable", dec.M.conjugate() == dec.M);

  if (!rep.all_passed()) throw certificate_error(rep.failures().front());
  return dec;
}

std::pair<std::vector<Rational>, CertReport> polarization_search(
    const HodgeAlgebra& a, const Decomposition& dec, std::uint64_t seed) {
  size_t n = a.dim();
  Matrix<ComplexQuad> tc = complexify(a.involution());
  CSubspace h20 = a.hs().h20;
  CSubspace even = h20.intersect(
      CSubspace::span(kernel_of(shift_by_i(tc, ComplexQuad(-1)))));
  CSubspace odd = h20.intersect(
      CSubspace::span(kernel_of(shift_by_i(tc, ComplexQuad(1)))));
  if (even.dim() + odd.dim() != h20.dim())
    throw math_error("t does not split H^{2,0} into eigenvectors");

  // Per-eigenvector terms a_j = (+-i)(eta etabar - etabar eta); real because
  // the bracket is conjugation-odd, t-odd by the eigenvector choice.
  std::vector<std::vector<ComplexQuad>> terms;
  for (int s : {+1, -1}) {
    const CSubspace& part = s > 0 ? even : odd;
    for (size_t j = 0; j < part.dim(); ++j) {
      std::vector<ComplexQuad> eta = part.basis().col(j);
      std::vector<ComplexQuad> ebar = conj_vec(eta);
      std::vector<ComplexQuad> br1 = a.multiply_c(eta, ebar);
      std::vector<ComplexQuad> br2 = a.multiply_c(ebar, eta);
      ComplexQuad f = s > 0 ? ComplexQuad::i() : -ComplexQuad::i();
      std::vector<ComplexQuad> term(n);
      for (size_t i = 0; i < n; ++i) term[i] = f * (br1[i] - br2[i]);
      for (const ComplexQuad& v : term)
        if (!v.is_real()) throw math_error("polarization term is not real");
      terms.push_back(std::move(term));
    }
  }

  const Matrix<ComplexQuad>& wb = dec.W.basis();
  std::mt19937_64 rng(seed);
  std::string last_witness;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<ComplexQuad> acq(n);
    for (const auto& term : terms) {
      // First try the plain average; randomize the coefficients on resampling.
      Rational c = attempt == 0 ? Rational(1, Int(terms.size()))
                                : Rational(Int(rng() % 99 + 1), Int(rng() % 99 + 1));
      ComplexQuad cc{RealQuad(c)};
      for (size_t i = 0; i < n; ++i) acq[i] += cc * term[i];
    }
    std::vector<Rational> av = rationalize(acq, 5 + attempt);
    std::vector<ComplexQuad> ac = complexify(av);

    CertReport rep;
    {
      std::ostringstream os;
      os << "seed " << seed << ", attempt " << attempt;
      rep.add("a rational", true, os.str());
    }
    std::vector<Rational> ta = a.t(av);
    bool odd_ok = true;
    for (size_t i = 0; i < n; ++i) odd_ok = odd_ok && ta[i] == -av[i];
    rep.add("t(a) = -a", odd_ok);

    bool isotropic = true;
    std::vector<std::vector<ComplexQuad>> wa(dec.W.dim());
    for (size_t j = 0; j < dec.W.dim(); ++j)
      wa[j] = a.multiply_c(wb.col(j), ac);
    for (size_t i = 0; i < dec.W.dim() && isotropic; ++i)
      for (size_t j = 0; j < dec.W.dim(); ++j)
        if (!pair_c(a.gram(), wb.col(i), wa[j]).is_zero()) {
          isotropic = false;
          break;
        }
    rep.add("W totally isotropic under omega_a", isotropic);

    Matrix<ComplexQuad> h(dec.W.dim(), dec.W.dim());
    for (size_t j = 0; j < dec.W.dim(); ++j) {
      std::vector<ComplexQuad> ca = a.multiply_c(conj_vec(wb.col(j)), ac);
      for (size_t i = 0; i < dec.W.dim(); ++i)
        h(i, j) = ComplexQuad::i() * pair_c(a.gram(), wb.col(i), ca);
    }
    auto cert = hermitian_definiteness(h, /*conjugating=*/true);
    {
      std::ostringstream os;
      os << "pivots " << cert.n_pos << "+/" << cert.n_neg << "-/" << cert.n_zero
         << "0";
      rep.add("h_a positive definite on W",
              cert.verdict == Definiteness::positive, os.str());
    }
    if (rep.all_passed()) return {av, rep};
    last_witness = rep.failures().front();
  }
  throw math_error("polarization_search exhausted 32 resamples; last failure: " +
                   last_witness);
}

namespace {

Matrix<Rational> omega_matrix(const HodgeAlgebra& a, const std::vector<Rational>& av) {
  return a.gram() * a.right_mul<Rational>(av);
}

void add_condition3_report(const HodgeAlgebra& a, CertReport& rep) {
  CenterReport cr = center(a);
  bool trivial =
      cr.t_invariant.dim() == 1 && cr.t_invariant.contains(a.unit());
  std::ostringstream os;
  os << "dim K = " << cr.center.dim() << ", dim K+ = " << cr.t_invariant.dim();
  rep.add("t-invariant center = Q*1", trivial, os.str());
}

}  // namespace

ConstructionResult build_weight1(const HodgeAlgebra& a, const Decomposition& dec,
                                 std::uint64_t seed) {
  if (dec.M.dim() != 0)
    throw math_error("M != 0: this algebra needs general_construct");
  ConstructionResult res;
  auto [av, prep] = polarization_search(a, dec, seed);
  res.a = av;
  res.certificates.merge(prep);

  res.w1.rank = a.dim();
  res.w1.omega = omega_matrix(a, av);
  res.w1.h10 = dec.W;

  auto mul = [&a](const std::vector<ComplexQuad>& x,
                  const std::vector<ComplexQuad>& y) { return a.multiply_c(x, y); };
  CSubspace h20 = a.hs().h20;
  res.certificates.add(
      "left multiplication is a weight-1 morphism (H^{2,0} h10 in h10)",
      dec.W.contains(CSubspace::product_span(h20, dec.W, mul)));
  res.certificates.add(
      "left multiplication is a weight-1 morphism (H^{2,0} conj(h10) in h10)",
      dec.W.contains(CSubspace::product_span(h20, dec.Wbar, mul)));

  add_condition3_report(a, res.certificates);
  res.certificates.merge(validate_weight1(res.w1), "weight-1: ");
  return res;
}

ChallengerVerdict verify_uniqueness(const HodgeAlgebra& a,
                                    const ConstructionResult& res,
                                    const CSubspace& challenger,
                                    CertReport* why) {
  size_t n = a.dim();
  CertReport rep;
  CSubspace conj = challenger.conjugate();
  bool direct = challenger.intersect(conj).dim() == 0 &&
                challenger.dim() + conj.dim() == n;
  rep.add("H_C = W' (+) conj(W')", direct);

  auto mul = [&a](const std::vector<ComplexQuad>& x,
                  const std::vector<ComplexQuad>& y) { return a.multiply_c(x, y); };
  CSubspace h20 = a.hs().h20;
  bool morph = challenger.contains(CSubspace::product_span(h20, challenger, mul)) &&
               challenger.contains(CSubspace::product_span(h20, conj, mul));
  rep.add("morphism property H^{2,0} W' in W'", morph);

  bool contains_w = challenger.contains(res.w1.h10);
  rep.add("H^{2,0} H_C in W'", contains_w);
  bool equal = contains_w && challenger == res.w1.h10;
  rep.add("W' = W", equal,
          dims_witness("dim W'", challenger.dim(), "dim W", res.w1.h10.dim()));
  if (why) why->merge(rep);
  return (direct && morph && contains_w && equal)
             ? ChallengerVerdict::equal
             : ChallengerVerdict::invalid_challenger;
}

namespace {

/// Primitive element of a commutative subalgebra: a coordinate vector whose
/// minimal polynomial has degree equal to the dimension.
std::pair<std::vector<Rational>, Poly> primitive_element(const SubAlgebra& k) {
  size_t m = k.dim();
  std::vector<std::vector<Rational>> probes;
  for (size_t i = 0; i < m; ++i) probes.push_back(basis_vec(m, i));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      auto v = basis_vec(m, i);
      v[j] = 1;
      probes.push_back(v);
    }
  for (const auto& x : probes) {
    Poly mp = k.minimal_polynomial(x);
    if (mp.degree() == static_cast<int>(m)) return {x, mp};
  }
  throw math_error("unsupported center: no primitive element found");
}

std::vector<RealQuad> scale_rq(const std::vector<RealQuad>& v, const RealQuad& s) {
  std::vector<RealQuad> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

std::vector<RealQuad> apply_rational(const Matrix<Rational>& m,
                                     const std::vector<RealQuad>& v) {
  std::vector<RealQuad> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[i] += RealQuad(m(i, j)) * v[j];
  return out;
}

}  // namespace

ConstructionResult general_construct(const HodgeAlgebra& a,
                                     const Decomposition& dec,
                                     std::uint64_t seed) {
  if (dec.M.dim() == 0) return build_weight1(a, dec, seed);
  size_t n = a.dim();
  ConstructionResult res;
  CertReport& rep = res.certificates;

  CenterReport cr = center(a);
  SubAlgebra kplus = make_subalgebra(a, cr.t_invariant.basis());
  auto comps = split_commutative(kplus);
  if (comps.size() != 1)
    throw math_error("unsupported center: K+ splits into several fields");
  rep.add("K+ is a totally real number field",
          comps[0].is_field && (kplus.dim() == 1 || comps[0].totally_real_field),
          "dim K+ = " + std::to_string(kplus.dim()));

  // Embedding idempotents of K+ (degree 1 or 2 supported exactly).
  std::vector<std::vector<RealQuad>> idems;
  if (kplus.dim() == 1) {
    idems.push_back(to_rq(a.unit()));
  } else if (kplus.dim() == 2) {
    auto [s_coords, mp] = primitive_element(kplus);
    Rational beta = mp[1], gamma = mp[0];
    Rational disc = beta * beta - 4 * gamma;
    std::optional<RealQuad> sq =
        field_sqrt(RealQuad(disc), coefficient_field(a.hs().h20));
    if (!sq || sq->is_zero())
      throw math_error("embedding roots lie outside the configured field");
    RealQuad half(Rational(1, 2));
    RealQuad rplus = (RealQuad(-beta) + *sq) * half;
    RealQuad rminus = (RealQuad(-beta) - *sq) * half;
    std::vector<RealQuad> s_amb = to_rq(kplus.to_ambient(s_coords));
    std::vector<RealQuad> unit_rq = to_rq(a.unit());
    RealQuad inv = (rplus - rminus).inv();
    std::vector<RealQuad> eplus(n);
    for (size_t i = 0; i < n; ++i)
      eplus[i] = (s_amb[i] - rminus * unit_rq[i]) * inv;
    std::vector<RealQuad> eminus(n);
    for (size_t i = 0; i < n; ++i) eminus[i] = unit_rq[i] - eplus[i];
    idems.push_back(eplus);
    idems.push_back(eminus);
  } else {
    throw math_error("unsupported center: K+ degree " +
                     std::to_string(kplus.dim()) + " exceeds the quadratic cap");
  }

  // Sort blocks into M and W (+) Wbar.
  CSubspace ww = dec.W.sum(dec.Wbar);
  struct Block {
    std::vector<RealQuad> idem;
    Subspace<RealQuad> space;
    bool in_m;
  };
  std::vector<Block> blocks;
  bool aligned = true;
  for (const auto& e : idems) {
    Block blk;
    blk.idem = e;
    blk.space = Subspace<RealQuad>::span(a.right_mul<RealQuad>(e));
    bool in_m = true, in_ww = true;
    for (size_t j = 0; j < blk.space.dim(); ++j) {
      std::vector<ComplexQuad> col = complexify(blk.space.basis().col(j));
      in_m = in_m && dec.M.contains(col);
      in_ww = in_ww && ww.contains(col);
    }
    if (!in_m && !in_ww) aligned = false;
    blk.in_m = in_m;
    blocks.push_back(std::move(blk));
  }
  rep.add("every embedding block lies in M or in W (+) Wbar", aligned);
  if (!aligned) throw certificate_error("embedding block alignment");

  // W-part polarization.
  auto [aw, wrep] = polarization_search(a, dec, seed);
  rep.merge(wrep, "W-block: ");

  // Central t-odd element X with sqrt(-sigma(X^2)) in the field, per M-block.
  Matrix<Rational> tpi = a.involution() + Matrix<Rational>::identity(n);
  Subspace<Rational> odd_center =
      Subspace<Rational>::span(kernel_of(tpi)).intersect(cr.center);
  std::vector<std::vector<Rational>> candidates;
  for (size_t j = 0; j < odd_center.dim(); ++j)
    candidates.push_back(odd_center.basis().col(j));
  for (size_t i = 0; i < odd_center.dim(); ++i)
    for (size_t j = i + 1; j < odd_center.dim(); ++j) {
      auto v = candidates[i];
      for (size_t k = 0; k < n; ++k) v[k] += candidates[j][k];
      candidates.push_back(std::move(v));
    }

  std::mt19937_64 rng(seed + 1);
  std::vector<Rational> av = aw;
  for (Block& blk : blocks) {
    SigmaBlock sd;
    sd.idempotent = blk.idem;
    sd.in_M = blk.in_m;
    if (!blk.in_m) {
      res.sigma_data.push_back(std::move(sd));
      continue;
    }

    // Find m_sigma = e_sigma X / sqrt(-sigma(X^2)).
    std::optional<std::vector<RealQuad>> m_sigma;
    for (const auto& x : candidates) {
      std::vector<Rational> lam = a.multiply(x, x);
      std::vector<RealQuad> w = a.multiply_s<RealQuad>(to_rq(lam), blk.idem);
      size_t k0 = 0;
      while (k0 < n && blk.idem[k0].is_zero()) ++k0;
      RealQuad mu = w[k0] / blk.idem[k0];
      bool scalar = true;
      for (size_t i = 0; i < n && scalar; ++i)
        scalar = (w[i] == mu * blk.idem[i]);
      if (!scalar || mu.exact_sign() >= 0) continue;
      std::optional<RealQuad> sq =
          field_sqrt(-mu, coefficient_field(a.hs().h20));
      if (!sq) continue;
      std::vector<RealQuad> ex = a.multiply_s<RealQuad>(blk.idem, to_rq(x));
      m_sigma = scale_rq(ex, sq->inv());
      break;
    }
    if (!m_sigma)
      throw math_error(
          "unsupported center: no exact complex multiplication on an M-block");

    // Exact block certificates.
    std::vector<RealQuad> m2 = a.multiply_s<RealQuad>(*m_sigma, *m_sigma);
    std::vector<RealQuad> neg_e(n);
    for (size_t i = 0; i < n; ++i) neg_e[i] = -blk.idem[i];
    rep.add("m_sigma^2 = -e_sigma", m2 == neg_e);
    std::vector<RealQuad> tm = apply_rational(a.involution(), *m_sigma);
    std::vector<RealQuad> neg_m(n);
    for (size_t i = 0; i < n; ++i) neg_m[i] = -(*m_sigma)[i];
    rep.add("t(m_sigma) = -m_sigma", tm == neg_m);
    {
      bool commutes = true;
      Matrix<RealQuad> rm = a.right_mul<RealQuad>(*m_sigma);
      for (size_t i = 0; i < n && commutes; ++i) {
        std::vector<RealQuad> ei(n);
        ei[i] = RealQuad(1);
        Matrix<RealQuad> li = a.left_mul<RealQuad>(ei);
        commutes = (rm * li == li * rm);
      }
      rep.add("I_sigma commutes with left multiplications", commutes);
    }

    // Orientation and coefficient of the a-contribution on this block.
    bool placed = false;
    for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
      Rational c = attempt == 0 ? Rational(1)
                                : Rational(Int(rng() % 99 + 1), Int(rng() % 99 + 1));
      std::vector<Rational> u = rationalize(scale_rq(*m_sigma, RealQuad(c)),
                                            5 + attempt);
      for (int tau : {+1, -1}) {
        std::vector<Rational> trial = av;
        for (size_t i = 0; i < n; ++i)
          trial[i] += tau > 0 ? u[i] : -u[i];
        // Positivity form F(i,j) = omega_a(b_i, b_j m_sigma) on the block.
        size_t bd = blk.space.dim();
        Matrix<RealQuad> f(bd, bd);
        std::vector<RealQuad> trial_rq = to_rq(trial);
        for (size_t j = 0; j < bd; ++j) {
          std::vector<RealQuad> col = a.multiply_s<RealQuad>(
              a.multiply_s<RealQuad>(blk.space.basis().col(j), *m_sigma),
              trial_rq);
          for (size_t i = 0; i < bd; ++i)
            f(i, j) = pair_rq(a.gram(), blk.space.basis().col(i), col);
        }
        if (!(f.transpose() == f)) continue;
        auto cert = hermitian_definiteness(f, /*conjugating=*/false);
        if (cert.verdict == Definiteness::positive) {
          av = trial;
          std::ostringstream os;
          os << "pivots " << cert.n_pos << "+/" << cert.n_neg << "-, attempt "
             << attempt << ", sign " << tau;
          rep.add("omega_a(x, I_sigma x) positive definite on H_sigma", true,
                  os.str());
          placed = true;
          break;
        }
      }
    }
    if (!placed)
      throw math_error("positivity failed on an M-block after 32 resamples");

    sd.m_sigma = *m_sigma;
    res.sigma_data.push_back(std::move(sd));
  }

  // Relation m_sigma a t(m_sigma) = a e_sigma, with the final a.
  std::vector<RealQuad> av_rq = to_rq(av);
  for (const SigmaBlock& sd : res.sigma_data) {
    if (!sd.in_M) continue;
    std::vector<RealQuad> tm = apply_rational(a.involution(), sd.m_sigma);
    std::vector<RealQuad> lhs = a.multiply_s<RealQuad>(
        a.multiply_s<RealQuad>(sd.m_sigma, av_rq), tm);
    std::vector<RealQuad> rhs = a.multiply_s<RealQuad>(av_rq, sd.idempotent);
    rep.add("m_sigma a t(m_sigma) = a on H_sigma", lhs == rhs);
  }
  {
    std::vector<Rational> ta = a.t(av);
    bool odd_ok = true;
    for (size_t i = 0; i < n; ++i) odd_ok = odd_ok && ta[i] == -av[i];
    rep.add("t(a) = -a (full element)", odd_ok);
  }

  // Weight-1 structure: W on the ideal part; on M, the -i eigenspace of
  // right multiplication by the sum of the m_sigma. (With omega_a(x, Ix) > 0
  // the hermitian form i omega_a(v, conj v) is positive on x + i Ix, which
  // satisfies I v = -i v.)
  std::vector<RealQuad> m_total(n);
  for (const SigmaBlock& sd : res.sigma_data)
    if (sd.in_M)
      for (size_t i = 0; i < n; ++i) m_total[i] += sd.m_sigma[i];
  Matrix<ComplexQuad> rm = a.right_mul<ComplexQuad>(complexify(m_total));
  CSubspace m_plus =
      CSubspace::span(kernel_of(shift_by_i(rm, ComplexQuad::i())));
  rep.add("M splits into conjugate eigenspaces of I",
          m_plus.dim() * 2 == dec.M.dim(),
          dims_witness("dim M+", m_plus.dim(), "dim M", dec.M.dim()));

  res.a = av;
  res.w1.rank = n;
  res.w1.omega = omega_matrix(a, av);
  res.w1.h10 = dec.W.sum(m_plus);
  rep.merge(validate_weight1(res.w1), "weight-1: ");
  return res;
}

MFromA complex_structure_from_a(const HodgeAlgebra& a,
                                const std::vector<Rational>& a_blk,
                                const std::vector<Rational>& e_blk) {
  size_t n = a.dim();
  MFromA out;

  // K[a_blk] with unit e_blk: powers until linear dependence.
  std::vector<std::vector<Rational>> powers{e_blk};
  std::vector<Rational> cur = e_blk;
  for (size_t deg = 1; deg <= n; ++deg) {
    cur = a.multiply(cur, a_blk);
    Matrix<Rational> prev = Matrix<Rational>::from_columns(n, powers);
    try {
      solve(prev, Matrix<Rational>::column(cur));
      break;
    } catch (const inconsistent_system&) {
      powers.push_back(cur);
    }
  }
  Matrix<Rational> basis = Matrix<Rational>::from_columns(n, powers);
  SubAlgebra k;
  k.ambient_dim = n;
  k.basis = basis;
  size_t m = basis.cols();
  k.stc = Matrix<Rational>(m * m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto prod = a.multiply(basis.col(i), basis.col(j));
      Matrix<Rational> x = solve(basis, Matrix<Rational>::column(prod));
      for (size_t kk = 0; kk < m; ++kk) k.stc(i * m + j, kk) = x(kk, 0);
    }
  k.unit = basis_vec(m, 0);
  k.has_unit = true;

  Poly mp = k.minimal_polynomial(basis_vec(m, 1));
  // Purely imaginary spectrum: the minimal polynomial must be even.
  for (int i = 1; i <= mp.degree(); i += 2)
    if (!mp[i].is_zero())
      throw math_error("a_blk has a non-imaginary eigenvalue");
  out.report.add("minimal polynomial of a_blk is even", true, mp.str());

  if (mp.degree() == 2) {
    // x^2 + mu: exact when sqrt(mu) lies in the field.
    Rational mu = mp[0];
    if (mu.sign() <= 0) throw math_error("a_blk^2 is not totally negative");
    std::optional<RealQuad> sq =
        field_sqrt(RealQuad(mu), coefficient_field(a.hs().h20));
    if (sq) {
      out.m = scale_rq(to_rq(a_blk), sq->inv());
      std::vector<RealQuad> m2 = a.multiply_s<RealQuad>(out.m, out.m);
      std::vector<RealQuad> neg_e(n);
      for (size_t i = 0; i < n; ++i) neg_e[i] = -RealQuad(e_blk[i]);
      out.report.add("m^2 = -e (exact)", m2 == neg_e);
      out.exact = true;
      return out;
    }
  }

  // Float fallback: m = a p(a^2) with p interpolating 1/sqrt(mu_rho) at
  // -mu_rho over the roots of the even minimal polynomial.
  int half = mp.degree() / 2;
  if (half < 1 || half > 2)
    throw math_error("unsupported center: spectrum degree beyond quadratic");
  std::vector<double> mus;
  double c0 = to_double(mp[0]);
  if (half == 1) {
    mus.push_back(c0);
  } else {
    double b = to_double(mp[2]);  // y^2 + b y + c0, y = x^2
    double disc = b * b - 4 * c0;
    if (disc <= 0) throw math_error("a_blk spectrum is not separated");
    mus.push_back((-b + std::sqrt(disc)) / 2 * -1.0);
    mus.push_back((-b - std::sqrt(disc)) / 2 * -1.0);
  }
  for (double mu : mus)
    if (mu <= 0) throw math_error("a_blk^2 is not totally negative");

  // Lagrange interpolation of p(y) through (-mu, 1/sqrt(mu)).
  std::vector<double> af(n), ef(n);
  for (size_t i = 0; i < n; ++i) {
    af[i] = to_double(a_blk[i]);
    ef[i] = to_double(e_blk[i]);
  }
  std::vector<double> a2 = a.multiply_s<double>(af, af);
  std::vector<double> mvec(n, 0.0);
  for (size_t r = 0; r < mus.size(); ++r) {
    // Basis polynomial value at a^2, evaluated in the algebra.
    std::vector<double> term = ef;
    double denom = 1.0;
    for (size_t s = 0; s < mus.size(); ++s) {
      if (s == r) continue;
      std::vector<double> next(n);
      for (size_t i = 0; i < n; ++i) next[i] = a2[i] + mus[s] * ef[i];
      term = a.multiply_s<double>(term, next);
      denom *= (-mus[r] + mus[s]);
    }
    double w = 1.0 / (std::sqrt(mus[r]) * denom);
    for (size_t i = 0; i < n; ++i) mvec[i] += w * term[i];
  }
  out.m_float = a.multiply_s<double>(af, mvec);
  std::vector<double> m2 = a.multiply_s<double>(out.m_float, out.m_float);
  double err = 0;
  for (size_t i = 0; i < n; ++i) err = std::max(err, std::abs(m2[i] + ef[i]));
  std::ostringstream os;
  os << "max residual " << err << " (float certificate)";
  out.report.add("m^2 = -e within tolerance", err < 10 * float_tol(), os.str());
  out.exact = false;
  return out;
}

CertReport e_beta_maps(const HodgeAlgebra& a, const ConstructionResult& res,
                       const WeightOneHS& b,
                       const std::vector<Matrix<Rational>>& rho,
                       const std::vector<std::vector<Rational>>& betas) {
  size_t n = a.dim(), nb = b.rank;
  if (rho.size() != n) throw dim_error("rho must give one matrix per basis element");
  CertReport rep;

  // rho is a unital algebra map.
  Matrix<Rational> rho_unit(nb, nb);
  for (size_t i = 0; i < n; ++i)
    if (!a.unit()[i].is_zero()) rho_unit = rho_unit + a.unit()[i] * rho[i];
  rep.add("rho(1) = id", rho_unit == Matrix<Rational>::identity(nb));
  bool multiplicative = true;
  for (size_t i = 0; i < n && multiplicative; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix<Rational> lhs = rho[i] * rho[j];
      Matrix<Rational> rhs(nb, nb);
      std::vector<Rational> prod = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) rhs = rhs + prod[k] * rho[k];
      if (!(lhs == rhs)) {
        multiplicative = false;
        break;
      }
    }
  rep.add("rho multiplicative", multiplicative);

  // Rosati stability: rho(t(h)) is the omega-adjoint of rho(h).
  bool rosati = true;
  for (size_t i = 0; i < n && rosati; ++i) {
    std::vector<Rational> ti = a.t(basis_vec(n, i));
    Matrix<Rational> lhs(nb, nb);
    for (size_t k = 0; k < n; ++k)
      if (!ti[k].is_zero()) lhs = lhs + ti[k] * rho[k];
    rosati = lhs == omega_adjoint(b.omega, rho[i]);
  }
  rep.add("rho stable under the Rosati involution", rosati);

  // Per-beta morphism tests and the joint rank conditions.
  const CSubspace& w = res.w1.h10;
  Matrix<Rational> stacked_h(0, 0);
  Matrix<Rational> stacked_v(0, 0);
  for (size_t bi = 0; bi < betas.size(); ++bi) {
    Matrix<Rational> e_beta(nb, n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<Rational> col = rho[i].apply(betas[bi]);
      for (size_t r = 0; r < nb; ++r) e_beta(r, i) = col[r];
    }
    CSubspace image = w.image_under(complexify(e_beta));
    rep.add("e_beta is a weight-1 morphism (beta " + std::to_string(bi) + ")",
            b.h10.contains(image),
            dims_witness("dim e_beta(W)", image.dim(), "dim H^{1,0}(B)",
                         b.h10.dim()));
    stacked_h = stacked_h.cols() == 0 ? e_beta : stacked_h.hstack(e_beta);
    stacked_v = stacked_v.rows() == 0 ? e_beta : stacked_v.vstack(e_beta);
  }
  rep.add("joint map surjective onto H_1(B)", rank_of(stacked_h) == nb,
          dims_witness("rank", rank_of(stacked_h), "dim H_1(B)", nb));
  rep.add("joint map injective on H", rank_of(stacked_v) == n,
          dims_witness("rank", rank_of(stacked_v), "dim H", n));
  return rep;
}

}  // namespace ks
