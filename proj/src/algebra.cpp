#include "ks/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace ks {

HodgeAlgebra::HodgeAlgebra(WeightTwoHS hs, Matrix<Rational> stc,
                           std::vector<Rational> unit, Matrix<Rational> invol)
    : n_(hs.rank), hs_(std::move(hs)), stc_(std::move(stc)),
      unit_(std::move(unit)), invol_(std::move(invol)) {
  if (n_ > 64) throw config_error("algebra dimension exceeds 64");
  if (stc_.rows() != n_ * n_ || stc_.cols() != n_)
    throw dim_error("structure constant table has wrong shape");
  if (unit_.size() != n_) throw dim_error("unit vector has wrong length");
  if (invol_.rows() != n_ || invol_.cols() != n_)
    throw dim_error("involution matrix has wrong shape");
}

std::vector<Rational> HodgeAlgebra::multiply(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) const {
  if (a.size() != n_ || b.size() != n_) throw dim_error("element length mismatch");
  std::vector<Rational> out(n_, Rational(0));
  for (size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Rational f = a[i] * b[j];
      for (size_t k = 0; k < n_; ++k) {
        const Rational& c = stc_(i * n_ + j, k);
        if (!c.is_zero()) out[k] += f * c;
      }
    }
  }
  return out;
}

Rational HodgeAlgebra::pair(const std::vector<Rational>& a,
                            const std::vector<Rational>& b) const {
  std::vector<Rational> gb = hs_.gram.apply(b);
  Rational out(0);
  for (size_t i = 0; i < n_; ++i) out += a[i] * gb[i];
  return out;
}

namespace {

std::vector<Rational> basis_vec(size_t n, size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

CertReport validate_algebra(const HodgeAlgebra& a) {
  CertReport rep;
  size_t n = a.dim();

  // Associativity: L_{e_i} L_{e_j} = L_{e_i e_j} for all basis pairs covers
  // (e_i e_j) e_k = e_i (e_j e_k) for all triples.
  bool assoc = true;
  std::vector<Matrix<Rational>> L(n);
  for (size_t i = 0; i < n; ++i) L[i] = a.left_mul(basis_vec(n, i));
  for (size_t i = 0; i < n && assoc; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix<Rational> lhs = L[i] * L[j];
      Matrix<Rational> rhs = a.left_mul<Rational>(a.basis_product(i, j));
      if (!(lhs == rhs)) {
        assoc = false;
        break;
      }
    }
  rep.add("associativity", assoc);

  bool unit_ok = true;
  for (size_t j = 0; j < n && unit_ok; ++j) {
    auto ej = basis_vec(n, j);
    unit_ok = a.multiply(a.unit(), ej) == ej && a.multiply(ej, a.unit()) == ej;
  }
  rep.add("unit laws", unit_ok);

  const Matrix<Rational>& T = a.involution();
  rep.add("t involutive", T * T == Matrix<Rational>::identity(n));

  bool antihom = true;
  for (size_t i = 0; i < n && antihom; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto lhs = a.t(a.basis_product(i, j));
      auto rhs = a.multiply(a.t(basis_vec(n, j)), a.t(basis_vec(n, i)));
      if (lhs != rhs) {
        antihom = false;
        break;
      }
    }
  rep.add("t anti-homomorphism", antihom);

  bool adj = true;
  for (size_t i = 0; i < n && adj; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto ei = basis_vec(n, i), ej = basis_vec(n, j);
      Rational lhs = a.pair(ei, ej);
      Rational mid = a.pair(a.multiply(ei, a.t(ej)), a.unit());
      Rational rhs = a.pair(a.multiply(a.t(ej), ei), a.unit());
      if (lhs != mid || lhs != rhs) {
        adj = false;
        break;
      }
    }
  rep.add("adjunction <a,b> = <a t(b), 1> = <t(b) a, 1>", adj);

  // t preserves Hodge type.
  Matrix<ComplexQuad> Tc = complexify(T);
  CSubspace h20 = a.hs().h20, h02 = a.hs().h02(), h11 = a.hs().h11();
  rep.add("t(H^{2,0}) in H^{2,0}", h20.contains(h20.image_under(Tc)));
  rep.add("t(H^{1,1}) in H^{1,1}",
          h11.dim() == 0 || h11.contains(h11.image_under(Tc)));
  rep.add("t(H^{0,2}) in H^{0,2}", h02.contains(h02.image_under(Tc)));

  rep.merge(bidegree_check(a));
  return rep;
}

CertReport bidegree_check(const HodgeAlgebra& a) {
  CertReport rep;
  CSubspace h20 = a.hs().h20, h02 = a.hs().h02(), h11 = a.hs().h11();
  auto mul = [&a](const std::vector<ComplexQuad>& x,
                  const std::vector<ComplexQuad>& y) {
    return a.multiply_c(x, y);
  };
  auto prod = [&](const CSubspace& x, const CSubspace& y) {
    return CSubspace::product_span(x, y, mul);
  };
  rep.add("H20*H20 = 0", prod(h20, h20).dim() == 0);
  rep.add("H20*H11 in H20", h20.contains(prod(h20, h11)));
  rep.add("H11*H20 in H20", h20.contains(prod(h11, h20)));
  rep.add("H11*H11 in H11", h11.contains(prod(h11, h11)));
  rep.add("H02*H02 = 0", prod(h02, h02).dim() == 0);
  rep.add("H11*H02 in H02", h02.contains(prod(h11, h02)));
  rep.add("H02*H11 in H02", h02.contains(prod(h02, h11)));
  return rep;
}

std::vector<Rational> SubAlgebra::multiply(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b) const {
  size_t m = dim();
  std::vector<Rational> out(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      Rational f = a[i] * b[j];
      for (size_t k = 0; k < m; ++k) out[k] += f * stc(i * m + j, k);
    }
  }
  return out;
}

std::vector<Rational> SubAlgebra::from_ambient(const std::vector<Rational>& v) const {
  Matrix<Rational> x = ks::solve(basis, Matrix<Rational>::column(v));
  return x.col(0);
}

Rational SubAlgebra::regular_trace(const std::vector<Rational>& a) const {
  size_t m = dim();
  Rational tr(0);
  for (size_t j = 0; j < m; ++j) {
    // (a e_j)_j
    for (size_t i = 0; i < m; ++i)
      if (!a[i].is_zero()) tr += a[i] * stc(i * m + j, j);
  }
  return tr;
}

Poly SubAlgebra::minimal_polynomial(const std::vector<Rational>& a) const {
  if (!has_unit) throw math_error("minimal polynomial needs a unital subalgebra");
  size_t m = dim();
  std::vector<std::vector<Rational>> powers{unit};
  std::vector<Rational> cur = unit;
  for (size_t deg = 1; deg <= m + 1; ++deg) {
    cur = multiply(cur, a);
    // Is cur a combination of the previous powers?
    Matrix<Rational> prev = Matrix<Rational>::from_columns(m, powers);
    try {
      Matrix<Rational> sol = ks::solve(prev, Matrix<Rational>::column(cur));
      std::vector<Rational> coeffs(deg + 1, Rational(0));
      for (size_t i = 0; i < deg; ++i) coeffs[i] = -sol(i, 0);
      coeffs[deg] = 1;
      return Poly(std::move(coeffs));
    } catch (const inconsistent_system&) {
      powers.push_back(cur);
    }
  }
  throw math_error("minimal polynomial search exceeded algebra dimension");
}

std::vector<Rational> SubAlgebra::eval_poly(const Poly& f,
                                            const std::vector<Rational>& a) const {
  size_t m = dim();
  std::vector<Rational> acc(m, Rational(0));
  for (int k = f.degree(); k >= 0; --k) {
    acc = multiply(acc, a);
    for (size_t i = 0; i < m; ++i) acc[i] += f[k] * unit[i];
  }
  return acc;
}

SubAlgebra make_subalgebra(const HodgeAlgebra& amb, const Matrix<Rational>& basis) {
  SubAlgebra sub;
  sub.ambient_dim = amb.dim();
  sub.basis = basis;
  size_t m = basis.cols();
  sub.stc = Matrix<Rational>(m * m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto prod = amb.multiply(basis.col(i), basis.col(j));
      Matrix<Rational> x;
      try {
        x = ks::solve(basis, Matrix<Rational>::column(prod));
      } catch (const inconsistent_system&) {
        throw math_error("basis is not multiplicatively closed");
      }
      for (size_t k = 0; k < m; ++k) sub.stc(i * m + j, k) = x(k, 0);
    }
  try {
    Matrix<Rational> u = ks::solve(basis, Matrix<Rational>::column(amb.unit()));
    sub.unit = u.col(0);
    sub.has_unit = true;
  } catch (const inconsistent_system&) {
    sub.has_unit = false;
  }
  return sub;
}

namespace {

// Restriction of the sub-structure to the (unital, multiplicatively closed)
// span of the given subalgebra-coordinate columns.
SubAlgebra restrict_sub(const SubAlgebra& k, const Matrix<Rational>& cols,
                        const std::vector<Rational>& unit_coords) {
  SubAlgebra sub;
  sub.ambient_dim = k.ambient_dim;
  sub.basis = k.basis * cols;
  size_t m = cols.cols();
  sub.stc = Matrix<Rational>(m * m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto prod = k.multiply(cols.col(i), cols.col(j));
      Matrix<Rational> x = ks::solve(cols, Matrix<Rational>::column(prod));
      for (size_t kk = 0; kk < m; ++kk) sub.stc(i * m + j, kk) = x(kk, 0);
    }
  Matrix<Rational> u = ks::solve(cols, Matrix<Rational>::column(unit_coords));
  sub.unit = u.col(0);
  sub.has_unit = true;
  return sub;
}

// Extended Euclid over Q[x]: returns (u, v) with u f + v g = gcd (monic).
std::pair<Poly, Poly> poly_xgcd(const Poly& f, const Poly& g) {
  Poly r0 = f, r1 = g;
  Poly u0 = Poly::constant(Rational(1)), u1;
  Poly v0, v1 = Poly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  // Normalize gcd to monic.
  Rational lead = r0.leading();
  auto scale = [&lead](const Poly& p) {
    std::vector<Rational> c = p.coeffs();
    for (auto& v : c) v /= lead;
    return Poly(c);
  };
  return {scale(u0), scale(v0)};
}

struct SplitPiece {
  std::vector<Rational> idem;  // subalgebra coordinates of K (the root algebra)
  SubAlgebra sub;              // presented with its own basis
};

// Finds a proper idempotent of the commutative unital algebra, or nullopt if
// every probed element has an irreducible (hence field-like) minimal
// polynomial.
std::optional<std::vector<Rational>> find_splitting_idempotent(const SubAlgebra& k) {
  size_t m = k.dim();
  std::vector<std::vector<Rational>> probes;
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rational> e(m, Rational(0));
    e[i] = 1;
    probes.push_back(e);
  }
  // Pairwise sums widen the probe set; a product of fields always exposes a
  // reducible minimal polynomial on some such element.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      std::vector<Rational> e(m, Rational(0));
      e[i] = 1;
      e[j] = 1;
      probes.push_back(e);
    }
  for (const auto& x : probes) {
    Poly mp = k.minimal_polynomial(x);
    if (mp.degree() <= 1) continue;
    Poly sf = mp;
    if (!is_squarefree(mp))
      throw math_error("commutative algebra has nilpotents (non-squarefree minimal polynomial)");
    auto factors = factor_squarefree(sf);
    if (factors.size() < 2) continue;
    // Chinese remainder idempotent: e = v h (mod mp) with u g + v h = 1,
    // g the first factor and h the rest.
    Poly g = factors[0];
    Poly h = Poly::constant(Rational(1));
    for (size_t i = 1; i < factors.size(); ++i) h = h * factors[i];
    auto [u, v] = poly_xgcd(g, h);
    Poly e_poly = (v * h).divmod(mp).second;
    auto e = k.eval_poly(e_poly, x);
    // e should be a proper idempotent.
    if (k.multiply(e, e) == e && e != k.unit) {
      bool zero = std::all_of(e.begin(), e.end(),
                              [](const Rational& r) { return r.is_zero(); });
      if (!zero) return e;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CenterComponent> split_commutative(const SubAlgebra& k) {
  if (!k.has_unit) throw math_error("split_commutative needs a unital algebra");
  size_t m = k.dim();
  // Commutativity is a precondition; verify cheaply.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      std::vector<Rational> a(m, Rational(0)), b(m, Rational(0));
      a[i] = 1;
      b[j] = 1;
      if (k.multiply(a, b) != k.multiply(b, a))
        throw math_error("split_commutative: algebra is not commutative");
    }

  std::vector<CenterComponent> out;
  // Work queue of (sub-presentation, idempotent in ambient coords).
  struct Item {
    SubAlgebra sub;
    std::vector<Rational> idem_ambient;
  };
  std::vector<Item> queue{{k, k.to_ambient(k.unit)}};
  while (!queue.empty()) {
    Item item = std::move(queue.back());
    queue.pop_back();
    auto split = find_splitting_idempotent(item.sub);
    if (!split) {
      CenterComponent comp;
      comp.idempotent = item.idem_ambient;
      comp.component = item.sub;
      // Look for a primitive element to tag the component.
      size_t d = item.sub.dim();
      comp.is_field = false;
      for (size_t i = 0; i < d && !comp.is_field; ++i) {
        std::vector<Rational> e(d, Rational(0));
        e[i] = 1;
        Poly mp = item.sub.minimal_polynomial(e);
        if (mp.degree() == static_cast<int>(d)) {
          comp.minimal_poly = mp;
          comp.is_field = true;
        } else if (comp.minimal_poly.is_zero() || mp.degree() > comp.minimal_poly.degree()) {
          comp.minimal_poly = mp;
        }
      }
      if (!comp.is_field && d >= 2) {
        // Try sums of basis pairs as primitive-element candidates.
        for (size_t i = 0; i < d && !comp.is_field; ++i)
          for (size_t j = i + 1; j < d && !comp.is_field; ++j) {
            std::vector<Rational> e(d, Rational(0));
            e[i] = 1;
            e[j] = 1;
            Poly mp = item.sub.minimal_polynomial(e);
            if (mp.degree() == static_cast<int>(d)) {
              comp.minimal_poly = mp;
              comp.is_field = true;
            }
          }
      }
      if (d == 1) comp.is_field = true;
      if (comp.is_field && !comp.minimal_poly.is_zero() &&
          is_squarefree(comp.minimal_poly))
        comp.totally_real_field = totally_real(comp.minimal_poly);
      out.push_back(std::move(comp));
      continue;
    }
    // Split along e and 1-e.
    const std::vector<Rational>& e = *split;
    std::vector<Rational> f(item.sub.dim());
    for (size_t i = 0; i < f.size(); ++i) f[i] = item.sub.unit[i] - e[i];
    for (const auto& idem : {e, f}) {
      // Basis of the ideal: column space of multiplication-by-idem.
      size_t d = item.sub.dim();
      Matrix<Rational> mulmat(d, d);
      for (size_t j = 0; j < d; ++j) {
        std::vector<Rational> ej(d, Rational(0));
        ej[j] = 1;
        auto col = item.sub.multiply(idem, ej);
        for (size_t i = 0; i < d; ++i) mulmat(i, j) = col[i];
      }
      auto sp = Subspace<Rational>::span(mulmat);
      queue.push_back({restrict_sub(item.sub, sp.basis(), idem),
                       item.sub.to_ambient(idem)});
    }
  }
  // Deterministic order: by first nonzero coordinate pattern of idempotents.
  std::sort(out.begin(), out.end(),
            [](const CenterComponent& x, const CenterComponent& y) {
              return x.idempotent < y.idempotent;
            });
  return out;
}

CenterReport center(const HodgeAlgebra& a) {
  size_t n = a.dim();
  // Stack (R_j - L_j) over all basis directions: h is central iff
  // h e_j - e_j h = 0 for every j.
  Matrix<Rational> stacked(n * n, n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> ej(n, Rational(0));
    ej[j] = 1;
    Matrix<Rational> diff = a.right_mul<Rational>(ej) - a.left_mul<Rational>(ej);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) stacked(j * n + r, c) = diff(r, c);
  }
  CenterReport rep;
  rep.center = Subspace<Rational>::span(kernel_of(stacked));

  // K+ = kernel of (T - id) intersected with K.
  Matrix<Rational> tmi = a.involution() - Matrix<Rational>::identity(n);
  auto fixed = Subspace<Rational>::span(kernel_of(tmi));
  rep.t_invariant = rep.center.intersect(fixed);

  if (rep.center.dim() > 0) {
    SubAlgebra k = make_subalgebra(a, rep.center.basis());
    rep.components = split_commutative(k);
  }
  return rep;
}

std::tuple<int, int, int> trace_form_signature(const SubAlgebra& k,
                                               const std::vector<Rational>& y,
                                               const Matrix<Rational>& invol) {
  size_t m = k.dim();
  Matrix<Rational> form(m, m);
  for (size_t i = 0; i < m; ++i) {
    std::vector<Rational> bi(m, Rational(0));
    bi[i] = 1;
    for (size_t j = 0; j < m; ++j) {
      std::vector<Rational> bj(m, Rational(0));
      bj[j] = 1;
      auto prod = k.multiply(k.multiply(y, bi), invol.apply(bj));
      form(i, j) = k.regular_trace(prod);
    }
  }
  return signature_of(form);
}

SubAlgebra subalgebra_generated(const HodgeAlgebra& a,
                                const std::vector<Rational>& elt) {
  size_t n = a.dim();
  std::vector<std::vector<Rational>> powers{a.unit()};
  std::vector<Rational> cur = a.unit();
  for (size_t deg = 1; deg <= n; ++deg) {
    cur = a.multiply(cur, elt);
    Matrix<Rational> prev = Matrix<Rational>::from_columns(n, powers);
    try {
      ks::solve(prev, Matrix<Rational>::column(cur));
      break;  // linear dependence reached
    } catch (const inconsistent_system&) {
      powers.push_back(cur);
    }
  }
  auto sp = Subspace<Rational>::span(Matrix<Rational>::from_columns(n, powers));
  return make_subalgebra(a, sp.basis());
}

}  // namespace ks
