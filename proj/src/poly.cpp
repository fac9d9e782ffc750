#include "ks/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ks {

Poly operator+(const Poly& f, const Poly& g) {
  std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) {
  std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) c[i] -= g.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  std::vector<Rational> c(f.c_.size() + g.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(i);
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  if (g.is_zero()) throw division_by_zero();
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo;
  int dg = g.degree();
  if (degree() >= dg) quo.assign(degree() - dg + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= dg) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < dg) break;
    Rational coef = rem.back() / g.leading();
    size_t shift = rem.size() - 1 - dg;
    quo[shift] = coef;
    for (int i = 0; i <= dg; ++i) rem[shift + i] -= coef * g[i];
    rem.pop_back();
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = abs(c);
    if (a != 1 || k == 0) os << to_string(a);
    if (k >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = f.divmod(g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

namespace {

int sign_at_plus_inf(const Poly& f) { return sign_of(f.leading()); }
int sign_at_minus_inf(const Poly& f) {
  int s = sign_of(f.leading());
  return (f.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int sturm_real_root_count(const Poly& f) {
  if (f.degree() <= 0) return 0;
  std::vector<Poly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    // Sturm chain: negate remainders.
    chain.push_back(Poly() - r);
    if (chain.back().is_zero()) {
      chain.pop_back();
      break;
    }
  }
  std::vector<int> lo, hi;
  for (const Poly& p : chain) {
    lo.push_back(sign_at_minus_inf(p));
    hi.push_back(sign_at_plus_inf(p));
  }
  return variations(lo) - variations(hi);
}

bool is_squarefree(const Poly& f) {
  return poly_gcd(f, f.derivative()).degree() == 0;
}

bool totally_real(const Poly& f) {
  if (f.degree() < 1) throw math_error("totally_real: constant polynomial");
  if (!is_squarefree(f))
    throw math_error("totally_real: polynomial is not squarefree");
  return sturm_real_root_count(f) == f.degree();
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Rational(0);
  Int n = numerator(x), d = denominator(x);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<RealQuad> field_sqrt(const RealQuad& x, std::int64_t ambient) {
  if (x.exact_sign() < 0) return std::nullopt;
  std::int64_t d = x.d() > 1 ? x.d() : ambient;
  const Rational& a = x.a();
  const Rational& b = x.b();
  if (b.is_zero()) {
    if (auto r = rational_sqrt(a)) return RealQuad(*r);
    // sqrt(a) = y*sqrt(d) with y rational: y^2 = a/d.
    if (d > 1) {
      if (auto y = rational_sqrt(a / Rational(d)))
        return RealQuad(Rational(0), *y, d);
    }
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = p^2 + q^2 d + 2 p q sqrt d: need p^2 + q^2 d = a,
  // 2 p q = b. Then p^2 solves z^2 - a z + b^2 d / 4 = 0.
  Rational disc = a * a - b * b * Rational(d);
  auto sd = rational_sqrt(disc);
  if (!sd) return std::nullopt;
  for (int branch : {1, -1}) {
    Rational p2 = (a + Rational(branch) * (*sd)) / 2;
    auto p = rational_sqrt(p2);
    if (!p || p->is_zero()) continue;
    Rational q = b / (2 * (*p));
    RealQuad cand(*p, q, d);
    if (cand * cand == x) {
      if (cand.exact_sign() < 0) cand = -cand;
      return cand;
    }
  }
  return std::nullopt;
}

Rational sqrt_convergent(std::int64_t d, int depth) {
  // Newton iteration on rationals converges quadratically and stays exact.
  Rational x(Int(static_cast<std::int64_t>(std::ceil(std::sqrt(double(d))))), 1);
  Rational D(d);
  for (int i = 0; i < depth; ++i) x = (x + D / x) / 2;
  return x;
}

namespace {

// All monic factorizations of an integer monic polynomial into two integer
// monic quadratics; used for degree-4 inputs with no rational root.
std::vector<Poly> try_quartic_split(const Poly& f) {
  // f = x^4 + a3 x^3 + a2 x^2 + a1 x + a0, integer coefficients.
  Int a3 = numerator(f[3]), a2 = numerator(f[2]), a1 = numerator(f[1]),
      a0 = numerator(f[0]);
  if (a0 == 0) throw math_error("quartic split expects nonzero constant term");
  std::vector<Int> divisors;
  Int bound = abs(a0);
  for (Int q = 1; q <= bound; ++q)
    if (a0 % q == 0) {
      divisors.push_back(q);
      divisors.push_back(-q);
    }
  // (x^2 + p x + q)(x^2 + r x + s), q s = a0, p + r = a3,
  // q + s + p r = a2, p s + r q = a1.
  for (const Int& q : divisors) {
    Int s = a0 / q;
    // p + r = a3, p r = a2 - q - s -> roots of y^2 - a3 y + (a2 - q - s).
    Int c = a2 - q - s;
    Int disc = a3 * a3 - 4 * c;
    if (disc < 0) continue;
    Int sq = sqrt(disc);
    if (sq * sq != disc) continue;
    for (int branch : {1, -1}) {
      Int two_p = a3 + branch * sq;
      if (two_p % 2 != 0) continue;
      Int p = two_p / 2, r = a3 - p;
      if (p * s + r * q != a1) continue;
      Poly g({Rational(q), Rational(p), Rational(1)});
      Poly h({Rational(s), Rational(r), Rational(1)});
      return {g, h};
    }
  }
  return {};
}

// Rational roots of a monic rational polynomial via the integer model.
std::vector<Rational> rational_roots(const Poly& f) {
  // Substitute x = z / m with m clearing denominators: z^n + ... integer monic;
  // integer roots of that divide its constant term.
  Int m = 1;
  for (const Rational& c : f.coeffs()) m = lcm(m, denominator(c));
  int n = f.degree();
  // g(z) = m^n f(z/m): integer monic.
  std::vector<Rational> gc(n + 1);
  Rational mm(m);
  Rational pw(1);
  for (int k = n; k >= 0; --k) {
    gc[k] = f[k] * pw;  // m^{n-k} f_k
    pw *= mm;
  }
  Poly g(gc);
  std::vector<Rational> roots;
  Rational c0 = g[0];
  if (c0.is_zero()) {
    roots.push_back(Rational(0));
  } else {
    Int a0 = abs(numerator(c0));
    for (Int t = 1; t * t <= a0; ++t) {
      if (a0 % t != 0) continue;
      for (Int cand : {t, Int(a0 / t)}) {
        for (int sgn : {1, -1}) {
          Rational z(sgn * cand);
          if (g.eval(z).is_zero()) roots.push_back(z / mm);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& input) {
  Poly f = input.monic();
  if (f.degree() < 1) throw math_error("factor: constant polynomial");
  if (f.degree() > 4)
    throw math_error("unsupported center: minimal polynomial degree " +
                     std::to_string(f.degree()) + " exceeds 4");
  std::vector<Poly> out;
  // Strip rational roots first.
  for (const Rational& r : rational_roots(f)) {
    out.push_back(Poly({-r, Rational(1)}));
    f = f.divmod(out.back()).first;
  }
  if (f.degree() == 0) return out;
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  if (f.degree() == 2) {
    // No rational roots left, so irreducible over Q.
    out.push_back(f);
    return out;
  }
  if (f.degree() == 3) {
    // Cubic without rational roots is irreducible.
    out.push_back(f);
    return out;
  }
  // Degree 4, no rational roots: either irreducible or a product of two
  // irreducible quadratics. Search in the integer model.
  Int m = 1;
  for (const Rational& c : f.coeffs()) m = lcm(m, denominator(c));
  std::vector<Rational> gc(5);
  Rational mm(m), pw(1);
  for (int k = 4; k >= 0; --k) {
    gc[k] = f[k] * pw;
    pw *= mm;
  }
  Poly g(gc);
  auto split = try_quartic_split(g);
  if (split.empty()) {
    out.push_back(f);
    return out;
  }
  for (const Poly& q : split) {
    // Undo x -> m x substitution: factor of f is q(m x) / m^2, monic.
    Poly back({q[0] / (mm * mm), q[1] / mm, Rational(1)});
    out.push_back(back);
  }
  return out;
}

}  // namespace ks
