#ifndef KS_POLY_HPP
#define KS_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ks/scalar.hpp"

namespace ks {

/// Dense univariate polynomial over Q, coefficient of x^k at index k.
/// Always stored with a nonzero leading coefficient (or empty == zero).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v) { return Poly({std::move(v)}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& operator[](size_t k) const { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  /// Euclidean division; returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& g) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

Poly poly_gcd(Poly f, Poly g);

/// Number of distinct real roots of a squarefree f, by Sturm's theorem on
/// (-inf, +inf).
int sturm_real_root_count(const Poly& f);

bool is_squarefree(const Poly& f);

/// True iff every complex root of the squarefree polynomial f is real.
/// Throws math_error on non-squarefree input.
bool totally_real(const Poly& f);

/// Factors a monic squarefree polynomial of degree <= 4 into monic irreducible
/// factors over Q (rational-root search plus quadratic/quartic case analysis).
/// Throws math_error("unsupported center: ...") beyond degree 4.
std::vector<Poly> factor_squarefree(const Poly& f);

/// Rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Square root of x inside Q(sqrt d), if one exists there. x may itself have
/// a sqrt(d) part. Rational inputs normalize to d = 1, so an ambient d may be
/// supplied to allow roots of the form q sqrt(ambient).
std::optional<RealQuad> field_sqrt(const RealQuad& x, std::int64_t ambient = 1);

/// Continued-fraction convergent p/q of sqrt(d) with at least `depth` steps.
Rational sqrt_convergent(std::int64_t d, int depth);

}  // namespace ks

#endif  // KS_POLY_HPP
