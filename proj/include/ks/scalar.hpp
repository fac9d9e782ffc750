#ifndef KS_SCALAR_HPP
#define KS_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ks {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct config_error : std::runtime_error {
  explicit config_error(const std::string& m) : std::runtime_error(m) {}
};
struct math_error : std::runtime_error {
  explicit math_error(const std::string& m) : std::runtime_error(m) {}
};
struct division_by_zero : math_error {
  division_by_zero() : math_error("division by zero") {}
};

inline int sign_of(const Rational& r) {
  return r.sign();
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

/// Tolerance used by the floating-point backend for zero tests and sign
/// decisions. Settable per run (CLI flag --tol).
inline double& float_tol() {
  static double tol = 1e-9;
  return tol;
}

// ---------------------------------------------------------------------------
// RealQuad: a + b*sqrt(d) for a fixed square-free d > 1, or plain rationals
// when d == 1 (then b must be 0; we canonicalize b==0 values to d=1 so that
// rationals mix freely with any quadratic context).
// ---------------------------------------------------------------------------
class RealQuad {
 public:
  RealQuad() : a_(0), b_(0), d_(1) {}
  RealQuad(int v) : a_(v), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
  RealQuad(Rational a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT
  RealQuad(Rational a, Rational b, std::int64_t d)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1) throw config_error("RealQuad: d must be >= 1");
    if (d_ == 1 && !b_.is_zero())
      throw config_error("RealQuad: d=1 context admits no sqrt part");
    normalize();
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  friend RealQuad operator+(const RealQuad& x, const RealQuad& y) {
    std::int64_t d = unify(x, y);
    return RealQuad(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend RealQuad operator-(const RealQuad& x, const RealQuad& y) {
    std::int64_t d = unify(x, y);
    return RealQuad(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  RealQuad operator-() const { return RealQuad(-a_, -b_, d_); }
  friend RealQuad operator*(const RealQuad& x, const RealQuad& y) {
    std::int64_t d = unify(x, y);
    return RealQuad(x.a_ * y.a_ + x.b_ * y.b_ * d,
                    x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  RealQuad inv() const {
    if (is_zero()) throw division_by_zero();
    // (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero for d square-free.
    Rational n = a_ * a_ - b_ * b_ * Rational(d_);
    if (n.is_zero()) throw math_error("RealQuad: d is a perfect square");
    return RealQuad(a_ / n, -b_ / n, d_);
  }
  friend RealQuad operator/(const RealQuad& x, const RealQuad& y) {
    return x * y.inv();
  }
  RealQuad& operator+=(const RealQuad& o) { return *this = *this + o; }
  RealQuad& operator-=(const RealQuad& o) { return *this = *this - o; }
  RealQuad& operator*=(const RealQuad& o) { return *this = *this * o; }
  RealQuad& operator/=(const RealQuad& o) { return *this = *this / o; }

  friend bool operator==(const RealQuad& x, const RealQuad& y) {
    unify(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const RealQuad& x, const RealQuad& y) {
    return !(x == y);
  }

  /// Exact sign of a + b*sqrt(d), sqrt(d) the positive root. Case analysis on
  /// the signs of a and b, comparing a^2 against b^2 d when they disagree.
  int exact_sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int cmp = sign_of(a_ * a_ - b_ * b_ * Rational(d_));
    if (cmp == 0) return 0;  // only possible when d is a square
    return cmp == 1 ? sa : sb;
  }

  double to_double() const {
    return static_cast<double>(a_) +
           static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
  }

  static std::int64_t unify(const RealQuad& x, const RealQuad& y) {
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1 || x.d_ == y.d_) return x.d_;
    throw config_error("mixed quadratic contexts: sqrt(" +
                       std::to_string(x.d_) + ") vs sqrt(" +
                       std::to_string(y.d_) + ")");
  }

 private:
  void normalize() {
    if (b_.is_zero()) d_ = 1;
  }
  Rational a_, b_;
  std::int64_t d_;
};

// ---------------------------------------------------------------------------
// ComplexQuad: re + im*i with RealQuad parts. Conjugation negates im and
// fixes sqrt(d) (d > 0 is real).
// ---------------------------------------------------------------------------
class ComplexQuad {
 public:
  ComplexQuad() = default;
  ComplexQuad(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ComplexQuad(RealQuad re) : re_(std::move(re)) {}  // NOLINT
  ComplexQuad(Rational re) : re_(std::move(re)) {}  // NOLINT
  ComplexQuad(RealQuad re, RealQuad im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexQuad i() { return ComplexQuad(RealQuad(0), RealQuad(1)); }

  const RealQuad& re() const { return re_; }
  const RealQuad& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexQuad conj() const { return ComplexQuad(re_, -im_); }

  friend ComplexQuad operator+(const ComplexQuad& x, const ComplexQuad& y) {
    return ComplexQuad(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend ComplexQuad operator-(const ComplexQuad& x, const ComplexQuad& y) {
    return ComplexQuad(x.re_ - y.re_, x.im_ - y.im_);
  }
  ComplexQuad operator-() const { return ComplexQuad(-re_, -im_); }
  friend ComplexQuad operator*(const ComplexQuad& x, const ComplexQuad& y) {
    return ComplexQuad(x.re_ * y.re_ - x.im_ * y.im_,
                       x.re_ * y.im_ + x.im_ * y.re_);
  }
  ComplexQuad inv() const {
    if (is_zero()) throw division_by_zero();
    RealQuad n = re_ * re_ + im_ * im_;
    return ComplexQuad(re_ / n, -im_ / n);
  }
  friend ComplexQuad operator/(const ComplexQuad& x, const ComplexQuad& y) {
    return x * y.inv();
  }
  ComplexQuad& operator+=(const ComplexQuad& o) { return *this = *this + o; }
  ComplexQuad& operator-=(const ComplexQuad& o) { return *this = *this - o; }
  ComplexQuad& operator*=(const ComplexQuad& o) { return *this = *this * o; }
  ComplexQuad& operator/=(const ComplexQuad& o) { return *this = *this / o; }

  friend bool operator==(const ComplexQuad& x, const ComplexQuad& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ComplexQuad& x, const ComplexQuad& y) {
    return !(x == y);
  }

  std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

 private:
  RealQuad re_, im_;
};

// ---------------------------------------------------------------------------
// Scalar traits: the generic linear algebra is written against this surface.
// ---------------------------------------------------------------------------
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational conj(const Rational& x) { return x; }
  static Rational from_rational(const Rational& x) { return x; }
  static Rational imag_unit() { throw math_error("no imaginary unit over Q"); }
  // Sign of a scalar known to be real; throws if it is not.
  static int real_sign(const Rational& x) { return x.sign(); }
  static double norm_score(const Rational& x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<RealQuad> {
  static constexpr bool exact = true;
  static RealQuad zero() { return RealQuad(); }
  static RealQuad one() { return RealQuad(1); }
  static bool is_zero(const RealQuad& x) { return x.is_zero(); }
  static RealQuad conj(const RealQuad& x) { return x; }
  static RealQuad from_rational(const Rational& x) { return RealQuad(x); }
  static RealQuad imag_unit() { throw math_error("no imaginary unit over Q(sqrt d)"); }
  static int real_sign(const RealQuad& x) { return x.exact_sign(); }
  static double norm_score(const RealQuad& x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<ComplexQuad> {
  static constexpr bool exact = true;
  static ComplexQuad zero() { return ComplexQuad(); }
  static ComplexQuad one() { return ComplexQuad(1); }
  static bool is_zero(const ComplexQuad& x) { return x.is_zero(); }
  static ComplexQuad conj(const ComplexQuad& x) { return x.conj(); }
  static ComplexQuad from_rational(const Rational& x) { return ComplexQuad(x); }
  static ComplexQuad imag_unit() { return ComplexQuad::i(); }
  static int real_sign(const ComplexQuad& x) {
    if (!x.is_real()) throw math_error("sign of a non-real value");
    return x.re().exact_sign();
  }
  static double norm_score(const ComplexQuad& x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static bool is_zero(const std::complex<double>& x) {
    return std::abs(x) <= float_tol();
  }
  static std::complex<double> conj(const std::complex<double>& x) {
    return std::conj(x);
  }
  static std::complex<double> from_rational(const Rational& x) {
    return {static_cast<double>(x), 0.0};
  }
  static std::complex<double> imag_unit() { return {0.0, 1.0}; }
  static int real_sign(const std::complex<double>& x) {
    if (std::abs(x.imag()) > float_tol())
      throw math_error("sign of a non-real value");
    if (std::abs(x.real()) <= float_tol()) return 0;
    return x.real() > 0 ? 1 : -1;
  }
  static double norm_score(const std::complex<double>& x) { return std::abs(x); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return std::abs(x) <= float_tol(); }
  static double conj(double x) { return x; }
  static double from_rational(const Rational& x) { return static_cast<double>(x); }
  static double imag_unit() { throw math_error("no imaginary unit over R"); }
  static int real_sign(double x) {
    if (std::abs(x) <= float_tol()) return 0;
    return x > 0 ? 1 : -1;
  }
  static double norm_score(double x) { return std::abs(x); }
};

// --------------------------------------------------------------------------
// Textual literals: rationals as "p/q" or "p"; RealQuad as "[a,b]" meaning
// a + b*sqrt(d); ComplexQuad as "{re:[a,b],im:[c,e]}".
// --------------------------------------------------------------------------
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

Rational parse_rational(const std::string& text);
RealQuad parse_real_quad(const std::string& text, std::int64_t d);
ComplexQuad parse_complex_quad(const std::string& text, std::int64_t d);

std::string to_string(const Rational& x);
std::string to_string(const RealQuad& x);
std::string to_string(const ComplexQuad& x);

}  // namespace ks

#endif  // KS_SCALAR_HPP
