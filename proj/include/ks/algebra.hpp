#ifndef KS_ALGEBRA_HPP
#define KS_ALGEBRA_HPP

#include <optional>

#include "ks/hodge.hpp"
#include "ks/poly.hpp"

namespace ks {

/// Finite-dimensional unital associative Q-algebra carrying an involution t
/// and a polarized weight-2 Hodge structure. Structure constants are dense:
/// row i*n+j of `stc` holds the coordinates of e_i * e_j.
class HodgeAlgebra {
 public:
  HodgeAlgebra() = default;
  HodgeAlgebra(WeightTwoHS hs, Matrix<Rational> stc, std::vector<Rational> unit,
               Matrix<Rational> invol);

  size_t dim() const { return n_; }
  const WeightTwoHS& hs() const { return hs_; }
  const Matrix<Rational>& gram() const { return hs_.gram; }
  const Matrix<Rational>& involution() const { return invol_; }
  const std::vector<Rational>& unit() const { return unit_; }
  const Matrix<Rational>& stc() const { return stc_; }

  /// Coordinates of e_i * e_j.
  std::vector<Rational> basis_product(size_t i, size_t j) const {
    return stc_.row(i * n_ + j);
  }

  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  std::vector<Rational> t(const std::vector<Rational>& a) const {
    return invol_.apply(a);
  }

  /// Matrix of left multiplication by a: x -> a*x.
  template <class S>
  Matrix<S> left_mul(const std::vector<S>& a) const {
    Matrix<S> m(n_, n_);
    for (size_t i = 0; i < n_; ++i) {
      if (scalar_traits<S>::is_zero(a[i])) continue;
      for (size_t j = 0; j < n_; ++j)
        for (size_t k = 0; k < n_; ++k) {
          const Rational& c = stc_(i * n_ + j, k);
          if (!c.is_zero()) m(k, j) += a[i] * scalar_traits<S>::from_rational(c);
        }
    }
    return m;
  }
  /// Matrix of right multiplication by a: x -> x*a.
  template <class S>
  Matrix<S> right_mul(const std::vector<S>& a) const {
    Matrix<S> m(n_, n_);
    for (size_t j = 0; j < n_; ++j) {
      if (scalar_traits<S>::is_zero(a[j])) continue;
      for (size_t i = 0; i < n_; ++i)
        for (size_t k = 0; k < n_; ++k) {
          const Rational& c = stc_(i * n_ + j, k);
          if (!c.is_zero()) m(k, i) += a[j] * scalar_traits<S>::from_rational(c);
        }
    }
    return m;
  }

  template <class S>
  std::vector<S> multiply_s(const std::vector<S>& a, const std::vector<S>& b) const {
    using T = scalar_traits<S>;
    std::vector<S> out(n_, T::zero());
    for (size_t i = 0; i < n_; ++i) {
      if (T::is_zero(a[i])) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (T::is_zero(b[j])) continue;
        S f = a[i] * b[j];
        for (size_t k = 0; k < n_; ++k) {
          const Rational& c = stc_(i * n_ + j, k);
          if (!c.is_zero()) out[k] += f * T::from_rational(c);
        }
      }
    }
    return out;
  }

  std::vector<ComplexQuad> multiply_c(const std::vector<ComplexQuad>& a,
                                      const std::vector<ComplexQuad>& b) const {
    return multiply_s(a, b);
  }

  /// <a, b> under the polarization Gram matrix.
  Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

 private:
  size_t n_ = 0;
  WeightTwoHS hs_;
  Matrix<Rational> stc_;  // (n*n) x n
  std::vector<Rational> unit_;
  Matrix<Rational> invol_;
};

/// All HodgeAlgebra invariants, checked exactly: associativity, unit laws,
/// t^2 = id, t an anti-homomorphism, the adjunction <a,b> = <a t(b), 1> =
/// <t(b) a, 1>, Hodge-type preservation of t, and the bidegree containments.
CertReport validate_algebra(const HodgeAlgebra& a);

/// The seven product containments of the bidegree (-1,-1) condition.
CertReport bidegree_check(const HodgeAlgebra& a);

// ---------------------------------------------------------------------------
// Commutative subalgebras and the center machinery.
// ---------------------------------------------------------------------------

/// A subalgebra presented by a basis inside an ambient structure-constant
/// algebra, with the induced multiplication re-expressed in that basis.
struct SubAlgebra {
  size_t ambient_dim = 0;
  Matrix<Rational> basis;      // ambient_dim x m, columns independent
  Matrix<Rational> stc;        // (m*m) x m
  std::vector<Rational> unit;  // in subalgebra coordinates, if present
  bool has_unit = false;

  size_t dim() const { return basis.cols(); }
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  std::vector<Rational> to_ambient(const std::vector<Rational>& v) const {
    return basis.apply(v);
  }
  /// Coordinates of an ambient vector lying in the span.
  std::vector<Rational> from_ambient(const std::vector<Rational>& v) const;
  /// Trace of left multiplication by a on the subalgebra (regular trace).
  Rational regular_trace(const std::vector<Rational>& a) const;
  /// Minimal polynomial of a (monic), by linear dependence of powers.
  Poly minimal_polynomial(const std::vector<Rational>& a) const;
  /// Evaluate a polynomial at an element (requires a unit).
  std::vector<Rational> eval_poly(const Poly& f, const std::vector<Rational>& a) const;
};

/// Builds the sub-structure-constant presentation of the span of `basis`
/// columns, which must be multiplicatively closed in `amb`.
SubAlgebra make_subalgebra(const HodgeAlgebra& amb, const Matrix<Rational>& basis);

struct CenterComponent {
  std::vector<Rational> idempotent;  // ambient coordinates
  SubAlgebra component;
  Poly minimal_poly;        // of a primitive element, when one was found
  bool is_field = false;    // primitive element of full degree found
  bool totally_real_field = false;
};

struct CenterReport {
  Subspace<Rational> center;       // K
  Subspace<Rational> t_invariant;  // K+
  std::vector<CenterComponent> components;
};

/// K = kernel of h -> (a -> ha - ah); K+ = kernel of (T - id) on K.
/// Components come from split_commutative applied to K.
CenterReport center(const HodgeAlgebra& a);

/// Splits a commutative, nilpotent-free algebra into simple components via
/// idempotents found by factoring minimal polynomials (degree <= 4).
/// Fails loudly ("unsupported center") beyond the supported degree.
std::vector<CenterComponent> split_commutative(const SubAlgebra& k);

/// Exact signature of (alpha, beta) -> Tr(L_{y alpha t(beta)}) on K.
/// `invol` maps subalgebra coordinates to subalgebra coordinates.
std::tuple<int, int, int> trace_form_signature(const SubAlgebra& k,
                                               const std::vector<Rational>& y,
                                               const Matrix<Rational>& invol);

/// K[a]: span of powers of a (with the unit), closed under multiplication.
SubAlgebra subalgebra_generated(const HodgeAlgebra& a,
                                const std::vector<Rational>& elt);

}  // namespace ks

#endif  // KS_ALGEBRA_HPP
