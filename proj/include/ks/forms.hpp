#ifndef KS_FORMS_HPP
#define KS_FORMS_HPP

#include <string>
#include <vector>

#include "ks/matrix.hpp"

namespace ks {

enum class Definiteness { positive, negative, indefinite, degenerate };

inline const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

/// Exact congruence-diagonalization certificate: the recorded pivots are the
/// diagonal of D in some P^* G P = D, and their signs decide the verdict.
template <class S>
struct DefinitenessCert {
  std::vector<S> pivots;  // real values (checked), one per dimension
  int n_pos = 0, n_neg = 0, n_zero = 0;
  Definiteness verdict = Definiteness::degenerate;
};

namespace detail {

template <class S>
void symmetric_eliminate(Matrix<S>& g, Matrix<S>* p, bool conjugating,
                         std::vector<S>& pivots) {
  using T = scalar_traits<S>;
  size_t n = g.rows();
  // Column operation v_j += f * v_k on the form matrix and transform tracker:
  // updates column j by f*col k and row j by conj(f)*row k.
  auto add_col = [&](size_t j, size_t k, const S& f) {
    for (size_t i = 0; i < n; ++i) g(i, j) += g(i, k) * f;
    S fc = conjugating ? T::conj(f) : f;
    for (size_t i = 0; i < n; ++i) g(j, i) += fc * g(k, i);
    if (p)
      for (size_t i = 0; i < n; ++i) (*p)(i, j) += (*p)(i, k) * f;
  };
  auto swap_cols = [&](size_t j, size_t k) {
    for (size_t i = 0; i < n; ++i) std::swap(g(i, j), g(i, k));
    for (size_t i = 0; i < n; ++i) std::swap(g(j, i), g(k, i));
    if (p)
      for (size_t i = 0; i < n; ++i) std::swap((*p)(i, j), (*p)(i, k));
  };

  for (size_t k = 0; k < n; ++k) {
    if (T::is_zero(g(k, k))) {
      // Bring a nonzero diagonal entry to position k if one exists.
      size_t j = k + 1;
      for (; j < n; ++j)
        if (!T::is_zero(g(j, j))) break;
      if (j < n) {
        swap_cols(k, j);
      } else {
        // All remaining diagonal entries vanish; find a nonzero off-diagonal
        // coupling and repair the diagonal with v_k += v_j (or v_k += i v_j).
        size_t jj = n;
        for (size_t cand = k + 1; cand < n && jj == n; ++cand)
          if (!T::is_zero(g(k, cand))) jj = cand;
        if (jj == n) {
          size_t r = n, c = n;
          for (size_t i = k + 1; i < n && r == n; ++i)
            for (size_t m2 = i + 1; m2 < n; ++m2)
              if (!T::is_zero(g(i, m2))) {
                r = i;
                c = m2;
                break;
              }
          if (r == n) {
            // Remaining block is identically zero.
            for (size_t i = k; i < n; ++i) pivots.push_back(T::zero());
            return;
          }
          swap_cols(k, r);
          jj = c;
        }
        add_col(k, jj, T::one());
        if (T::is_zero(g(k, k))) {
          // Hermitian case with purely imaginary coupling: undo and retry
          // with factor i.
          add_col(k, jj, T::zero() - T::one());
          add_col(k, jj, T::imag_unit());
        }
      }
    }
    const S piv = g(k, k);
    pivots.push_back(piv);
    for (size_t j = k + 1; j < n; ++j) {
      if (T::is_zero(g(k, j))) continue;
      S f = T::zero() - g(k, j) / piv;
      add_col(j, k, f);
    }
  }
}

}  // namespace detail

/// Definiteness of a (conjugate-)symmetric matrix, certified by exact
/// congruence diagonalization pivots. Throws math_error if G is not
/// (conjugate-)symmetric.
template <class S>
DefinitenessCert<S> hermitian_definiteness(Matrix<S> g, bool conjugating) {
  using T = scalar_traits<S>;
  if (g.rows() != g.cols()) throw dim_error("definiteness of non-square matrix");
  Matrix<S> adj = conjugating ? g.conj_transpose() : g.transpose();
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j)
      if (!T::is_zero(g(i, j) - adj(i, j)))
        throw math_error(conjugating ? "matrix is not hermitian"
                                     : "matrix is not symmetric");
  DefinitenessCert<S> cert;
  detail::symmetric_eliminate(g, static_cast<Matrix<S>*>(nullptr), conjugating,
                              cert.pivots);
  for (const S& piv : cert.pivots) {
    int s = T::real_sign(piv);
    if (s > 0) ++cert.n_pos;
    else if (s < 0) ++cert.n_neg;
    else ++cert.n_zero;
  }
  if (cert.n_zero > 0) cert.verdict = Definiteness::degenerate;
  else if (cert.n_neg == 0) cert.verdict = Definiteness::positive;
  else if (cert.n_pos == 0) cert.verdict = Definiteness::negative;
  else cert.verdict = Definiteness::indefinite;
  if (g.rows() == 0) cert.verdict = Definiteness::positive;  // vacuous
  return cert;
}

/// Exact P, D with transpose(P) * G * P = D for symmetric rational G.
/// No square roots are introduced.
template <class S>
std::pair<Matrix<S>, Matrix<S>> congruence_diagonalize(Matrix<S> g) {
  using T = scalar_traits<S>;
  if (g.rows() != g.cols()) throw dim_error("congruence of non-square matrix");
  if (!(g.transpose() == g)) throw math_error("matrix is not symmetric");
  Matrix<S> p = Matrix<S>::identity(g.rows());
  std::vector<S> pivots;
  detail::symmetric_eliminate(g, &p, /*conjugating=*/false, pivots);
  Matrix<S> d(g.rows(), g.rows());
  for (size_t i = 0; i < g.rows(); ++i) d(i, i) = pivots[i];
  return {p, d};
}

/// Signature (n_pos, n_neg, n_zero) of a symmetric matrix over an exact
/// ordered backend.
template <class S>
std::tuple<int, int, int> signature_of(const Matrix<S>& g) {
  auto cert = hermitian_definiteness(g, /*conjugating=*/false);
  return {cert.n_pos, cert.n_neg, cert.n_zero};
}

}  // namespace ks

#endif  // KS_FORMS_HPP
