#ifndef KS_CLIFFORD_HPP
#define KS_CLIFFORD_HPP

#include "ks/algebra.hpp"

namespace ks {

/// C(H) for a rank-n rational lattice (n <= 6), presented on the monomial
/// basis of a congruence-diagonalized generator basis. Monomials are indexed
/// by subset masks: mask m stands for the ascending product of the e_i with
/// bit i set; mask 0 is the unit.
struct CliffordAlgebra {
  HodgeAlgebra base;                // dimension 2^n
  size_t n = 0;                     // lattice rank
  Matrix<Rational> generator_gram;  // diagonal form G' of the lattice
  Matrix<Rational> diag_transform;  // P with P^T G P = G'
  WeightTwoHS lattice_hs;           // the input weight-2 structure
  std::vector<ComplexQuad> eta;     // h20 generator as a degree-1 element

  size_t dim() const { return size_t(1) << n; }
};

/// "e{1}e{3}" style monomial name; mask 0 prints as "1".
std::string monomial_name(size_t mask);

/// Pretty-printed element (rational coordinates on the monomial basis).
std::string element_name(const std::vector<Rational>& v);

/// Builds C(H) from the lattice Gram matrix and its weight-2 structure.
/// Structure constants come from normal-ordering rewrites of generator
/// strings; the induced weight-2 structure on C(H) (eta-wedge grading with
/// the clifford form as polarization) is installed on `base`.
CliffordAlgebra clifford_build(const Matrix<Rational>& gram,
                               const WeightTwoHS& hs);

/// The induced 2^n-dimensional weight-2 structure (computed during build).
const WeightTwoHS& induced_weight2(const CliffordAlgebra& cl);

/// <x, y> = -(scalar part of t(x) y).
Rational clifford_form(const CliffordAlgebra& cl, const std::vector<Rational>& x,
                       const std::vector<Rational>& y);

struct KSStructure {
  std::vector<ComplexQuad> e;  // real element with e^2 = -1
  WeightOneHS w1;              // h10 = W = eta C(H_C); omega filled later
  CertReport report;
};

/// The Kuga-Satake complex structure: exact path scales eta to <eta,etabar>=2,
/// sets e = -i(2 + eta etabar)/2 and certifies that the i-eigenspace of left
/// multiplication by e equals W = eta C(H_C); the float path rebuilds e from
/// an orthonormalized (Re eta, Im eta) pair and compares within tolerance.
KSStructure ks_structure(const CliffordAlgebra& cl);

}  // namespace ks

#endif  // KS_CLIFFORD_HPP
