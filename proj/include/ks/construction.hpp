#ifndef KS_CONSTRUCTION_HPP
#define KS_CONSTRUCTION_HPP

#include <cstdint>

#include "ks/algebra.hpp"

namespace ks {

/// H_C = (W (+) Wbar) (+) M with W = H^{2,0} H_C and M the orthogonal
/// complement of the ideal W (+) Wbar.
struct Decomposition {
  CSubspace W, Wbar, M;
  CertReport certificates;
};

/// Per-embedding data of the general construction: the block idempotent
/// e_sigma, the complex-structure element m_sigma acting by multiplication on
/// the right (both with coefficients in Q(sqrt d)), and whether the block
/// lies in M.
struct SigmaBlock {
  std::vector<RealQuad> idempotent;
  std::vector<RealQuad> m_sigma;
  bool in_M = false;
  bool exact = true;  // false when m_sigma was certified in float only
};

struct ConstructionResult {
  WeightOneHS w1;
  std::vector<Rational> a;  // t(a) = -a, defines omega_a(x,y) = <x, y a>
  std::vector<SigmaBlock> sigma_data;
  CertReport certificates;
};

enum class ChallengerVerdict { equal, invalid_challenger };

inline const char* to_string(ChallengerVerdict v) {
  return v == ChallengerVerdict::equal ? "equal" : "not-a-valid-challenger";
}

/// W = H^{2,0} H_C: span of eta * b over an H^{2,0} basis and all basis
/// elements.
CSubspace compute_W(const HodgeAlgebra& a);

/// Certifies the full decomposition; throws certificate_error naming the
/// violated invariant on failure.
Decomposition decompose(const HodgeAlgebra& a);

/// A rational a with t(a) = -a built from the t-eigenvector split of an
/// H^{2,0} basis, a = sum of c_j * (+-i)(eta etabar - etabar eta) with random
/// positive coefficients; certified: W isotropic under omega_a and the
/// hermitian form h_a positive definite on W. Resamples up to 32 times.
std::pair<std::vector<Rational>, CertReport> polarization_search(
    const HodgeAlgebra& a, const Decomposition& dec, std::uint64_t seed);

/// Trivial-center construction (requires M = 0): weight-1 structure with
/// h10 = W and omega = omega_a from polarization_search.
ConstructionResult build_weight1(const HodgeAlgebra& a, const Decomposition& dec,
                                 std::uint64_t seed);

/// Challenger test: a valid challenger satisfies H_C = W' (+) conj(W') and
/// the morphism property H^{2,0} W' in W', H^{2,0} conj(W') in W'; any such
/// W' must contain H^{2,0} H_C and hence equal W.
ChallengerVerdict verify_uniqueness(const HodgeAlgebra& a,
                                    const ConstructionResult& res,
                                    const CSubspace& challenger,
                                    CertReport* why = nullptr);

/// General-center construction: embedding blocks of the t-invariant center
/// K+, the section-1 structure on W-blocks and right multiplication by
/// m_sigma (m_sigma^2 = -1, m_sigma a t(m_sigma) = a) on M-blocks.
/// Delegates to build_weight1 when M = 0.
ConstructionResult general_construct(const HodgeAlgebra& a,
                                     const Decomposition& dec,
                                     std::uint64_t seed);

/// K = K+ fallback: extract m with m^2 = -e_blk from a t-odd element a_blk of
/// a commutative block with unit e_blk, via the minimal polynomial of a_blk.
/// Exact when a single square root in Q(sqrt d) suffices, else float with
/// tolerance certificates.
struct MFromA {
  std::vector<RealQuad> m;        // valid when exact
  std::vector<double> m_float;    // valid when !exact
  bool exact = true;
  CertReport report;
};
MFromA complex_structure_from_a(const HodgeAlgebra& a,
                                const std::vector<Rational>& a_blk,
                                const std::vector<Rational>& e_blk);

/// Universal-property maps e_beta(h) = rho(h) beta for a validated algebra
/// map rho into End(H_1(B)) stable under the omega-adjoint. Certifies that
/// each e_beta is a weight-1 morphism (e_beta(W) in H^{1,0}(B)), that the
/// joint map is surjective onto H_1(B), and injective on H.
CertReport e_beta_maps(const HodgeAlgebra& a, const ConstructionResult& res,
                       const WeightOneHS& b,
                       const std::vector<Matrix<Rational>>& rho,
                       const std::vector<std::vector<Rational>>& betas);

}  // namespace ks

#endif  // KS_CONSTRUCTION_HPP
