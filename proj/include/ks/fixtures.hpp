#ifndef KS_FIXTURES_HPP
#define KS_FIXTURES_HPP

#include <map>
#include <tuple>

#include "ks/algebra.hpp"

namespace ks {

/// Flat key-block fixture: a weight-2 lattice, optionally a full
/// structure-constant algebra on it, plus free-form options.
///
/// Text format (line oriented, blocks introduced by a key line):
///   name <string>
///   field d <square-free integer>
///   rank <n>
///   gram                     (n lines of n rationals)
///   h20 <p>                  (p lines of n complex literals)
///   structure_constants <m>  (m lines "i j k value")
///   unit                     (one line of n rationals)
///   involution               (n lines of n rationals)
///   options <m>              (m lines "key value")
struct Fixture {
  std::string name;
  std::int64_t d = 1;
  size_t rank = 0;
  Matrix<Rational> gram;
  std::vector<std::vector<ComplexQuad>> h20;

  bool has_algebra = false;
  std::vector<std::tuple<size_t, size_t, size_t, Rational>> stc_triples;
  std::vector<Rational> unit;
  Matrix<Rational> involution;

  std::map<std::string, std::string> options;

  WeightTwoHS hs() const;
  /// Assembles the HodgeAlgebra; requires has_algebra.
  HodgeAlgebra algebra() const;
};

/// Parses fixture text; throws parse_error with a line reference on
/// malformed literals, non-symmetric gram, or dimension mismatches.
Fixture parse_fixture(const std::string& text);

std::string serialize_fixture(const Fixture& f);

/// Built-in fixtures: f1 (rank 3, diag(1,1,-1), eta = e1 + i e2),
/// f2 (rank 4, diag(1,1,-1,-1), same eta), and voisin (the 16-dimensional
/// End_K(V) algebra over K = Q(sqrt 2, i) with its induced weight-2
/// structure). Throws config_error on unknown names.
Fixture builtin(const std::string& name);

}  // namespace ks

#endif  // KS_FIXTURES_HPP
