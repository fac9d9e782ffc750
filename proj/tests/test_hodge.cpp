#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ks/fixtures.hpp"
#include "ks/hodge.hpp"

using namespace ks;

namespace {

WeightTwoHS f1_hs() { return builtin("f1").hs(); }

Matrix<Rational> rand_matrix(size_t n, std::mt19937_64& rng) {
  Matrix<Rational> m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m(i, j) = Rational(Int(std::int64_t(rng() % 7) - 3));
  return m;
}

}  // namespace

TEST_CASE("the rank-3 lattice validates") {
  WeightTwoHS hs = f1_hs();
  CHECK(hs.p() == 1);
  CHECK(hs.h11().dim() == 1);
  CHECK(hs.h02().dim() == 1);
  CertReport rep = validate_weight2(hs);
  CHECK(rep.all_passed());
}

TEST_CASE("non-isotropic h20 is reported") {
  WeightTwoHS hs = f1_hs();
  // replace eta = e1 + i e2 by e1 + i e3: <eta,eta> = 1 - (-1) = 2
  std::vector<ComplexQuad> eta(3);
  eta[0] = ComplexQuad(1);
  eta[2] = ComplexQuad::i();
  hs.h20 = CSubspace::span_vectors(3, {eta});
  CertReport rep = validate_weight2(hs);
  CHECK(!rep.all_passed());
  bool found = false;
  for (const auto& c : rep.items())
    if (c.name.find("isotropic") != std::string::npos && !c.passed) found = true;
  CHECK(found);
}

TEST_CASE("empty h20 is excluded") {
  WeightTwoHS hs = f1_hs();
  hs.h20 = CSubspace(3);
  CHECK_THROWS_AS(validate_weight2(hs), math_error);
}

TEST_CASE("hermitian_gram produces a hermitian matrix") {
  WeightTwoHS hs = f1_hs();
  Matrix<ComplexQuad> b = hs.h20.sum(hs.h02()).basis();
  Matrix<ComplexQuad> h = hermitian_gram(hs.gram, b);
  CHECK(h == h.conj_transpose());
}

TEST_CASE("omega_adjoint is the adjoint for the symplectic pairing") {
  // omega on Q^4: standard block form
  Matrix<Rational> omega(4, 4);
  omega(0, 2) = 1; omega(1, 3) = 1; omega(2, 0) = -1; omega(3, 1) = -1;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix<Rational> f = rand_matrix(4, rng);
    Matrix<Rational> tf = omega_adjoint(omega, f);
    // omega(f x, y) = omega(x, tf y) as matrices: f^T omega = omega tf
    CHECK(f.transpose() * omega == omega * tf);
    CHECK(omega_adjoint(omega, tf) == f);
    Matrix<Rational> g = rand_matrix(4, rng);
    CHECK(omega_adjoint(omega, f * g) ==
          omega_adjoint(omega, g) * omega_adjoint(omega, f));
  }
}

TEST_CASE("vectorization round-trips row-major") {
  Matrix<ComplexQuad> f(2, 2);
  f(0, 1) = ComplexQuad::i();
  f(1, 0) = ComplexQuad(3);
  auto v = vectorize(f);
  CHECK(v[0 * 2 + 1] == ComplexQuad::i());
  CHECK(unvectorize(v, 2) == f);
}

TEST_CASE("induced weight-2 structure on End(H_1)") {
  // weight-1: rank 2, omega = standard symplectic, h10 = span(e1 + i e2)
  WeightOneHS w1;
  w1.rank = 2;
  w1.omega = Matrix<Rational>(2, 2);
  w1.omega(0, 1) = 1;
  w1.omega(1, 0) = -1;
  std::vector<ComplexQuad> v(2);
  v[0] = ComplexQuad(1);
  v[1] = ComplexQuad::i();
  w1.h10 = CSubspace::span_vectors(2, {v});
  CHECK(validate_weight1(w1).all_passed());

  WeightTwoHS end2 = induced_end_weight2(w1);
  CHECK(end2.rank == 4);
  CHECK(end2.p() == 1);  // Hom(conj h10, h10) has dimension g*g = 1
  CHECK(validate_weight2(end2).all_passed());
  // gram is -Trace(f t(g)): symmetric by construction
  CHECK(end2.gram == end2.gram.transpose());
}
