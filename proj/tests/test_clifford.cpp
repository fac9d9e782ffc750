#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "ks/clifford.hpp"
#include "ks/fixtures.hpp"

using namespace ks;

namespace {

CliffordAlgebra build(const char* name) {
  Fixture f = builtin(name);
  return clifford_build(f.gram, f.hs());
}

}  // namespace

TEST_CASE("monomial naming") {
  CHECK(monomial_name(0) == "1");
  CHECK(monomial_name(0b101) == "e{1}e{3}");
  std::vector<Rational> v(8, Rational(0));
  v[3] = 4;
  CHECK(element_name(v) == "4*e{1}e{2}");
}

TEST_CASE("C(f1): dimension, generator squares, induced Hodge numbers") {
  CliffordAlgebra cl = build("f1");
  CHECK(cl.dim() == 8);
  CHECK(cl.n == 3);
  for (size_t g = 0; g < cl.n; ++g) {
    size_t idx = size_t(1) << g;
    auto sq = cl.base.basis_product(idx, idx);
    std::vector<Rational> want(8, Rational(0));
    want[0] = -cl.generator_gram(g, g);
    CHECK(sq == want);
  }
  const WeightTwoHS& ind = induced_weight2(cl);
  CHECK(ind.p() == 2);
  CHECK(ind.rank - 2 * ind.p() == 4);
  CHECK(validate_weight2(ind).all_passed());
}

TEST_CASE("C(f2) has dimension 16 and is exhaustively associative in < 10 s") {
  auto start = std::chrono::steady_clock::now();
  CliffordAlgebra cl = build("f2");
  CHECK(cl.dim() == 16);
  const HodgeAlgebra& a = cl.base;
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) {
      auto ij = a.basis_product(i, j);
      for (size_t k = 0; k < 16; ++k) {
        std::vector<Rational> ek(16, Rational(0)), ei(16, Rational(0));
        ek[k] = 1;
        ei[i] = 1;
        REQUIRE(a.multiply(ij, ek) == a.multiply(ei, a.basis_product(j, k)));
      }
    }
  double secs = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10.0);
}

TEST_CASE("clifford_form matches the algebra pairing and the adjunction") {
  CliffordAlgebra cl = build("f1");
  std::mt19937_64 rng(51);
  auto rand_vec = [&](size_t n) {
    std::vector<Rational> v(n);
    for (auto& c : v) c = Rational(Int(std::int64_t(rng() % 9) - 4));
    return v;
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto v = rand_vec(8), x = rand_vec(8), y = rand_vec(8);
    CHECK(clifford_form(cl, x, y) == cl.base.pair(x, y));
    CHECK(clifford_form(cl, x, y) == clifford_form(cl, y, x));
    CHECK(cl.base.pair(cl.base.multiply(v, x), y) ==
          cl.base.pair(x, cl.base.multiply(cl.base.t(v), y)));
  }
}

TEST_CASE("degree-1 embedding recovers the lattice form") {
  CliffordAlgebra cl = build("f1");
  // in diagonalized coordinates: <e_i, e_j> = G'(i, j)
  for (size_t i = 0; i < cl.n; ++i)
    for (size_t j = 0; j < cl.n; ++j) {
      std::vector<Rational> x(8, Rational(0)), y(8, Rational(0));
      x[size_t(1) << i] = 1;
      y[size_t(1) << j] = 1;
      CHECK(clifford_form(cl, x, y) == cl.generator_gram(i, j));
    }
}

TEST_CASE("the classical complex structure on C(f1)") {
  CliffordAlgebra cl = build("f1");
  KSStructure ks = ks_structure(cl);
  CHECK(ks.report.all_passed());
  // e = e2 e1 in diagonalized coordinates: the coefficient sits on e1e2
  std::vector<ComplexQuad> e = ks.e;
  for (const ComplexQuad& c : e) CHECK(c.is_real());
  CHECK(e[0b011] == ComplexQuad(-1));  // e2e1 = -e1e2
  // e^2 = -1
  auto sq = cl.base.multiply_c(e, e);
  CHECK(sq[0] == ComplexQuad(-1));
  for (size_t i = 1; i < 8; ++i) CHECK(sq[i].is_zero());
  CHECK(ks.w1.h10.dim() == 4);
}

TEST_CASE("eta eta-bar identity behind the polarization element") {
  CliffordAlgebra cl = build("f1");
  // eta = e1 + i e2 as a degree-1 element
  std::vector<ComplexQuad> eta(8), ebar(8);
  eta[1] = ComplexQuad(1);
  eta[2] = ComplexQuad::i();
  ebar[1] = ComplexQuad(1);
  ebar[2] = -ComplexQuad::i();
  auto prod = cl.base.multiply_c(eta, ebar);
  // eta etabar = -2 - 2i e1e2 = -2(1 - i e) with e = e2e1
  CHECK(prod[0] == ComplexQuad(-2));
  CHECK(prod[0b011] == ComplexQuad(RealQuad(0), RealQuad(-2)));
  auto rev = cl.base.multiply_c(ebar, eta);
  // i (eta etabar - etabar eta) = 4 e1e2 = -4 e2e1
  std::vector<ComplexQuad> a(8);
  for (size_t i = 0; i < 8; ++i) a[i] = ComplexQuad::i() * (prod[i] - rev[i]);
  CHECK(a[0b011] == ComplexQuad(4));
  for (size_t i = 0; i < 8; ++i)
    if (i != 0b011) CHECK(a[i].is_zero());
}

TEST_CASE("rank cap is enforced") {
  Matrix<Rational> g = Matrix<Rational>::identity(7);
  WeightTwoHS hs;
  hs.rank = 7;
  hs.gram = g;
  std::vector<ComplexQuad> eta(7);
  eta[0] = ComplexQuad(1);
  eta[1] = ComplexQuad::i();
  hs.h20 = CSubspace::span_vectors(7, {eta});
  CHECK_THROWS_AS(clifford_build(g, hs), config_error);
}
