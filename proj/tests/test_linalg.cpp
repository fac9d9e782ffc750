#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ks/forms.hpp"
#include "ks/subspace.hpp"

using namespace ks;

namespace {

Matrix<Rational> rand_matrix(size_t r, size_t c, std::mt19937_64& rng) {
  Matrix<Rational> m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      m(i, j) = Rational(Int(std::int64_t(rng() % 11) - 5), Int(rng() % 3 + 1));
  return m;
}

}  // namespace

TEST_CASE("rref, rank, kernel on a fixed example") {
  Matrix<Rational> m(3, 4);
  // rows: (1 2 3 4), (2 4 6 8), (1 0 1 0)
  Rational vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  CHECK(rank_of(m) == 2);
  Matrix<Rational> ker = kernel_of(m);
  CHECK(ker.cols() == 2);
  CHECK((m * ker).is_zero());
}

TEST_CASE("solve and inverse") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 5; m(1, 1) = 3;
  Matrix<Rational> inv = inverse(m);
  CHECK(m * inv == Matrix<Rational>::identity(2));

  Matrix<Rational> rhs = Matrix<Rational>::column({Rational(1), Rational(2)});
  Matrix<Rational> x = solve(m, rhs);
  CHECK(m * x == rhs);

  // inconsistent: rows are dependent, rhs is not
  Matrix<Rational> sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 2; sing(1, 0) = 2; sing(1, 1) = 4;
  Matrix<Rational> bad_rhs = Matrix<Rational>::column({Rational(1), Rational(3)});
  CHECK_THROWS_AS(solve(sing, bad_rhs), inconsistent_system);
}

TEST_CASE("solve over ComplexQuad with sqrt 2 entries") {
  Matrix<ComplexQuad> m(2, 2);
  m(0, 0) = ComplexQuad(RealQuad(Rational(0), Rational(1), 2));  // sqrt2
  m(0, 1) = ComplexQuad::i();
  m(1, 0) = ComplexQuad(1);
  m(1, 1) = ComplexQuad(RealQuad(Rational(1), Rational(1), 2));
  Matrix<ComplexQuad> rhs(2, 1);
  rhs(0, 0) = ComplexQuad(1);
  rhs(1, 0) = ComplexQuad::i();
  Matrix<ComplexQuad> x = solve(m, rhs);
  CHECK(m * x == rhs);
}

TEST_CASE("random rank identities") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<Rational> m = rand_matrix(4, 6, rng);
    Matrix<Rational> ker = kernel_of(m);
    CHECK(rank_of(m) + ker.cols() == 6);
    CHECK((m * ker).is_zero());
    CHECK(rank_of(m) == rank_of(m.transpose()));
  }
}

TEST_CASE("subspace canonical forms make equality entrywise") {
  Matrix<Rational> a(3, 2), b(3, 2);
  a(0, 0) = 1; a(1, 0) = 1; a(0, 1) = 1; a(1, 1) = -1;
  b(0, 0) = 1; b(1, 1) = 1;  // e1, e2: same span
  CHECK(Subspace<Rational>::span(a) == Subspace<Rational>::span(b));
  CHECK(Subspace<Rational>::span(a).basis() == Subspace<Rational>::span(b).basis());
}

TEST_CASE("sum/intersect dimension formula") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = Subspace<Rational>::span(rand_matrix(6, 3, rng));
    auto b = Subspace<Rational>::span(rand_matrix(6, 3, rng));
    auto s = a.sum(b);
    auto i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
  }
}

TEST_CASE("orthogonal complements split the space for definite forms") {
  std::mt19937_64 rng(9);
  Matrix<Rational> g = Matrix<Rational>::identity(5);
  auto a = Subspace<Rational>::span(rand_matrix(5, 2, rng));
  auto c = a.orth_complement_in(g, /*conjugate_left=*/false);
  CHECK(a.dim() + c.dim() == 5);
  CHECK(a.intersect(c).dim() == 0);
}

TEST_CASE("definiteness certificates") {
  Matrix<Rational> g(3, 3);
  g(0, 0) = 2; g(0, 1) = 1; g(1, 0) = 1; g(1, 1) = 2; g(2, 2) = 3;
  auto cert = hermitian_definiteness(g, false);
  CHECK(cert.verdict == Definiteness::positive);
  CHECK(cert.n_pos == 3);

  g(2, 2) = -1;
  cert = hermitian_definiteness(g, false);
  CHECK(cert.verdict == Definiteness::indefinite);

  Matrix<Rational> asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(hermitian_definiteness(asym, false), math_error);
}

TEST_CASE("hermitian definiteness over ComplexQuad") {
  Matrix<ComplexQuad> h(2, 2);
  h(0, 0) = ComplexQuad(2);
  h(0, 1) = ComplexQuad::i();
  h(1, 0) = -ComplexQuad::i();
  h(1, 1) = ComplexQuad(1);
  auto cert = hermitian_definiteness(h, true);  // det = 2 - 1 = 1 > 0
  CHECK(cert.verdict == Definiteness::positive);

  h(1, 1) = ComplexQuad(RealQuad(Rational(1, 2)));  // det = 0
  cert = hermitian_definiteness(h, true);
  CHECK(cert.verdict == Definiteness::degenerate);
}

TEST_CASE("congruence diagonalization certificate") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Rational> m = rand_matrix(4, 4, rng);
    Matrix<Rational> g = m + m.transpose();  // symmetric
    auto [p, d] = congruence_diagonalize(g);
    CHECK(p.transpose() * g * p == d);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        if (i != j) CHECK(d(i, j).is_zero());
  }
}

TEST_CASE("signature oracle") {
  Matrix<Rational> g(3, 3);
  g(0, 0) = 1; g(1, 1) = 1; g(2, 2) = -1;
  auto [np, nn, nz] = signature_of(g);
  CHECK(np == 2);
  CHECK(nn == 1);
  CHECK(nz == 0);
}

TEST_CASE("float rref uses magnitude pivoting") {
  Matrix<std::complex<double>> m(2, 2);
  m(0, 0) = {1e-12, 0};
  m(0, 1) = {1, 0};
  m(1, 0) = {1, 0};
  m(1, 1) = {1, 0};
  CHECK(rank_of(m) == 2);
  m(1, 0) = {1e-12, 0};  // now numerically rank 1
  m(1, 1) = {1, 0};
  CHECK(rank_of(m) == 1);
}
