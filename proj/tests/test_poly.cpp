#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ks/poly.hpp"

using namespace ks;

namespace {
Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }
}

TEST_CASE("division and gcd") {
  Poly f = P({-1, 0, 0, 0, 1});  // x^4 - 1
  Poly g = P({-1, 0, 1});        // x^2 - 1
  auto [q, r] = f.divmod(g);
  CHECK(q == P({1, 0, 1}));
  CHECK(r.is_zero());
  CHECK(poly_gcd(f, g).monic() == g);
  CHECK(poly_gcd(P({1, 0, 1}), P({-1, 1})).degree() == 0);
}

TEST_CASE("sturm root counts") {
  CHECK(sturm_real_root_count(P({-2, 0, 1})) == 2);       // x^2 - 2
  CHECK(sturm_real_root_count(P({1, 0, 1})) == 0);        // x^2 + 1
  CHECK(sturm_real_root_count(P({5, 0, -5, 0, 1})) == 4); // x^4 - 5x^2 + 5
  CHECK(sturm_real_root_count(P({0, -1, 0, 1})) == 3);    // x^3 - x
}

TEST_CASE("totally_real") {
  CHECK(totally_real(P({-2, 0, 1})));
  CHECK(!totally_real(P({1, 0, 1})));
  CHECK(totally_real(P({5, 0, -5, 0, 1})));
  CHECK_THROWS_AS(totally_real(P({1, 2, 1})), math_error);  // (x+1)^2
}

TEST_CASE("factor_squarefree handles the low-degree cases") {
  auto f1 = factor_squarefree(P({-1, 0, 1}));  // (x-1)(x+1)
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] * f1[1] == P({-1, 0, 1}));

  auto f2 = factor_squarefree(P({1, 0, 1}));  // irreducible
  CHECK(f2.size() == 1);

  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2): no rational roots
  auto f3 = factor_squarefree(P({4, 0, 0, 0, 1}));
  REQUIRE(f3.size() == 2);
  CHECK(f3[0] * f3[1] == P({4, 0, 0, 0, 1}));

  // the quartic minimal polynomial of x + y over Q(sqrt2, i) is irreducible
  CHECK(factor_squarefree(P({9, 0, -2, 0, 1})).size() == 1);

  CHECK(factor_squarefree(P({5, 0, -5, 0, 1})).size() == 1);
}

TEST_CASE("rational and field square roots") {
  CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(!rational_sqrt(Rational(2)));
  CHECK(!rational_sqrt(Rational(-4)));

  // sqrt(3 + 2 sqrt2) = 1 + sqrt2
  RealQuad x(Rational(3), Rational(2), 2);
  CHECK(*field_sqrt(x) == RealQuad(Rational(1), Rational(1), 2));
  // sqrt(8) needs the ambient field hint once 8 normalizes to d = 1
  CHECK(!field_sqrt(RealQuad(8)));
  CHECK(*field_sqrt(RealQuad(8), 2) == RealQuad(Rational(0), Rational(2), 2));
  CHECK(!field_sqrt(RealQuad(-1), 2));
  CHECK(!field_sqrt(RealQuad(Rational(1), Rational(1), 3)));
}

TEST_CASE("sqrt_convergent approximates from above quadratically") {
  Rational c = sqrt_convergent(2, 6);
  Rational err = c * c - 2;
  CHECK(err.sign() > 0);
  CHECK(err < Rational(1, Int(1) << 40));
}

TEST_CASE("eval and derivative") {
  Poly f = P({1, -2, 3});  // 3x^2 - 2x + 1
  CHECK(f.eval(Rational(2)) == Rational(9));
  CHECK(f.derivative() == P({-2, 6}));
  CHECK(is_squarefree(f));
  CHECK(!is_squarefree(P({1, 2, 1})));
}
