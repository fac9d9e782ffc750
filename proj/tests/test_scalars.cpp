#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ks/scalar.hpp"

using namespace ks;

TEST_CASE("rational literals round-trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // normalized
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(parse_rational(to_string(Rational(22, 7)))) == "22/7");
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
}

TEST_CASE("RealQuad arithmetic in Q(sqrt 2)") {
  RealQuad x(Rational(1), Rational(1), 2);   // 1 + sqrt2
  RealQuad y(Rational(-1), Rational(1), 2);  // -1 + sqrt2
  CHECK(x * y == RealQuad(1));               // (sqrt2)^2 - 1
  CHECK(x + y == RealQuad(Rational(0), Rational(2), 2));
  CHECK(x.inv() == y);                       // 1/(1+sqrt2) = sqrt2 - 1
  CHECK((x / x) == RealQuad(1));
  CHECK_THROWS_AS(RealQuad(0).inv(), division_by_zero);
}

TEST_CASE("RealQuad normalizes rational values to d = 1") {
  RealQuad r(Rational(5), Rational(0), 7);
  CHECK(r.d() == 1);
  CHECK(r.is_rational());
  // so rationals mix freely with any quadratic context:
  RealQuad s(Rational(0), Rational(1), 7);
  CHECK((r + s).d() == 7);
}

TEST_CASE("mixed quadratic contexts are rejected") {
  RealQuad a(Rational(0), Rational(1), 2);
  RealQuad b(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(a + b, config_error);
  CHECK_THROWS_AS(RealQuad(Rational(1), Rational(1), 1), config_error);
}

TEST_CASE("exact_sign decides without floating point") {
  // 7/5 < sqrt2 < 3/2
  CHECK(RealQuad(Rational(-7, 5), Rational(1), 2).exact_sign() == 1);
  CHECK(RealQuad(Rational(3, 2), Rational(-1), 2).exact_sign() == 1);
  CHECK(RealQuad(Rational(-3, 2), Rational(1), 2).exact_sign() == -1);
  CHECK(RealQuad(0).exact_sign() == 0);
  // close call: 1393/985 is a convergent of sqrt2 from below
  // (1393^2 = 1940449 < 1940450 = 2 * 985^2)
  CHECK(RealQuad(Rational(1393, 985), Rational(-1), 2).exact_sign() == -1);
}

TEST_CASE("ComplexQuad conjugation and inversion") {
  ComplexQuad z(RealQuad(Rational(1), Rational(1), 2), RealQuad(3));
  CHECK(z.conj().im() == RealQuad(-3));
  CHECK(z * z.inv() == ComplexQuad(1));
  CHECK((ComplexQuad::i() * ComplexQuad::i()) == ComplexQuad(-1));
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("scalar literals for quadratic fields") {
  RealQuad r = parse_real_quad("[1/2,-3]", 5);
  CHECK(r.a() == Rational(1, 2));
  CHECK(r.b() == Rational(-3));
  CHECK(r.d() == 5);
  ComplexQuad z = parse_complex_quad("{re:[1,0],im:[0,1]}", 2);
  CHECK(z.re() == RealQuad(1));
  CHECK(z.im() == RealQuad(Rational(0), Rational(1), 2));
  CHECK(parse_complex_quad(to_string(z), 2) == z);
  CHECK_THROWS_AS(parse_real_quad("[1;2]", 2), parse_error);
  CHECK_THROWS_AS(parse_complex_quad("{re:[1,0]}", 2), parse_error);
}

TEST_CASE("float traits respect the configured tolerance") {
  double saved = float_tol();
  float_tol() = 1e-6;
  CHECK(scalar_traits<double>::is_zero(1e-7));
  CHECK(!scalar_traits<double>::is_zero(1e-5));
  CHECK(scalar_traits<std::complex<double>>::real_sign({2.0, 1e-8}) == 1);
  CHECK_THROWS_AS(scalar_traits<std::complex<double>>::real_sign({1.0, 0.5}),
                  math_error);
  float_tol() = saved;
}

TEST_CASE("from_rational agrees across backends") {
  Rational q(-5, 3);
  CHECK(scalar_traits<RealQuad>::from_rational(q) == RealQuad(q));
  CHECK(scalar_traits<ComplexQuad>::from_rational(q) == ComplexQuad(q));
  CHECK(scalar_traits<double>::from_rational(q) == doctest::Approx(-5.0 / 3.0));
}
