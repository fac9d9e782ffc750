#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ks/fixtures.hpp"
#include "ks/hodge.hpp"

using namespace ks;

TEST_CASE("built-in lattice fixtures") {
  Fixture f1 = builtin("f1");
  CHECK(f1.rank == 3);
  CHECK(f1.gram(0, 0) == Rational(1));
  CHECK(f1.gram(2, 2) == Rational(-1));
  CHECK(f1.h20.size() == 1);
  CHECK(!f1.has_algebra);
  CHECK(validate_weight2(f1.hs()).all_passed());

  Fixture f2 = builtin("f2");
  CHECK(f2.rank == 4);
  CHECK(f2.gram(3, 3) == Rational(-1));
  CHECK(validate_weight2(f2.hs()).all_passed());

  CHECK_THROWS_AS(builtin("nope"), config_error);
  CHECK_THROWS_AS(f1.algebra(), config_error);
}

TEST_CASE("the voisin fixture") {
  Fixture v = builtin("voisin");
  CHECK(v.rank == 16);
  CHECK(v.d == 2);
  CHECK(v.has_algebra);
  CHECK(v.h20.size() == 2);
  CHECK(validate_weight2(v.hs()).all_passed());
  HodgeAlgebra alg = v.algebra();
  CHECK(validate_algebra(alg).all_passed());
  // gram = -Trace(f t(g)) is symmetric with signature (2p, n - 2p) = (4, 12)
  auto [np, nn, nz] = signature_of(v.gram);
  CHECK(np == 4);
  CHECK(nn == 12);
  CHECK(nz == 0);
}

TEST_CASE("serialize/parse round-trip is the identity on serialized text") {
  for (const char* name : {"f1", "f2", "voisin"}) {
    Fixture f = builtin(name);
    std::string text = serialize_fixture(f);
    Fixture g = parse_fixture(text);
    CHECK(serialize_fixture(g) == text);
    CHECK(g.rank == f.rank);
    CHECK(g.gram == f.gram);
    CHECK(g.has_algebra == f.has_algebra);
  }
}

TEST_CASE("parse errors carry locations") {
  CHECK_THROWS_WITH_AS(parse_fixture("name x\nrank 2\nh20 1\n"
                                     "{re:[1,0],im:[0,0]} {re:[0,0],im:[1,0]}\n"),
                       doctest::Contains("gram"), parse_error);

  // asymmetric gram
  try {
    parse_fixture("name x\nrank 2\ngram\n1 1\n0 1\nh20 1\n"
                  "{re:[1,0],im:[0,0]} {re:[0,0],im:[1,0]}\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("not symmetric") != std::string::npos);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }

  // malformed literal names the line
  try {
    parse_fixture("name x\nrank 2\ngram\n1 oops\n0 1\nh20 0\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }

  // wrong row width
  CHECK_THROWS_AS(parse_fixture("name x\nrank 2\ngram\n1 0 0\n0 1\nh20 0\n"),
                  parse_error);
  // partial algebra block
  CHECK_THROWS_AS(
      parse_fixture("name x\nrank 1\ngram\n1\nh20 1\n{re:[1,0],im:[0,0]}\n"
                    "unit\n1\n"),
      parse_error);
  // d must be square-free
  CHECK_THROWS_AS(parse_fixture("name x\nfield d 4\nrank 1\ngram\n1\nh20 0\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_fixture("name x\nbogus_key 1\n"), parse_error);
}

TEST_CASE("parsed fixtures agree with their builders") {
  Fixture f = builtin("f1");
  Fixture g = parse_fixture(serialize_fixture(f));
  CHECK(g.hs().h20 == f.hs().h20);
  CHECK(g.hs().gram == f.hs().gram);
}
