#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ks/cli.hpp"

using namespace ks;

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = run_command(args, out);
  return {code, out.str()};
}

std::string temp_fixture(const std::string& label, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / ("ks_test_" + label + ".txt");
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("validate on built-ins") {
  auto [code, out] = run({"validate", "f1"});
  CHECK(code == 0);
  CHECK(out.find("PASS weight-2: gram symmetric") != std::string::npos);
  CHECK(run({"validate", "f2"}).first == 0);
  CHECK(run({"validate", "voisin"}).first == 0);
}

TEST_CASE("construct f1 --clifford reports g = 4 and the canonical a") {
  auto [code, out] = run({"construct", "f1", "--clifford"});
  CHECK(code == 0);
  CHECK(out.find("g = 4") != std::string::npos);
  CHECK(out.find("a = 4*e{1}e{2}") != std::string::npos);
  CHECK(out.find("dim M = 0") != std::string::npos);
}

TEST_CASE("construct voisin reports the 8 + 8 split") {
  auto [code, out] = run({"construct", "voisin"});
  CHECK(code == 0);
  CHECK(out.find("dim M = 8") != std::string::npos);
  CHECK(out.find("dim W (+) Wbar = 8") != std::string::npos);
  CHECK(out.find("blocks polarized: 2") != std::string::npos);
  CHECK(out.find("g = 8") != std::string::npos);
}

TEST_CASE("clifford and center subcommands") {
  auto [code, out] = run({"clifford", "f2"});
  CHECK(code == 0);
  CHECK(out.find("dimension 16") != std::string::npos);
  CHECK(out.find("induced Hodge numbers (4, 8, 4)") != std::string::npos);

  auto [ccode, cout_] = run({"center", "voisin"});
  CHECK(ccode == 0);
  CHECK(cout_.find("dim K = 4") != std::string::npos);
  CHECK(cout_.find("dim K+ = 2") != std::string::npos);
}

TEST_CASE("universal subcommand") {
  auto [code, out] = run({"universal", "f1"});
  CHECK(code == 0);
  CHECK(out.find("joint map injective on H") != std::string::npos);
}

TEST_CASE("reports are deterministic for identical argv and seed") {
  auto a = run({"construct", "voisin", "--seed", "3"});
  auto b = run({"construct", "voisin", "--seed", "3"});
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("seed is embedded in the report") {
  auto [code, out] = run({"construct", "f1", "--clifford", "--seed", "5"});
  CHECK(code == 0);
  CHECK(out.find("seed 5") != std::string::npos);
}

TEST_CASE("exit code 3 on parse and config problems") {
  CHECK(run({"frobnicate"}).first == 3);
  CHECK(run({"validate"}).first == 3);
  CHECK(run({"validate", "/no/such/file"}).first == 3);
  CHECK(run({"construct", "f1"}).first == 3);  // lattice fixture, no algebra
  std::string bad = temp_fixture(
      "asym", "name asym\nfield d 1\nrank 2\ngram\n1 1\n0 1\nh20 1\n"
              "{re:[1,0],im:[0,0]} {re:[0,0],im:[1,0]}\n");
  auto [code, out] = run({"validate", bad});
  CHECK(code == 3);
  CHECK(out.find("parse error") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("exit code 2 on validation failures") {
  std::string bad = temp_fixture(
      "badeta", "name bad_eta\nfield d 1\nrank 3\ngram\n1 0 0\n0 1 0\n0 0 -1\n"
                "h20 1\n{re:[1,0],im:[0,0]} {re:[0,0],im:[0,0]} "
                "{re:[0,0],im:[1,0]}\n");
  auto [code, out] = run({"validate", bad});
  CHECK(code == 2);
  CHECK(out.find("FAIL weight-2: h20 isotropic") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("help exits cleanly") {
  auto [code, out] = run({"--help"});
  CHECK(code == 0);
  CHECK(out.find("Subcommands") != std::string::npos);
}

TEST_CASE("selftest passes end to end") {
  auto [code, out] = run({"selftest"});
  CHECK(code == 0);
  CHECK(out.find("FAIL") == std::string::npos);
}
