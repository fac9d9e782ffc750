#include "ks/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "ks/clifford.hpp"
#include "ks/construction.hpp"

namespace ks {

Fixture load_fixture(const std::string& arg) {
  if (arg == "f1" || arg == "f2" || arg == "voisin") return builtin(arg);
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(arg);
    if (!in) throw config_error("cannot open fixture file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_fixture(text);
}

namespace {

constexpr int kOk = 0;
constexpr int kConstructionFailure = 1;
constexpr int kValidationFailure = 2;
constexpr int kConfigFailure = 3;

int cmd_validate(const Fixture& f, std::ostream& out) {
  out << "fixture " << f.name << " (rank " << f.rank << ", d " << f.d << ")\n";
  CertReport rep;
  rep.merge(validate_weight2(f.hs()), "weight-2: ");
  if (f.has_algebra) rep.merge(validate_algebra(f.algebra()), "algebra: ");
  rep.print(out);
  return rep.all_passed() ? kOk : kValidationFailure;
}

int cmd_clifford(const Fixture& f, std::ostream& out) {
  if (f.has_algebra)
    throw config_error("clifford expects a lattice fixture, not an algebra");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  const WeightTwoHS& ind = induced_weight2(cl);
  out << "fixture " << f.name << ": C(H) has dimension " << cl.dim() << "\n";
  out << "induced Hodge numbers (" << ind.p() << ", "
      << ind.rank - 2 * ind.p() << ", " << ind.p() << ")\n";
  CertReport rep;
  rep.merge(validate_weight2(ind), "induced weight-2: ");
  rep.merge(validate_algebra(cl.base), "algebra: ");
  KSStructure ks = ks_structure(cl);
  rep.merge(ks.report, "complex structure: ");
  rep.print(out);
  return rep.all_passed() ? kOk : kConstructionFailure;
}

int cmd_construct(const Fixture& f, bool via_clifford, std::uint64_t seed,
                  std::ostream& out) {
  HodgeAlgebra alg;
  CliffordAlgebra cl;
  if (via_clifford) {
    if (f.has_algebra)
      throw config_error("--clifford expects a lattice fixture");
    cl = clifford_build(f.gram, f.hs());
    alg = cl.base;
  } else {
    alg = f.algebra();
  }
  out << "fixture " << f.name << ": algebra dimension " << alg.dim() << "\n";
  Decomposition dec = decompose(alg);
  out << "dim W = " << dec.W.dim() << ", dim W (+) Wbar = "
      << dec.W.dim() + dec.Wbar.dim() << ", dim M = " << dec.M.dim() << "\n";
  dec.certificates.print(out);
  ConstructionResult res = general_construct(alg, dec, seed);
  res.certificates.print(out);
  out << "g = " << res.w1.g() << "\n";
  if (via_clifford) {
    out << "a = " << element_name(res.a) << "\n";
  } else {
    out << "a =";
    for (const Rational& c : res.a) out << " " << to_string(c);
    out << "\n";
  }
  if (!res.sigma_data.empty())
    out << "blocks polarized: " << res.sigma_data.size() << "\n";
  return res.certificates.all_passed() ? kOk : kConstructionFailure;
}

int cmd_center(const Fixture& f, std::ostream& out) {
  HodgeAlgebra alg = f.algebra();
  CenterReport cr = center(alg);
  out << "fixture " << f.name << ": dim K = " << cr.center.dim()
      << ", dim K+ = " << cr.t_invariant.dim() << "\n";
  for (size_t i = 0; i < cr.components.size(); ++i) {
    const CenterComponent& c = cr.components[i];
    out << "component " << i << ": dim " << c.component.dim();
    if (c.is_field)
      out << ", field, minimal polynomial degree " << c.minimal_poly.degree()
          << (c.totally_real_field ? ", totally real" : ", not totally real");
    out << "\n";
  }
  return kOk;
}

int cmd_universal(const Fixture& f, const std::string& target_arg,
                  std::uint64_t seed, std::ostream& out) {
  HodgeAlgebra alg;
  if (f.has_algebra) {
    alg = f.algebra();
  } else {
    alg = clifford_build(f.gram, f.hs()).base;
  }
  Decomposition dec = decompose(alg);
  ConstructionResult res = general_construct(alg, dec, seed);

  // Target B: by default the construction's own weight-1 structure, with the
  // left regular embedding rho(h) = (x -> hx) and beta = 1.
  WeightOneHS b = res.w1;
  if (!target_arg.empty() && target_arg != "self") {
    Fixture ft = load_fixture(target_arg);
    HodgeAlgebra tb = ft.has_algebra
                          ? ft.algebra()
                          : clifford_build(ft.gram, ft.hs()).base;
    if (tb.dim() != alg.dim())
      throw config_error(
          "universal: target dimension must match for the left regular "
          "embedding");
    b = general_construct(tb, decompose(tb), seed).w1;
  }
  std::vector<Matrix<Rational>> rho(alg.dim());
  for (size_t i = 0; i < alg.dim(); ++i) {
    std::vector<Rational> ei(alg.dim(), Rational(0));
    ei[i] = 1;
    rho[i] = alg.left_mul(ei);
  }
  CertReport rep = e_beta_maps(alg, res, b, rho, {alg.unit()});
  out << "fixture " << f.name << ": universal-property maps (left regular, "
      << "beta = 1)\n";
  rep.print(out);
  return rep.all_passed() ? kOk : kConstructionFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact weight-2 to weight-1 Hodge structure construction"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol = 1e-9;
  app.add_option("--seed", seed, "resampling seed (embedded in reports)");
  app.add_option("--tol", tol, "float backend tolerance");

  std::string fx, fx_target;
  bool via_clifford = false;

  // Let trailing global flags (--seed, --tol) after a subcommand reach the
  // parent app.
  CLI::App* validate = app.add_subcommand("validate", "Hodge + algebra validation");
  validate->fallthrough();
  validate->add_option("fixture", fx, "fixture name, path or -")->required();
  CLI::App* clifford =
      app.add_subcommand("clifford", "build C(H) with grading and complex structure");
  clifford->add_option("fixture", fx, "fixture name, path or -")->required();
  clifford->fallthrough();
  CLI::App* construct =
      app.add_subcommand("construct", "decompose and build the weight-1 structure");
  construct->add_option("fixture", fx, "fixture name, path or -")->required();
  construct->add_flag("--clifford", via_clifford, "run on C(H) of a lattice fixture");
  construct->fallthrough();
  CLI::App* center_cmd = app.add_subcommand("center", "center and K+ report");
  center_cmd->add_option("fixture", fx, "fixture name, path or -")->required();
  center_cmd->fallthrough();
  CLI::App* universal =
      app.add_subcommand("universal", "universal-property maps e_beta");
  universal->add_option("fixture", fx, "fixture name, path or -")->required();
  universal->add_option("target", fx_target, "target fixture (default: self)");
  universal->fallthrough();
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->fallthrough();

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    out << app.help();
    if (e.get_exit_code() != 0) out << "error: " << e.what() << "\n";
    return e.get_exit_code() == 0 ? kOk : kConfigFailure;
  }

  double saved_tol = float_tol();
  float_tol() = tol;
  int code = kOk;
  try {
    if (selftest->parsed()) {
      code = acceptance_suite(out, seed) ? kOk : kConstructionFailure;
    } else {
      Fixture f = load_fixture(fx);
      if (validate->parsed()) code = cmd_validate(f, out);
      if (clifford->parsed()) code = cmd_clifford(f, out);
      if (construct->parsed()) code = cmd_construct(f, via_clifford, seed, out);
      if (center_cmd->parsed()) code = cmd_center(f, out);
      if (universal->parsed()) code = cmd_universal(f, fx_target, seed, out);
    }
  } catch (const parse_error& e) {
    out << "parse error: " << e.what() << "\n";
    code = kConfigFailure;
  } catch (const config_error& e) {
    out << "config error: " << e.what() << "\n";
    code = kConfigFailure;
  } catch (const certificate_error& e) {
    out << "error: " << e.what() << "\n";
    code = validate->parsed() ? kValidationFailure : kConstructionFailure;
  } catch (const math_error& e) {
    out << "error: " << e.what() << "\n";
    code = validate->parsed() ? kValidationFailure : kConstructionFailure;
  }
  float_tol() = saved_tol;
  return code;
}

}  // namespace ks
