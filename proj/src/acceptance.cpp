#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ks/cli.hpp"
#include "ks/clifford.hpp"
#include "ks/construction.hpp"

namespace ks {

namespace {

std::vector<Rational> rand_vec(size_t n, std::mt19937_64& rng) {
  std::vector<Rational> v(n);
  for (size_t i = 0; i < n; ++i)
    v[i] = Rational(Int(std::int64_t(rng() % 19) - 9), Int(rng() % 4 + 1));
  return v;
}

// 1. Clifford relations on f1 and f2: exhaustive associativity, generator
// squares, reversal involutivity, and the adjunction identity.
bool crit_clifford_relations(std::ostream& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const char* name : {"f1", "f2"}) {
    Fixture f = builtin(name);
    CliffordAlgebra cl = clifford_build(f.gram, f.hs());
    size_t dim = cl.dim();
    for (size_t i = 0; i < dim && ok; ++i)
      for (size_t j = 0; j < dim && ok; ++j) {
        auto ij = cl.base.basis_product(i, j);
        for (size_t k = 0; k < dim && ok; ++k) {
          std::vector<Rational> ek(dim, Rational(0));
          ek[k] = 1;
          auto lhs = cl.base.multiply(ij, ek);
          std::vector<Rational> ei(dim, Rational(0));
          ei[i] = 1;
          auto rhs = cl.base.multiply(ei, cl.base.basis_product(j, k));
          if (lhs != rhs) {
            detail << "associativity broken at (" << i << "," << j << "," << k
                   << ") on " << name << "\n";
            ok = false;
          }
        }
      }
    for (size_t g = 0; g < cl.n && ok; ++g) {
      size_t idx = size_t(1) << g;
      auto sq = cl.base.basis_product(idx, idx);
      std::vector<Rational> want(dim, Rational(0));
      want[0] = -cl.generator_gram(g, g);
      if (sq != want) {
        detail << "generator square broken on " << name << "\n";
        ok = false;
      }
    }
    if (!(cl.base.involution() * cl.base.involution() ==
          Matrix<Rational>::identity(dim))) {
      detail << "reversal is not an involution on " << name << "\n";
      ok = false;
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100 && ok; ++trial) {
      std::vector<Rational> v = rand_vec(dim, rng), x = rand_vec(dim, rng),
                            y = rand_vec(dim, rng);
      Rational lhs = cl.base.pair(cl.base.multiply(v, x), y);
      Rational rhs = cl.base.pair(x, cl.base.multiply(cl.base.t(v), y));
      if (lhs != rhs) {
        detail << "adjunction broken on " << name << "\n";
        ok = false;
      }
    }
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start).count();
  if (secs >= 10.0) {
    detail << "clifford relations took " << secs << " s (budget 10 s)\n";
    ok = false;
  }
  return ok;
}

// 2. The classical complex structure e = -i(2 + eta etabar)/2 on C(f1):
// e real, e^2 = -1, i-eigenspace equal to W, float path within 1e-9.
bool crit_ks_equivalence(std::ostream& detail) {
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  KSStructure ks = ks_structure(cl);
  if (!ks.report.all_passed()) {
    for (const auto& n : ks.report.failures()) detail << "failed: " << n << "\n";
    return false;
  }
  return true;
}

// 3. Full pipeline on C(f1): exact decomposition with M = 0, g = 4, rational
// a with the isotropy and positivity certificates, validated weight-1 output.
bool crit_pipeline_f1(std::ostream& detail) {
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  Decomposition dec = decompose(cl.base);
  bool ok = dec.certificates.all_passed() && dec.M.dim() == 0 &&
            dec.W.intersect(dec.Wbar).dim() == 0;
  ConstructionResult res = build_weight1(cl.base, dec, 0);
  ok = ok && res.certificates.all_passed() && res.w1.g() == 4;
  std::vector<Rational> ta = cl.base.t(res.a);
  for (size_t i = 0; i < ta.size(); ++i) ok = ok && ta[i] == -res.a[i];
  if (!ok) {
    detail << "dim M " << dec.M.dim() << ", g " << res.w1.g() << "\n";
    for (const auto& n : dec.certificates.failures()) detail << "failed: " << n << "\n";
    for (const auto& n : res.certificates.failures()) detail << "failed: " << n << "\n";
  }
  return ok;
}

// 4. Uniqueness: the challenger Wbar is rejected (it cannot contain
// H^{2,0} H_C), W itself returns equal, and random subspaces are rejected.
bool crit_uniqueness(std::ostream& detail) {
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  Decomposition dec = decompose(cl.base);
  ConstructionResult res = build_weight1(cl.base, dec, 0);
  bool ok = true;
  if (verify_uniqueness(cl.base, res, dec.W) != ChallengerVerdict::equal) {
    detail << "W itself was not recognised\n";
    ok = false;
  }
  CertReport why;
  if (verify_uniqueness(cl.base, res, dec.Wbar, &why) !=
      ChallengerVerdict::invalid_challenger) {
    detail << "Wbar was accepted\n";
    ok = false;
  }
  std::mt19937_64 rng(11);
  size_t n = cl.base.dim();
  int tested = 0;
  while (tested < 10) {
    Matrix<ComplexQuad> gen(n, dec.W.dim());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < gen.cols(); ++j)
        gen(i, j) = ComplexQuad(RealQuad(Rational(Int(rng() % 9), 1)),
                                RealQuad(Rational(Int(rng() % 9), 1)));
    CSubspace cand = CSubspace::span(gen);
    if (cand == dec.W) continue;  // resample: that would be a valid challenger
    ++tested;
    if (verify_uniqueness(cl.base, res, cand) !=
        ChallengerVerdict::invalid_challenger) {
      detail << "random challenger " << tested << " accepted\n";
      ok = false;
    }
  }
  return ok;
}

// 5. The 16-dimensional End_K(V) example: embedding split 8 + 8, general
// construction succeeds with the exact relation and M-block positivity.
bool crit_voisin(std::ostream& detail) {
  auto start = std::chrono::steady_clock::now();
  Fixture f = builtin("voisin");
  bool ok = f.rank == 16;
  HodgeAlgebra alg = f.algebra();
  Decomposition dec = decompose(alg);
  ok = ok && dec.M.dim() == 8 && dec.W.dim() + dec.Wbar.dim() == 8;
  ConstructionResult res = general_construct(alg, dec, 0);
  ok = ok && res.certificates.all_passed();
  bool saw_relation = false, saw_positivity = false;
  for (const Certificate& c : res.certificates.items()) {
    if (c.name == "m_sigma a t(m_sigma) = a on H_sigma" && c.passed)
      saw_relation = true;
    if (c.name == "omega_a(x, I_sigma x) positive definite on H_sigma" && c.passed)
      saw_positivity = true;
  }
  ok = ok && saw_relation && saw_positivity;
  for (const SigmaBlock& sd : res.sigma_data)
    if (sd.in_M && !sd.exact) {
      detail << "M-block fell back to float certification\n";
      ok = false;
    }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start).count();
  if (secs >= 30.0) {
    detail << "voisin took " << secs << " s (budget 30 s)\n";
    ok = false;
  }
  if (!ok) {
    detail << "dim M " << dec.M.dim() << ", dim W+Wbar "
           << dec.W.dim() + dec.Wbar.dim() << "\n";
    for (const auto& n : res.certificates.failures())
      detail << "failed: " << n << "\n";
  }
  return ok;
}

// 6. Center machinery oracles: center of C(diag(1,1,-1)) = span{1, e1e2e3},
// idempotents of Q[x]/(x^2-1), and the Sturm-based totally-real tests.
bool crit_center(std::ostream& detail) {
  bool ok = true;
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  CenterReport cr = center(cl.base);
  size_t dim = cl.dim();
  Matrix<Rational> expect(dim, 2);
  expect(0, 0) = 1;
  expect(7, 1) = 1;  // e1 e2 e3
  if (!(cr.center == Subspace<Rational>::span(expect))) {
    detail << "center of C(f1) is not span{1, e1e2e3} (dim "
           << cr.center.dim() << ")\n";
    ok = false;
  }
  // Independent oracle: intersect the commutator kernels one element at a
  // time, starting from the full space.
  Subspace<Rational> oracle = Subspace<Rational>::full(dim);
  for (size_t j = 0; j < dim; ++j) {
    std::vector<Rational> ej(dim, Rational(0));
    ej[j] = 1;
    Matrix<Rational> comm = cl.base.left_mul(ej) - cl.base.right_mul(ej);
    oracle = oracle.intersect(Subspace<Rational>::span(kernel_of(comm)));
  }
  if (!(oracle == cr.center)) {
    detail << "commutator-kernel oracle disagrees with center()\n";
    ok = false;
  }

  SubAlgebra qx;  // Q[x]/(x^2 - 1) on the basis {1, x}
  qx.ambient_dim = 2;
  qx.basis = Matrix<Rational>::identity(2);
  qx.stc = Matrix<Rational>(4, 2);
  qx.stc(0, 0) = 1;  // 1*1
  qx.stc(1, 1) = 1;  // 1*x
  qx.stc(2, 1) = 1;  // x*1
  qx.stc(3, 0) = 1;  // x*x
  qx.unit = {Rational(1), Rational(0)};
  qx.has_unit = true;
  auto comps = split_commutative(qx);
  if (comps.size() != 2) {
    detail << "Q[x]/(x^2-1) split into " << comps.size() << " components\n";
    ok = false;
  } else {
    bool plus = false, minus = false;
    for (const auto& c : comps) {
      if (c.idempotent == std::vector<Rational>{Rational(1, 2), Rational(1, 2)})
        plus = true;
      if (c.idempotent == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)})
        minus = true;
    }
    if (!plus || !minus) {
      detail << "idempotents are not (1 +- x)/2\n";
      ok = false;
    }
  }

  struct Case { Poly p; bool want; int roots; };
  std::vector<Case> cases = {
      {Poly({-2, 0, 1}), true, 2},         // x^2 - 2
      {Poly({1, 0, 1}), false, 0},         // x^2 + 1
      {Poly({5, 0, -5, 0, 1}), true, 4},   // x^4 - 5x^2 + 5
  };
  for (const Case& c : cases) {
    if (totally_real(c.p) != c.want ||
        sturm_real_root_count(c.p) != c.roots) {
      detail << "totally_real oracle mismatch\n";
      ok = false;
    }
  }
  return ok;
}

// 7. Universal-property maps on C(f1) with the left regular embedding.
bool crit_universal(std::ostream& detail) {
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  Decomposition dec = decompose(cl.base);
  ConstructionResult res = build_weight1(cl.base, dec, 0);
  size_t n = cl.base.dim();
  std::vector<Matrix<Rational>> rho(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> ei(n, Rational(0));
    ei[i] = 1;
    rho[i] = cl.base.left_mul(ei);
  }
  CertReport rep = e_beta_maps(cl.base, res, res.w1, rho, {cl.base.unit()});
  if (!rep.all_passed())
    for (const auto& name : rep.failures()) detail << "failed: " << name << "\n";
  return rep.all_passed();
}

// 8. Hodge-Riemann on C(f1): induced Hodge numbers (2,4,2) and the exact
// definiteness certificates of the clifford form on the graded pieces.
bool crit_hodge_riemann(std::ostream& detail) {
  Fixture f = builtin("f1");
  CliffordAlgebra cl = clifford_build(f.gram, f.hs());
  const WeightTwoHS& ind = induced_weight2(cl);
  bool ok = ind.p() == 2 && ind.rank - 2 * ind.p() == 4;
  CertReport rep = validate_weight2(ind);
  ok = ok && rep.all_passed();
  if (!ok) {
    detail << "hodge numbers (" << ind.p() << ", " << ind.rank - 2 * ind.p()
           << ", " << ind.p() << ")\n";
    for (const auto& n : rep.failures()) detail << "failed: " << n << "\n";
  }
  return ok;
}

struct Control {
  const char* label;
  const char* text;
  int want_code;
  const char* want_substr;
};

// 9. Negative controls: a non-isotropic eta, an asymmetric gram matrix, and
// the identity involution on a matrix algebra.
bool crit_negative_controls(std::ostream& detail) {
  static const Control controls[] = {
      {"bad_eta",
       "name bad_eta\nfield d 1\nrank 3\ngram\n1 0 0\n0 1 0\n0 0 -1\n"
       "h20 1\n{re:[1,0],im:[0,0]} {re:[0,0],im:[0,0]} {re:[0,0],im:[1,0]}\n",
       2, "h20 isotropic"},
      {"asym_gram",
       "name asym_gram\nfield d 1\nrank 2\ngram\n1 1\n0 1\nh20 1\n"
       "{re:[1,0],im:[0,0]} {re:[0,0],im:[1,0]}\n",
       3, "not symmetric"},
      {"t_identity",
       "name t_identity\nfield d 1\nrank 4\ngram\n1 0 0 0\n0 1 0 0\n"
       "0 0 -1 0\n0 0 0 -1\nh20 1\n{re:[1,0],im:[0,0]} {re:[0,0],im:[1,0]} "
       "{re:[0,0],im:[0,0]} {re:[0,0],im:[0,0]}\n"
       "structure_constants 8\n0 0 0 1\n0 1 1 1\n1 2 0 1\n1 3 1 1\n"
       "2 0 2 1\n2 1 3 1\n3 2 2 1\n3 3 3 1\nunit\n1 0 0 1\n"
       "involution\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n",
       2, "anti-homomorphism"},
  };
  bool ok = true;
  namespace fs = std::filesystem;
  for (const Control& c : controls) {
    fs::path p = fs::temp_directory_path() /
                 (std::string("ksgen_control_") + c.label + ".txt");
    std::ofstream(p) << c.text;
    std::ostringstream out;
    int code = run_command({"validate", p.string()}, out);
    fs::remove(p);
    if (code != c.want_code) {
      detail << c.label << ": exit " << code << ", expected " << c.want_code
             << "\n";
      ok = false;
    }
    if (out.str().find(c.want_substr) == std::string::npos) {
      detail << c.label << ": report does not name '" << c.want_substr
             << "'\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

bool acceptance_suite(std::ostream& out, std::uint64_t seed) {
  (void)seed;  // the suite pins its own seeds for reproducibility
  struct Criterion {
    const char* name;
    bool (*run)(std::ostream&);
  };
  const Criterion criteria[] = {
      {"clifford relations exact on f1 and f2 (< 10 s)", crit_clifford_relations},
      {"classical complex structure e = -i(2+eta etabar)/2 matches W on f1",
       crit_ks_equivalence},
      {"weight-1 pipeline on C(f1): M = 0, g = 4, certified polarization",
       crit_pipeline_f1},
      {"uniqueness of W against Wbar and random challengers", crit_uniqueness},
      {"general construction on the 16-dim End_K(V) example (< 30 s)",
       crit_voisin},
      {"center machinery oracles", crit_center},
      {"universal-property maps on the left regular embedding", crit_universal},
      {"hodge-riemann grading on C(f1): numbers (2,4,2), exact definiteness",
       crit_hodge_riemann},
      {"negative controls produce the documented errors", crit_negative_controls},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what() << "\n";
    }
    out << (pass ? "PASS " : "FAIL ") << c.name << "\n";
    if (!pass) {
      std::istringstream lines(detail.str());
      std::string l;
      while (std::getline(lines, l)) out << "  " << l << "\n";
    }
    all = all && pass;
  }
  return all;
}

}  // namespace ks
