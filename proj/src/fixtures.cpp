#include "ks/fixtures.hpp"

#include <sstream>

#include "ks/hodge.hpp"

namespace ks {

WeightTwoHS Fixture::hs() const {
  WeightTwoHS out;
  out.rank = rank;
  out.gram = gram;
  out.h20 = CSubspace::span_vectors(rank, h20);
  return out;
}

HodgeAlgebra Fixture::algebra() const {
  if (!has_algebra)
    throw config_error("fixture '" + name + "' carries no algebra block");
  Matrix<Rational> stc(rank * rank, rank);
  for (const auto& [i, j, k, v] : stc_triples) {
    if (i >= rank || j >= rank || k >= rank)
      throw config_error("structure constant index out of range");
    stc(i * rank + j, k) = v;
  }
  return HodgeAlgebra(hs(), stc, unit, involution);
}

// ---------------------------------------------------------------------------
// Parsing / serialization
// ---------------------------------------------------------------------------

namespace {

struct LineReader {
  std::vector<std::string> lines;
  size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines.push_back(l);
  }
  bool done() {
    while (pos < lines.size() && blank(lines[pos])) ++pos;
    return pos >= lines.size();
  }
  static bool blank(const std::string& l) {
    return l.find_first_not_of(" \t\r") == std::string::npos;
  }
  std::string next(const std::string& what) {
    if (done()) throw parse_error("unexpected end of fixture, expected " + what);
    return lines[pos++];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("line " + std::to_string(pos) + ": " + msg);
  }
};

std::vector<std::string> tokens(const std::string& l) {
  std::istringstream is(l);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::vector<Rational> parse_rational_row(LineReader& r, size_t n,
                                         const std::string& key) {
  auto tk = tokens(r.next(key + " row"));
  if (tk.size() != n) r.fail(key + " row has " + std::to_string(tk.size()) +
                             " entries, expected " + std::to_string(n));
  std::vector<Rational> row(n);
  for (size_t i = 0; i < n; ++i) {
    try {
      row[i] = parse_rational(tk[i]);
    } catch (const parse_error& e) {
      r.fail(key + ": " + e.what());
    }
  }
  return row;
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  LineReader r(text);
  Fixture f;
  bool saw_rank = false, saw_gram = false, saw_h20 = false, saw_name = false;
  bool saw_unit = false, saw_invol = false, saw_stc = false;
  while (!r.done()) {
    auto tk = tokens(r.next("key"));
    const std::string& key = tk[0];
    if (key == "name") {
      if (tk.size() != 2) r.fail("name needs one value");
      f.name = tk[1];
      saw_name = true;
    } else if (key == "field") {
      if (tk.size() != 3 || tk[1] != "d") r.fail("expected 'field d <int>'");
      f.d = std::stoll(tk[2]);
      if (f.d < 1) r.fail("d must be positive");
      for (std::int64_t q = 2; q * q <= f.d; ++q)
        if (f.d % (q * q) == 0) r.fail("d must be square-free");
    } else if (key == "rank") {
      if (tk.size() != 2) r.fail("rank needs one value");
      f.rank = std::stoul(tk[1]);
      saw_rank = true;
    } else if (key == "gram") {
      if (!saw_rank) r.fail("rank must precede gram");
      f.gram = Matrix<Rational>(f.rank, f.rank);
      for (size_t i = 0; i < f.rank; ++i) {
        auto row = parse_rational_row(r, f.rank, "gram");
        for (size_t j = 0; j < f.rank; ++j) f.gram(i, j) = row[j];
      }
      if (!(f.gram.transpose() == f.gram)) r.fail("gram is not symmetric");
      saw_gram = true;
    } else if (key == "h20") {
      if (!saw_rank) r.fail("rank must precede h20");
      if (tk.size() != 2) r.fail("h20 needs a vector count");
      size_t p = std::stoul(tk[1]);
      for (size_t v = 0; v < p; ++v) {
        auto row = tokens(r.next("h20 row"));
        if (row.size() != f.rank) r.fail("h20 row length mismatch");
        std::vector<ComplexQuad> vec(f.rank);
        for (size_t i = 0; i < f.rank; ++i) {
          try {
            vec[i] = parse_complex_quad(row[i], f.d);
          } catch (const parse_error& e) {
            r.fail(std::string("h20: ") + e.what());
          }
        }
        f.h20.push_back(std::move(vec));
      }
      saw_h20 = true;
    } else if (key == "structure_constants") {
      if (!saw_rank) r.fail("rank must precede structure_constants");
      if (tk.size() != 2) r.fail("structure_constants needs a triple count");
      size_t m = std::stoul(tk[1]);
      for (size_t t = 0; t < m; ++t) {
        auto row = tokens(r.next("structure constant"));
        if (row.size() != 4) r.fail("expected 'i j k value'");
        f.stc_triples.emplace_back(std::stoul(row[0]), std::stoul(row[1]),
                                   std::stoul(row[2]), parse_rational(row[3]));
      }
      saw_stc = true;
    } else if (key == "unit") {
      if (!saw_rank) r.fail("rank must precede unit");
      f.unit = parse_rational_row(r, f.rank, "unit");
      saw_unit = true;
    } else if (key == "involution") {
      if (!saw_rank) r.fail("rank must precede involution");
      f.involution = Matrix<Rational>(f.rank, f.rank);
      for (size_t i = 0; i < f.rank; ++i) {
        auto row = parse_rational_row(r, f.rank, "involution");
        for (size_t j = 0; j < f.rank; ++j) f.involution(i, j) = row[j];
      }
      saw_invol = true;
    } else if (key == "options") {
      if (tk.size() != 2) r.fail("options needs an entry count");
      size_t m = std::stoul(tk[1]);
      for (size_t t = 0; t < m; ++t) {
        auto row = tokens(r.next("option"));
        if (row.size() != 2) r.fail("expected 'key value'");
        f.options[row[0]] = row[1];
      }
    } else {
      r.fail("unknown key '" + key + "'");
    }
  }
  if (!saw_name) throw parse_error("missing key: name");
  if (!saw_rank) throw parse_error("missing key: rank");
  if (!saw_gram) throw parse_error("missing key: gram");
  if (!saw_h20) throw parse_error("missing key: h20");
  f.has_algebra = saw_stc && saw_unit && saw_invol;
  if (saw_stc != saw_unit || saw_stc != saw_invol)
    throw parse_error(
        "structure_constants, unit and involution must appear together");
  return f;
}

std::string serialize_fixture(const Fixture& f) {
  std::ostringstream os;
  os << "name " << f.name << "\n";
  os << "field d " << f.d << "\n";
  os << "rank " << f.rank << "\n";
  os << "gram\n";
  for (size_t i = 0; i < f.rank; ++i) {
    for (size_t j = 0; j < f.rank; ++j)
      os << (j ? " " : "") << to_string(f.gram(i, j));
    os << "\n";
  }
  os << "h20 " << f.h20.size() << "\n";
  for (const auto& v : f.h20) {
    for (size_t j = 0; j < f.rank; ++j) os << (j ? " " : "") << to_string(v[j]);
    os << "\n";
  }
  if (f.has_algebra) {
    os << "structure_constants " << f.stc_triples.size() << "\n";
    for (const auto& [i, j, k, val] : f.stc_triples)
      os << i << " " << j << " " << k << " " << to_string(val) << "\n";
    os << "unit\n";
    for (size_t j = 0; j < f.rank; ++j)
      os << (j ? " " : "") << to_string(f.unit[j]);
    os << "\n";
    os << "involution\n";
    for (size_t i = 0; i < f.rank; ++i) {
      for (size_t j = 0; j < f.rank; ++j)
        os << (j ? " " : "") << to_string(f.involution(i, j));
      os << "\n";
    }
  }
  if (!f.options.empty()) {
    os << "options " << f.options.size() << "\n";
    for (const auto& [k, v] : f.options) os << k << " " << v << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Built-in fixtures
// ---------------------------------------------------------------------------

namespace {

Fixture clifford_lattice_fixture(const std::string& name, size_t n) {
  Fixture f;
  f.name = name;
  f.d = 1;
  f.rank = n;
  f.gram = Matrix<Rational>(n, n);
  f.gram(0, 0) = 1;
  f.gram(1, 1) = 1;
  for (size_t i = 2; i < n; ++i) f.gram(i, i) = -1;
  std::vector<ComplexQuad> eta(n);
  eta[0] = ComplexQuad(1);
  eta[1] = ComplexQuad::i();
  f.h20.push_back(std::move(eta));
  return f;
}

// K = Q(sqrt 2, i) = Q[x,y]/(x^2-2, y^2+1), basis {1, x, y, xy}.
using KElt = std::array<Rational, 4>;

KElt kmul(const KElt& a, const KElt& b) {
  KElt out{Rational(0), Rational(0), Rational(0), Rational(0)};
  auto acc = [&](size_t i, size_t j, const Rational& f) {
    // product of basis elements i*j expressed on the basis
    static const int tab[4][4][2] = {
        // {target index, integer factor}
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},   // 1 * _
        {{1, 1}, {0, 2}, {3, 1}, {2, 2}},   // x * _
        {{2, 1}, {3, 1}, {0, -1}, {1, -1}}, // y * _
        {{3, 1}, {2, 2}, {1, -1}, {0, -2}}, // xy * _
    };
    out[tab[i][j][0]] += f * tab[i][j][1];
  };
  for (size_t i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < 4; ++j)
      if (!b[j].is_zero()) acc(i, j, a[i] * b[j]);
  }
  return out;
}

Fixture voisin_fixture() {
  // V = K^2 as a Q-vector space of dimension 8, coordinate f*4 + b with
  // f the K-factor and b the K-basis index.
  constexpr size_t nv = 8;

  // omega = tr_{K+/Q} Omega_1 + tr_{K+/Q} x Omega_2 with Omega the
  // K+-bilinear skew form on K = K+ (+) K+ y with Omega(1, y) = 1.
  // For alpha = A + B y: Omega(alpha, beta) = A_alpha B_beta - B_alpha A_beta.
  // K+ components of the K-basis: 1 -> (A,B) = (1,0); x -> (x,0);
  // y -> (0,1); xy -> (0,x).
  auto kp_mul = [](const std::array<Rational, 2>& u,
                   const std::array<Rational, 2>& v) {
    return std::array<Rational, 2>{u[0] * v[0] + 2 * u[1] * v[1],
                                   u[0] * v[1] + u[1] * v[0]};
  };
  std::array<std::array<Rational, 2>, 4> acomp{{{Rational(1), Rational(0)},
                                                {Rational(0), Rational(1)},
                                                {Rational(0), Rational(0)},
                                                {Rational(0), Rational(0)}}};
  std::array<std::array<Rational, 2>, 4> bcomp{{{Rational(0), Rational(0)},
                                                {Rational(0), Rational(0)},
                                                {Rational(1), Rational(0)},
                                                {Rational(0), Rational(1)}}};
  auto omega_k = [&](size_t b, size_t c) {
    std::array<Rational, 2> t1 = kp_mul(acomp[b], bcomp[c]);
    std::array<Rational, 2> t2 = kp_mul(bcomp[b], acomp[c]);
    return std::array<Rational, 2>{t1[0] - t2[0], t1[1] - t2[1]};
  };
  // Traces on K+ = Q(sqrt 2): tr(p + q x) = 2p, tr(x (p + q x)) = 4q.
  Matrix<Rational> omega8(nv, nv);
  for (size_t b = 0; b < 4; ++b)
    for (size_t c = 0; c < 4; ++c) {
      auto o = omega_k(b, c);
      omega8(b, c) = 2 * o[0];           // factor 1, weight tr
      omega8(4 + b, 4 + c) = 4 * o[1];   // factor 2, weight tr(x .)
    }

  // Complex structure: I = y on factor 1, (sqrt2 / 2) x y on factor 2.
  // y and xy as multiplication operators on the K-basis:
  Matrix<Rational> y4(4, 4), xy4(4, 4);
  y4(2, 0) = 1; y4(3, 1) = 1; y4(0, 2) = -1; y4(1, 3) = -1;
  xy4(3, 0) = 1; xy4(2, 1) = 2; xy4(1, 2) = -1; xy4(0, 3) = -2;
  Matrix<RealQuad> i8(nv, nv);
  RealQuad half_sqrt2(Rational(0), Rational(1, 2), 2);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      if (!y4(i, j).is_zero()) i8(i, j) = RealQuad(y4(i, j));
      if (!xy4(i, j).is_zero()) i8(4 + i, 4 + j) = half_sqrt2 * RealQuad(xy4(i, j));
    }

  // Weight-1 structure on V: h10 = the +i eigenspace of I.
  Matrix<ComplexQuad> ic = complexify(i8);
  for (size_t i = 0; i < nv; ++i) ic(i, i) -= ComplexQuad::i();
  WeightOneHS w1v;
  w1v.rank = nv;
  w1v.omega = omega8;
  w1v.h10 = CSubspace::span(kernel_of(ic));

  // The induced weight-2 structure on End(V), then restricted to
  // H = End_K(V), spanned by k_b E_{kl} at index b*4 + k*2 + l.
  WeightTwoHS end_hs = induced_end_weight2(w1v);
  std::vector<Matrix<Rational>> hmat(16);
  for (size_t b = 0; b < 4; ++b)
    for (size_t k = 0; k < 2; ++k)
      for (size_t l = 0; l < 2; ++l) {
        Matrix<Rational> m(nv, nv);
        for (size_t c = 0; c < 4; ++c) {
          KElt kb{}, kc{};
          kb[b] = 1;
          kc[c] = 1;
          KElt prod = kmul(kb, kc);
          for (size_t i = 0; i < 4; ++i) m(k * 4 + i, l * 4 + c) = prod[i];
        }
        hmat[b * 4 + k * 2 + l] = std::move(m);
      }

  Matrix<Rational> b64(64, 16);
  for (size_t j = 0; j < 16; ++j) {
    auto v = vectorize(hmat[j]);
    for (size_t i = 0; i < 64; ++i) b64(i, j) = v[i];
  }
  // Coordinate projector onto the basis: P b64 = id.
  Matrix<Rational> proj = inverse(b64.transpose() * b64) * b64.transpose();

  Fixture f;
  f.name = "voisin";
  f.d = 2;
  f.rank = 16;

  // Structure constants from composition; involution = omega-adjoint.
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) {
      auto coords = proj.apply(vectorize(hmat[i] * hmat[j]));
      for (size_t k = 0; k < 16; ++k)
        if (!coords[k].is_zero()) f.stc_triples.emplace_back(i, j, k, coords[k]);
    }
  f.unit = proj.apply(vectorize(Matrix<Rational>::identity(nv)));
  f.involution = Matrix<Rational>(16, 16);
  std::vector<Matrix<Rational>> adj(16);
  for (size_t j = 0; j < 16; ++j) {
    adj[j] = omega_adjoint(omega8, hmat[j]);
    auto coords = proj.apply(vectorize(adj[j]));
    // Verify closure under the adjoint before trusting the coordinates.
    Matrix<Rational> back(nv, nv);
    for (size_t k = 0; k < 16; ++k)
      if (!coords[k].is_zero()) back = back + coords[k] * hmat[k];
    if (!(back == adj[j]))
      throw math_error("End_K(V) is not stable under the omega-adjoint");
    for (size_t i = 0; i < 16; ++i) f.involution(i, j) = coords[i];
  }

  // Gram <f, g> = -Trace(f t(g)).
  f.gram = Matrix<Rational>(16, 16);
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) {
      Matrix<Rational> prod = hmat[i] * adj[j];
      Rational tr(0);
      for (size_t k = 0; k < nv; ++k) tr += prod(k, k);
      f.gram(i, j) = -tr;
    }

  // H^{2,0} of H: intersection of H_C with the End-level (2,0) part,
  // re-expressed in the 16-dimensional coordinates.
  CSubspace hc = CSubspace::span(complexify(b64));
  CSubspace inter = end_hs.h20.intersect(hc);
  Matrix<ComplexQuad> proj_c = complexify(proj);
  for (size_t j = 0; j < inter.dim(); ++j)
    f.h20.push_back(proj_c.apply(inter.basis().col(j)));

  f.has_algebra = true;
  return f;
}

}  // namespace

Fixture builtin(const std::string& name) {
  if (name == "f1") return clifford_lattice_fixture("f1", 3);
  if (name == "f2") return clifford_lattice_fixture("f2", 4);
  if (name == "voisin") {
    static const Fixture cached = voisin_fixture();
    return cached;
  }
  throw config_error("unknown built-in fixture '" + name + "'");
}

}  // namespace ks
