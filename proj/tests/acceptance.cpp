// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Everything is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "censym/algebra.hpp"
#include "censym/cellular.hpp"
#include "censym/centro.hpp"
#include "censym/frobenius.hpp"
#include "censym/structure.hpp"
#include "censym/suite.hpp"
#include "oracle.hpp"

using namespace censym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t cases = 0;

  void require(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Report& r, const std::string& what) {
    ++cases;
    if (!r.passed() && ok) {
      ok = false;
      detail = what + ": " + r.to_text();
    }
  }
};

const std::vector<std::string> kGrid{"int", "rat", "zmod:4", "gf:2", "gf:5", "c2:int"};

std::string at(const std::string& ring, std::size_t n) { return ring + " n=" + std::to_string(n); }

Outcome closure() {
  Outcome o;
  std::mt19937_64 rng(frobenius::kDefaultSeed);
  for (const auto& lit : kGrid) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 8; ++n) {
      const Matrix c = Matrix::exchange(r, n);
      const auto basis = canonical_basis(r, n);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const Matrix p = a.matrix.matrix() * b.matrix.matrix();
          o.require(c * p * c == p, at(lit, n) + " basis product " + a.index.label() + " " + b.index.label());
        }
      for (int t = 0; t < 100; ++t) {
        std::vector<RingElt> u, v;
        for (std::size_t k = 0; k < basis.size(); ++k) {
          u.push_back(r.random(rng));
          v.push_back(r.random(rng));
        }
        const Matrix p = from_coords(r, n, u).matrix() * from_coords(r, n, v).matrix();
        o.require(c * p * c == p, at(lit, n) + " random product");
      }
    }
  }
  return o;
}

Outcome rank() {
  Outcome o;
  std::mt19937_64 rng(frobenius::kDefaultSeed);
  for (const char* lit : {"int", "rat"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 12; ++n) {
      const std::size_t expected = (n * n + 1) / 2;
      o.require(canonical_basis(r, n).size() == expected, at(lit, n) + " basis size");
      for (int t = 0; t < 100; ++t) {
        std::vector<RingElt> v;
        for (std::size_t k = 0; k < expected; ++k) v.push_back(r.random(rng));
        o.require(coords(from_coords(r, n, v)) == v, at(lit, n) + " round trip");
      }
    }
  }
  return o;
}

Outcome structure_constants_formula() {
  Outcome o;
  const Ring z = Ring::integers();
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto t = structure_constants(z, n);
    const auto ref = oracle::structure_constants(n);
    const auto idx = canonical_indices(n);
    for (std::size_t u = 0; u < idx.size(); ++u)
      for (std::size_t v = 0; v < idx.size(); ++v) {
        for (std::size_t w = 0; w < idx.size(); ++w)
          o.require(t->at(u, v, w) == z.from_int(ref[u][v][w]), at("int", n) + " reference tensor");
        const auto terms = closed_form_product(idx[u], idx[v]);
        if (!terms) continue;
        std::vector<long> expect(idx.size(), 0);
        for (const auto& term : *terms) expect[basis_position(term.index)] += term.coeff;
        for (std::size_t w = 0; w < idx.size(); ++w)
          o.require(t->at(u, v, w) == z.from_int(expect[w]),
                    at("int", n) + " formula " + idx[u].label() + " * " + idx[v].label());
      }
  }
  const auto s3 = algebra_of_censym(z, 3);
  auto product = [&](std::size_t i, std::size_t j, std::size_t p, std::size_t q) {
    return s3->format(s3->multiply(structure::f_vector(z, 3, i, j), structure::f_vector(z, 3, p, q)));
  };
  o.require(product(1, 2, 2, 1) == "f1_1 + f1_3", "f12 f21 = " + product(1, 2, 2, 1));
  o.require(product(2, 1, 1, 2) == "2*f2_2", "f21 f12 = " + product(2, 1, 1, 2));
  o.require(product(1, 3, 1, 3) == "f1_1", "f13 f13 = " + product(1, 3, 1, 3));
  return o;
}

Outcome frobenius_system() {
  Outcome o;
  for (const auto& lit : kGrid)
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto sys = frobenius::FrobeniusSystem::make(Ring::parse(lit), n);
      o.require(frobenius::verify_frobenius_system(sys), at(lit, n));
    }
  return o;
}

Outcome separability() {
  Outcome o;
  for (const auto& lit : {"int", "rat", "zmod:4", "gf:2", "gf:3", "gf:5", "gf:7", "zmod:9", "c2:int"})
    for (std::size_t n = 1; n <= 8; ++n) {
      const Ring r = Ring::parse(lit);
      const auto sys = frobenius::FrobeniusSystem::make(r, n);
      Matrix sum(r, n);
      for (std::size_t i = 0; i < n; ++i) sum = sum + sys.x[i] * sys.y[i];
      o.require(sum == Matrix::identity(r, n), at(lit, n) + " sum x_i y_i");
      o.require(frobenius::separability_check(sys), at(lit, n));
    }
  return o;
}

Outcome split() {
  Outcome o;
  for (const char* lit : {"rat", "gf:3", "gf:7", "zmod:9"}) {
    const Ring r = Ring::parse(lit);
    const auto half = invert_two(r);
    o.require(half && (r.from_int(2) * *half).is_one(), std::string(lit) + " 2^-1");
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto sys = frobenius::FrobeniusSystem::make(r, n);
      const Report rep = frobenius::splitness_check(sys);
      o.require(rep, at(lit, n));
      if (n >= 2 && half) {
        const Matrix d = *half * Matrix::identity(r, n);
        o.require(frobenius::centralizer_membership(sys, d), at(lit, n) + " d central");
        o.require(sys.E(d).matrix() == Matrix::identity(r, n), at(lit, n) + " E(d) = 1");
        o.require(rep.witness.value("d", "") == half->to_string() + "*1", at(lit, n) + " witness d");
      }
    }
  }
  for (const char* lit : {"int", "gf:2"})
    for (std::size_t n = 2; n <= 8; ++n) {
      const Report rep = frobenius::splitness_check(frobenius::FrobeniusSystem::make(Ring::parse(lit), n));
      o.require(rep.verdict == Verdict::unknown, at(lit, n) + " verdict " + to_string(rep.verdict));
    }
  return o;
}

Outcome iso_even() {
  Outcome o;
  for (const char* lit : {"int", "gf:2", "rat"})
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto w = structure::iso_even(Ring::parse(lit), m);
      for (auto p : {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible})
        o.require(w.claims.count(p) == 1, at(lit, 2 * m) + " claims " + to_string(p));
      o.require(check_witness(w), at(lit, 2 * m));
    }
  return o;
}

Outcome odd_quotient() {
  Outcome o;
  for (const char* lit : {"int", "gf:2", "rat"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t m = 1; m <= 3; ++m) {
      const std::size_t n = 2 * m + 1;
      const auto q = structure::iso_odd_quotient(r, m);
      o.require(q.quotient.algebra->tensor() == full_matrix_algebra(r, m)->tensor(), at(lit, n) + " constants");
      o.require(check_witness(q.witness), at(lit, n) + " witness");
      o.require(check_witness(q.quotient.projection), at(lit, n) + " projection");
      const auto& proj = q.quotient.projection;
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
          const Vector a = proj.apply(structure::f_vector(r, n, i, j));
          const Vector b = proj.apply(structure::f_vector(r, n, i, n + 1 - j));
          o.require(a == r.from_int(-1) * b, at(lit, n) + " sign identity");
        }
    }
  }
  return o;
}

Outcome morita() {
  Outcome o;
  for (const char* lit : {"int", "gf:2", "rat"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 4; n <= 8; ++n)
      for (std::size_t j = 2; j <= n / 2; ++j) {
        const auto w = structure::morita_column_iso(r, n, j);
        o.require(w.claims.count(MapProperty::left_module_homomorphism) && w.claims.count(MapProperty::bijective),
                  at(lit, n) + " claims");
        o.require(check_witness(w), at(lit, n) + " j=" + std::to_string(j));
      }
    for (std::size_t n : {5u, 7u}) {
      const auto e = structure::endring_odd(r, n);
      o.require(e.relations, at(lit, n) + " relations");
      o.require(e.relations.clauses.size() == 2, at(lit, n) + " relation count");
      o.require(e.algebra->rank() == 5, at(lit, n) + " rank");
      o.require(check_witness(e.witness), at(lit, n) + " iso onto S_3");
    }
  }
  return o;
}

Outcome cell_chains() {
  Outcome o;
  for (const char* lit : {"int", "gf:2", "gf:3", "rat"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto chain = cellular::cell_chain(r, n);
      o.require(cellular::verify_cell_chain(chain), at(lit, n) + " chain");
      std::vector<std::size_t> ranks;
      for (const auto& layer : chain.layers) {
        const Report rep = cellular::verify_cell_ideal(layer.cell);
        o.require(rep.clauses.size() == 5, at(lit, n) + " clause count");
        o.require(rep, at(lit, n) + " layer");
        ranks.push_back(layer.span.size());
      }
      const std::size_t m = n / 2;
      const std::vector<std::size_t> expect =
          n % 2 ? (m ? std::vector<std::size_t>{(m + 1) * (m + 1), m * m} : std::vector<std::size_t>{1})
                : std::vector<std::size_t>{m * m, m * m};
      o.require(ranks == expect, at(lit, n) + " layer ranks");
    }
  }
  return o;
}

Outcome heredity() {
  Outcome o;
  for (const char* lit : {"gf:2", "gf:5", "rat"})
    for (std::size_t n : {3u, 5u, 7u}) {
      const auto chain = cellular::quasi_hereditary_chain_odd(Ring::parse(lit), n);
      o.require(chain.report, at(lit, n) + " chain");
      for (const auto& step : chain.steps) o.require(step.witness.has_value(), at(lit, n) + " step witness");
      for (std::size_t i = 1; i <= n / 2 + 1; ++i)
        for (std::size_t j = 1; j <= n / 2 + 1; ++j)
          o.require(cellular::injectivity_check_mu(Ring::parse(lit), n, i, j), at(lit, n) + " mu");
    }
  const Ring f2 = Ring::parse("gf:2");
  o.require(cellular::char2_negative_control(f2), "negative control");
  const auto g = group_algebra_c2(f2);
  const auto j = ideal_generated(g, {Vector{f2.one(), f2.one()}});
  o.require(j.basis.size() == 1 && is_zero(g->multiply(j.basis[0], j.basis[0])), "(1+x)^2 = 0");
  // exhaustive: no idempotent of GF(2)[C2] generates J
  for (const auto& a0 : f2.elements())
    for (const auto& a1 : f2.elements()) {
      const Vector e{a0, a1};
      if (g->multiply(e, e) != e || is_zero(e)) continue;
      o.require(ideal_generated(g, {e}).basis.size() != j.basis.size(), "idempotent generating J");
    }
  return o;
}

Outcome centre_dimension() {
  Outcome o;
  for (const char* lit : {"gf:2", "gf:3", "gf:5"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto a = algebra_of_censym(r, n);
      const auto z = censym::centre(*a);
      o.require(z.complete, at(lit, n) + " complete");
      o.require(z.basis.size() == (n == 1 ? 1u : 2u), at(lit, n) + " dimension " + std::to_string(z.basis.size()));
      SpanBuilder span(r, a->rank());
      for (const auto& v : z.basis) span.add(v);
      o.require(span.contains(a->unit()), at(lit, n) + " contains 1");
      o.require(span.contains(coords(CentroMatrix::checked(Matrix::exchange(r, n)))), at(lit, n) + " contains c");
      o.require(suite::centre_check(r, n), at(lit, n) + " centre = R[c]");
    }
  }
  return o;
}

Outcome wedderburn() {
  Outcome o;
  for (const char* lit : {"rat", "gf:5"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto w = structure::wedderburn_split(r, n);
      const std::size_t k = (n + 1) / 2, l = n / 2;
      o.require(w.plus->rank() == k * k && w.minus->rank() == l * l, at(lit, n) + " ranks");
      o.require(check_witness(w.plus_iso), at(lit, n) + " plus piece");
      o.require(check_witness(w.minus_iso), at(lit, n) + " minus piece");
      o.require(check_witness(w.product_iso), at(lit, n) + " product");
      o.require(w.plus_iso.source->tensor() == full_matrix_algebra(r, k)->tensor(), at(lit, n) + " plus source");
      o.require(w.minus_iso.source->tensor() == full_matrix_algebra(r, l)->tensor(), at(lit, n) + " minus source");
    }
  }
  return o;
}

Outcome demo() {
  Outcome o;
  const Ring z = Ring::integers();
  Matrix a(z, 3), b(z, 3), expect(z, 3);
  for (auto [i, j] : {std::pair{1, 1}, {1, 3}, {3, 1}, {3, 3}}) a.set(i, j, z.one());
  for (auto [i, j] : {std::pair{1, 2}, {2, 1}, {2, 3}, {3, 2}}) b.set(i, j, z.one());
  for (auto [i, j] : {std::pair{1, 2}, {3, 2}}) expect.set(i, j, z.from_int(2));
  const Matrix p = a * b;
  o.require(p == expect, "product " + p.to_string());
  o.require(symmetry_class(a).bisymmetric && symmetry_class(b).bisymmetric, "operands bisymmetric");
  o.require(symmetry_class(p).centrosymmetric && !symmetry_class(p).bisymmetric, "product flags");
  o.require(suite::demo_bisymmetric(), "demo report");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closure and membership", closure},
      {"rank and coordinates", rank},
      {"structure constants", structure_constants_formula},
      {"Frobenius system", frobenius_system},
      {"separability", separability},
      {"split", split},
      {"even isomorphism", iso_even},
      {"odd quotient", odd_quotient},
      {"Morita witnesses", morita},
      {"cell chains", cell_chains},
      {"quasi-heredity", heredity},
      {"centre", centre_dimension},
      {"Wedderburn split", wedderburn},
      {"bisymmetric non-closure", demo},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %-26s %8zu cases %7.2fs%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.cases, secs, o.ok ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
