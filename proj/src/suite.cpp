#include "censym/suite.hpp"

#include <random>
#include <stdexcept>

#include "censym/algebra.hpp"
#include "censym/cellular.hpp"
#include "censym/errors.hpp"
#include "censym/structure.hpp"

namespace censym::suite {

namespace {

nlohmann::json rows_of(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 1; j <= m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json flags_json(const SymmetryFlags& f) {
  return {{"symmetric", f.symmetric},
          {"persymmetric", f.persymmetric},
          {"bisymmetric", f.bisymmetric},
          {"centrosymmetric", f.centrosymmetric}};
}

Report named(std::string check, const Ring& ring, std::size_t n) {
  Report r;
  r.check = std::move(check);
  r.params = {{"n", n}, {"ring", ring.literal()}};
  return r;
}

Matrix random_centro(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  const auto basis = canonical_basis(ring, n);
  std::vector<RingElt> c;
  for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(ring.random(rng));
  return from_coords(ring, n, c).matrix();
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"closure", "rank",  "structure-constants", "frobenius", "separability",
                                              "split",   "isos",  "cellchain",           "heredity",  "centre"};
  return names;
}

Report closure_check(const Ring& ring, std::size_t n, std::uint64_t seed, std::size_t batch) {
  Report report = named("closure", ring, n);
  report.params["seed"] = seed;
  const auto basis = canonical_basis(ring, n);
  ClauseCheck pairs("basis products centrosymmetric");
  for (const auto& u : basis)
    for (const auto& v : basis) {
      const Matrix p = u.matrix.matrix() * v.matrix.matrix();
      pairs.expect(is_centrosymmetric(p), [&] {
        return nlohmann::json{{"u", u.index.label()}, {"v", v.index.label()}, {"product", rows_of(p)}};
      });
    }
  report.add(std::move(pairs).finish());

  ClauseCheck randoms("random products centrosymmetric");
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < batch; ++k) {
    const Matrix a = random_centro(ring, n, rng);
    const Matrix b = random_centro(ring, n, rng);
    const Matrix p = a * b;
    randoms.expect(is_centrosymmetric(p) && p.conj_by_c() == p, [&] {
      return nlohmann::json{{"a", rows_of(a)}, {"b", rows_of(b)}, {"product", rows_of(p)}};
    });
  }
  report.add(std::move(randoms).finish());
  return report;
}

Report rank_check(const Ring& ring, std::size_t n, std::uint64_t seed, std::size_t batch) {
  Report report = named("rank", ring, n);
  report.params["seed"] = seed;
  const std::size_t expected = (n * n + 1) / 2;
  const auto basis = canonical_basis(ring, n);
  ClauseCheck size("basis size ceil(n^2/2)");
  size.expect(basis.size() == expected, [&] { return nlohmann::json{{"size", basis.size()}, {"expected", expected}}; });
  report.add(std::move(size).finish());

  ClauseCheck trip("coords round trip");
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < batch; ++k) {
    const Matrix m = Matrix::random(ring, n, rng);
    const CentroMatrix a = CentroMatrix::checked(m + m.conj_by_c());
    const auto c = coords(a);
    const CentroMatrix back = from_coords(ring, n, c);
    trip.expect(back == a && coords(back) == c, [&] { return nlohmann::json{{"a", rows_of(a.matrix())}}; });
  }
  report.add(std::move(trip).finish());
  report.witness = {{"rank", basis.size()}};
  return report;
}

Report structure_constants_check(const Ring& ring, std::size_t n) {
  Report report = named("structure-constants", ring, n);
  auto algebra = algebra_of_censym(ring, n);
  const auto indices = canonical_indices(n);

  ClauseCheck formula("oracle matches closed formula");
  std::size_t skipped = 0;
  for (std::size_t u = 0; u < indices.size(); ++u)
    for (std::size_t v = 0; v < indices.size(); ++v) {
      const auto terms = closed_form_product(indices[u], indices[v]);
      if (!terms) {
        ++skipped;
        continue;
      }
      Vector expected = algebra->zero();
      for (const auto& t : *terms) expected[basis_position(t.index)] += ring.from_int(t.coeff);
      const Vector got = algebra->multiply(algebra->basis(u), algebra->basis(v));
      formula.expect(got == expected, [&] {
        return nlohmann::json{{"u", indices[u].label()},
                              {"v", indices[v].label()},
                              {"oracle", algebra->format(got)},
                              {"formula", algebra->format(expected)}};
      });
    }
  formula.note(std::to_string(skipped) + " pairs involve the centre element");
  report.add(std::move(formula).finish());

  if (n == 3) {
    ClauseCheck samples("sample products");
    auto f = [&](std::size_t i, std::size_t j) { return structure::f_vector(ring, 3, i, j); };
    const std::vector<std::pair<std::string, std::pair<Vector, Vector>>> cases{
        {"f1_2 * f2_1", {algebra->multiply(f(1, 2), f(2, 1)), f(1, 1) + f(1, 3)}},
        {"f2_1 * f1_2", {algebra->multiply(f(2, 1), f(1, 2)), ring.from_int(2) * f(2, 2)}},
        {"f1_3 * f1_3", {algebra->multiply(f(1, 3), f(1, 3)), f(1, 1)}},
    };
    for (const auto& [name, pr] : cases) {
      samples.expect(pr.first == pr.second, [&, &name = name, &pr = pr] {
        return nlohmann::json{{"product", name}, {"got", algebra->format(pr.first)}, {"expected", algebra->format(pr.second)}};
      });
    }
    report.add(std::move(samples).finish());
  }
  report.absorb(audit(*algebra), "audit/");
  return report;
}

std::vector<Report> iso_checks(const Ring& ring, std::size_t n) {
  std::vector<Report> out;
  auto add = [&](Report r) {
    r.params["n"] = n;
    r.params["ring"] = ring.literal();
    out.push_back(std::move(r));
  };
  const std::size_t m = n / 2;
  if (n == 2) add(check_witness(structure::iso_s2(ring)));
  if (n == 3) add(check_witness(structure::s3_presentation(ring).witness));
  if (n % 2 == 0) {
    add(check_witness(structure::iso_even(ring, m)));
  } else if (m >= 1) {
    const auto q = structure::iso_odd_quotient(ring, m);
    Report r = check_witness(q.witness);
    ClauseCheck sign("[f_ij] = -[f_i,n+1-j]");
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j) {
        const Vector a = q.quotient.projection.apply(structure::f_vector(ring, n, i, j));
        const Vector b = q.quotient.projection.apply(structure::f_vector(ring, n, i, n + 1 - j));
        sign.expect(a == -ring.one() * b, [&] { return nlohmann::json{{"i", i}, {"j", j}}; });
      }
    r.add(std::move(sign).finish());
    r.absorb(check_witness(q.quotient.projection), "projection/");
    add(std::move(r));
  }
  if (n >= 4)
    for (std::size_t j = 2; j <= half_down(n); ++j) add(check_witness(structure::morita_column_iso(ring, n, j)));
  if (n % 2 == 1 && n >= 5) {
    const auto e = structure::endring_odd(ring, n);
    Report r = check_witness(e.witness);
    r.absorb(e.relations, "relations/");
    add(std::move(r));
  }
  if (invert_two(ring)) {
    const auto w = structure::wedderburn_split(ring, n);
    Report r = check_witness(w.product_iso);
    r.absorb(check_witness(w.plus_iso), "plus/");
    r.absorb(check_witness(w.minus_iso), "minus/");
    r.witness["piece_ranks"] = {w.plus->rank(), w.minus->rank()};
    add(std::move(r));
  }
  return out;
}

std::vector<Report> heredity_checks(const Ring& ring, std::size_t n) {
  std::vector<Report> out;
  if (n % 2 == 1) {
    out.push_back(cellular::quasi_hereditary_chain_odd(ring, n).report);
    const std::size_t m = n / 2;
    Report mu = named("injectivity-mu", ring, n);
    auto gens = nlohmann::json::object();
    for (std::size_t i = 1; i <= m + 1; ++i)
      for (std::size_t j = 1; j <= m + 1; ++j) {
        Report r = cellular::injectivity_check_mu(ring, n, i, j);
        mu.absorb(r, "mu" + std::to_string(i) + "_" + std::to_string(j) + "/");
        gens["mu" + std::to_string(i) + "_" + std::to_string(j)] = r.witness["generator"];
      }
    mu.witness = {{"generators", gens}};
    out.push_back(std::move(mu));
  } else if (n == 2 && ring.is_finite() && ring.from_int(2).is_zero()) {
    out.push_back(cellular::char2_negative_control(ring));
  }
  return out;
}

Report centre_check(const Ring& ring, std::size_t n) {
  auto algebra = algebra_of_censym(ring, n);
  std::vector<Vector> candidates{algebra->unit()};
  const Vector c = coords(CentroMatrix::checked(Matrix::exchange(ring, n)));
  if (!(c == algebra->unit())) candidates.push_back(c);
  CentreResult result = centre(*algebra, candidates);
  Report report = std::move(result.report);
  report.params["n"] = n;
  if (result.complete) {
    ClauseCheck dim("centre = R[c]");
    dim.expect(result.basis.size() == candidates.size(), [&] {
      return nlohmann::json{{"dimension", result.basis.size()}, {"expected", candidates.size()}};
    });
    report.add(std::move(dim).finish());
  }
  report.witness["candidates"] = nlohmann::json::array();
  for (const auto& v : candidates) report.witness["candidates"].push_back(algebra->format(v));
  return report;
}

Report demo_bisymmetric() {
  const Ring z = Ring::integers();
  Report report;
  report.check = "demo-bisymmetric";
  report.params = {{"n", 3}, {"ring", "int"}};
  auto e = [&](std::size_t i, std::size_t j) { return Matrix::unit(z, 3, i, j); };
  const Matrix a = e(1, 1) + e(1, 3) + e(3, 1) + e(3, 3);
  const Matrix b = e(1, 2) + e(2, 1) + e(2, 3) + e(3, 2);
  const Matrix p = a * b;
  const Matrix expected = z.from_int(2) * (e(1, 2) + e(3, 2));
  const auto fa = symmetry_class(a), fb = symmetry_class(b), fp = symmetry_class(p);

  ClauseCheck operands("operands bisymmetric");
  operands.expect(fa.bisymmetric && fb.bisymmetric, [&] { return nlohmann::json{{"a", flags_json(fa)}, {"b", flags_json(fb)}}; });
  report.add(std::move(operands).finish());
  ClauseCheck product("product = 2(e12 + e32)");
  product.expect(p == expected, [&] { return nlohmann::json{{"product", rows_of(p)}}; });
  report.add(std::move(product).finish());
  ClauseCheck flags("product centrosymmetric, not bisymmetric");
  flags.expect(fp.centrosymmetric && !fp.bisymmetric, [&] { return nlohmann::json{{"product", flags_json(fp)}}; });
  report.add(std::move(flags).finish());
  report.witness = {{"a", rows_of(a)},
                    {"b", rows_of(b)},
                    {"product", rows_of(p)},
                    {"flags", {{"a", flags_json(fa)}, {"b", flags_json(fb)}, {"product", flags_json(fp)}}}};
  return report;
}

std::vector<Report> run_check(const std::string& name, const Ring& ring, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("n must be at least 1");
  if (name == "closure") return {closure_check(ring, n, seed)};
  if (name == "rank") return {rank_check(ring, n, seed)};
  if (name == "structure-constants") return {structure_constants_check(ring, n)};
  const auto sys = frobenius::FrobeniusSystem::make(ring, n);
  if (name == "frobenius") return {frobenius::verify_frobenius_system(sys, seed)};
  if (name == "separability") return {frobenius::separability_check(sys)};
  if (name == "split") return {frobenius::splitness_check(sys)};
  if (name == "isos") return iso_checks(ring, n);
  if (name == "cellchain") {
    Report r = cellular::verify_cell_chain(cellular::cell_chain(ring, n));
    r.params["n"] = n;
    return {r};
  }
  if (name == "heredity") return heredity_checks(ring, n);
  if (name == "centre") return {centre_check(ring, n)};
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace censym::suite
