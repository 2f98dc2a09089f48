#include "censym/frobenius.hpp"

#include <random>

#include "censym/errors.hpp"

namespace censym::frobenius {

namespace {

nlohmann::json matrix_rows(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 1; j <= m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string unit_name(std::size_t p, std::size_t q) { return "e" + std::to_string(p) + "_" + std::to_string(q); }

}  // namespace

FrobeniusSystem FrobeniusSystem::make(const Ring& ring, std::size_t n) {
  if (n == 0) throw DimensionError("matrix size must be positive");
  FrobeniusSystem sys{ring, n, {}, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    sys.x.push_back(Matrix::unit(ring, n, i, 1));
    sys.y.push_back(Matrix::unit(ring, n, 1, i));
  }
  return sys;
}

CentroMatrix FrobeniusSystem::E(const Matrix& a) const { return n == 1 ? CentroMatrix::checked(a) : e_map(a); }

std::string FrobeniusSystem::describe_e() const { return n == 1 ? "a" : "a + c a c"; }

CentroMatrix e_map(const Matrix& a) { return CentroMatrix::checked(a + a.conj_by_c()); }

Matrix left_expansion(const FrobeniusSystem& sys, const Matrix& a) {
  Matrix sum(sys.ring, sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) sum += sys.x[i] * sys.E(sys.y[i] * a).matrix();
  return sum;
}

Matrix right_expansion(const FrobeniusSystem& sys, const Matrix& a) {
  Matrix sum(sys.ring, sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) sum += sys.E(a * sys.x[i]).matrix() * sys.y[i];
  return sum;
}

Report verify_frobenius_system(const FrobeniusSystem& sys, std::uint64_t seed, std::size_t batch) {
  Report report;
  report.check = "frobenius";
  report.params = {{"n", sys.n}, {"ring", sys.ring.literal()}, {"seed", seed}, {"batch", batch}};

  std::vector<std::pair<std::string, Matrix>> inputs;
  for (std::size_t p = 1; p <= sys.n; ++p)
    for (std::size_t q = 1; q <= sys.n; ++q) inputs.emplace_back(unit_name(p, q), Matrix::unit(sys.ring, sys.n, p, q));
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < batch; ++k) inputs.emplace_back("random#" + std::to_string(k), Matrix::random(sys.ring, sys.n, rng));

  ClauseCheck left("sum x_i E(y_i a) = a");
  ClauseCheck right("sum E(a x_i) y_i = a");
  ClauseCheck image("E(a) centrosymmetric");
  for (const auto& [name, a] : inputs) {
    const Matrix l = left_expansion(sys, a);
    left.expect(l == a, [&] { return nlohmann::json{{"a", name}, {"input", matrix_rows(a)}, {"lhs", matrix_rows(l)}}; });
    const Matrix r = right_expansion(sys, a);
    right.expect(r == a, [&] { return nlohmann::json{{"a", name}, {"input", matrix_rows(a)}, {"lhs", matrix_rows(r)}}; });
    const Matrix e = sys.n == 1 ? a : a + a.conj_by_c();
    image.expect(is_centrosymmetric(e), [&] { return nlohmann::json{{"a", name}, {"E(a)", matrix_rows(e)}}; });
  }
  report.add(std::move(left).finish());
  report.add(std::move(right).finish());
  report.add(std::move(image).finish());

  ClauseCheck bimodule("E bimodule map");
  const auto basis = canonical_basis(sys.ring, sys.n);
  for (const auto& f : basis) {
    const Matrix& s = f.matrix.matrix();
    for (std::size_t p = 1; p <= sys.n; ++p)
      for (std::size_t q = 1; q <= sys.n; ++q) {
        const Matrix a = Matrix::unit(sys.ring, sys.n, p, q);
        const Matrix ea = sys.E(a).matrix();
        const Matrix l1 = sys.E(s * a).matrix();
        const Matrix l2 = s * ea;
        bimodule.expect(l1 == l2, [&] {
          return nlohmann::json{{"s", f.index.label()}, {"a", unit_name(p, q)}, {"side", "left"},
                                {"E(sa)", matrix_rows(l1)}, {"sE(a)", matrix_rows(l2)}};
        });
        const Matrix r1 = sys.E(a * s).matrix();
        const Matrix r2 = ea * s;
        bimodule.expect(r1 == r2, [&] {
          return nlohmann::json{{"s", f.index.label()}, {"a", unit_name(p, q)}, {"side", "right"},
                                {"E(as)", matrix_rows(r1)}, {"E(a)s", matrix_rows(r2)}};
        });
      }
  }
  report.add(std::move(bimodule).finish());
  report.witness = {{"E", sys.describe_e()}, {"x_i", "e_i1"}, {"y_i", "e_1i"}};
  return report;
}

bool centralizer_membership(const FrobeniusSystem& sys, const Matrix& d) {
  if (d.size() != sys.n) throw DimensionError("d has the wrong size");
  if (!(d.ring() == sys.ring)) throw RingMismatchError(d.ring().literal(), sys.ring.literal());
  for (const auto& f : canonical_basis(sys.ring, sys.n)) {
    const Matrix& s = f.matrix.matrix();
    if (!(d * s == s * d)) return false;
  }
  return true;
}

Report separability_check(const FrobeniusSystem& sys) {
  Report report;
  report.check = "separability";
  report.params = {{"n", sys.n}, {"ring", sys.ring.literal()}};
  const Matrix d = Matrix::identity(sys.ring, sys.n);

  ClauseCheck central("d in centralizer");
  central.expect(centralizer_membership(sys, d), [] { return nlohmann::json{{"d", "1"}}; });
  report.add(std::move(central).finish());

  ClauseCheck unit("sum x_i d y_i = 1");
  Matrix sum(sys.ring, sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) sum += sys.x[i] * d * sys.y[i];
  unit.expect(sum == d, [&] { return nlohmann::json{{"sum", matrix_rows(sum)}}; });
  report.add(std::move(unit).finish());
  report.witness = {{"d", "1"}};
  return report;
}

Report splitness_check(const FrobeniusSystem& sys) {
  Report report;
  report.check = "split";
  report.params = {{"n", sys.n}, {"ring", sys.ring.literal()}};
  // R in R is split by d = 1.
  const auto half = sys.n == 1 ? std::optional<RingElt>(sys.ring.one()) : invert_two(sys.ring);
  if (!half) {
    report.add(Clause{"witness d = 2^-1 * 1", Verdict::unknown, 0, nullptr,
                      "2 is not a unit in " + sys.ring.literal() + "; no split witness attempted"});
    return report;
  }
  const Matrix one = Matrix::identity(sys.ring, sys.n);
  const Matrix d = *half * one;

  ClauseCheck central("d in centralizer");
  central.expect(centralizer_membership(sys, d), [&] { return nlohmann::json{{"d", matrix_rows(d)}}; });
  report.add(std::move(central).finish());

  ClauseCheck unit("E(d) = 1");
  const Matrix ed = sys.E(d).matrix();
  unit.expect(ed == one, [&] { return nlohmann::json{{"E(d)", matrix_rows(ed)}}; });
  report.add(std::move(unit).finish());
  report.witness = {{"d", half->to_string() + "*1"}, {"E", sys.describe_e()}};
  return report;
}

}  // namespace censym::frobenius
