#include "commands.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "censym/algebra.hpp"
#include "censym/cellular.hpp"
#include "censym/centro.hpp"
#include "censym/errors.hpp"
#include "censym/frobenius.hpp"
#include "censym/structure.hpp"
#include "censym/suite.hpp"
#include "censym/textio.hpp"

namespace censym::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::size_t> n;
  std::string ring = "int";
  bool json = false;
  std::uint64_t seed = frobenius::kDefaultSeed;
  std::string matrix_file;
  std::vector<std::string> checks{"all"};
  std::string kind;
  std::optional<std::size_t> j;
  std::size_t batch = frobenius::kDefaultBatch;
};

std::size_t need_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  if (*o.n == 0) throw UsageError("--n must be at least 1");
  return *o.n;
}

Ring parse_ring(const std::string& literal) {
  try {
    return Ring::parse(literal);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json rows_of(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 1; j <= m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit(const std::string& command, const std::vector<Report>& reports, const Options& o, std::ostream& out) {
  Verdict overall = Verdict::pass;
  for (const auto& r : reports) overall = worst(overall, r.verdict);
  if (o.json) {
    nlohmann::json doc{{"command", command}, {"verdict", to_string(overall)}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(r.to_json());
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << r.to_text();
    out << "overall: " << to_string(overall) << " (" << reports.size() << " reports)\n";
  }
  return overall == Verdict::fail ? 1 : 0;
}

Report undetermined_report(const std::string& name, const Ring& ring, std::size_t n, const std::string& why) {
  Report r;
  r.check = name;
  r.params = {{"n", n}, {"ring", ring.literal()}};
  r.add(Clause{"freeness", Verdict::undetermined, 0, nullptr, why});
  return r;
}

// Symmetry flags, membership and the two Frobenius identities for one matrix.
Report matrix_report(const Matrix& m) {
  Report r;
  r.check = "matrix-file";
  r.params = {{"n", m.size()}, {"ring", m.ring().literal()}};
  const auto flags = symmetry_class(m);
  r.witness = {{"matrix", rows_of(m)},
               {"symmetric", flags.symmetric},
               {"persymmetric", flags.persymmetric},
               {"bisymmetric", flags.bisymmetric},
               {"centrosymmetric", flags.centrosymmetric}};
  if (auto c = CentroMatrix::certify(m)) {
    auto coords_json = nlohmann::json::object();
    const auto idx = canonical_indices(m.size());
    const auto v = coords(*c);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) coords_json[idx[k].label()] = v[k].to_string();
    r.witness["coords"] = std::move(coords_json);
  }
  const auto sys = frobenius::FrobeniusSystem::make(m.ring(), m.size());
  ClauseCheck left("sum x_i E(y_i a) = a");
  const Matrix l = frobenius::left_expansion(sys, m);
  left.expect(l == m, [&] { return nlohmann::json{{"lhs", rows_of(l)}}; });
  r.add(std::move(left).finish());
  ClauseCheck right("sum E(a x_i) y_i = a");
  const Matrix rr = frobenius::right_expansion(sys, m);
  right.expect(rr == m, [&] { return nlohmann::json{{"lhs", rows_of(rr)}}; });
  r.add(std::move(right).finish());
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::optional<Matrix> file_matrix;
  if (!o.matrix_file.empty()) file_matrix = read_matrix_file(o.matrix_file);
  const Ring ring = file_matrix && o.ring == "int" ? file_matrix->ring() : parse_ring(o.ring);

  std::vector<std::size_t> grid;
  if (o.n) {
    grid.push_back(need_n(o));
  } else if (file_matrix) {
    grid.push_back(file_matrix->size());
  } else {
    for (std::size_t n = 1; n <= 8; ++n) grid.push_back(n);
  }

  std::vector<std::string> checks;
  for (const auto& c : o.checks) {
    if (c == "all") {
      checks.insert(checks.end(), suite::check_names().begin(), suite::check_names().end());
    } else if (std::find(suite::check_names().begin(), suite::check_names().end(), c) != suite::check_names().end()) {
      checks.push_back(c);
    } else {
      throw UsageError("unknown check '" + c + "'");
    }
  }

  std::vector<Report> reports;
  if (file_matrix) reports.push_back(matrix_report(*file_matrix));
  for (std::size_t n : grid)
    for (const auto& c : checks) {
      try {
        for (auto& r : suite::run_check(c, ring, n, o.seed)) {
          r.params["seed"] = o.seed;
          reports.push_back(std::move(r));
        }
      } catch (const FreenessUndetermined& e) {
        reports.push_back(undetermined_report(c, ring, n, e.what()));
      }
    }
  return emit("verify", reports, o, out);
}

int cmd_table(const Options& o, std::ostream& out) {
  const std::size_t n = need_n(o);
  const Ring ring = parse_ring(o.ring);
  auto a = algebra_of_censym(ring, n);
  if (o.json) {
    nlohmann::json doc{{"n", n}, {"ring", ring.literal()}, {"labels", a->labels()}, {"products", nlohmann::json::array()}};
    for (std::size_t u = 0; u < a->rank(); ++u)
      for (std::size_t v = 0; v < a->rank(); ++v)
        doc["products"].push_back({{"left", a->labels()[u]},
                                   {"right", a->labels()[v]},
                                   {"product", a->format(a->multiply(a->basis(u), a->basis(v)))}});
    out << doc.dump(2) << '\n';
  } else {
    out << "S_" << n << "(" << ring.literal() << "), rank " << a->rank() << '\n';
    for (std::size_t u = 0; u < a->rank(); ++u)
      for (std::size_t v = 0; v < a->rank(); ++v)
        out << a->labels()[u] << " * " << a->labels()[v] << " = " << a->format(a->multiply(a->basis(u), a->basis(v)))
            << '\n';
  }
  return 0;
}

int cmd_iso(const Options& o, std::ostream& out) {
  const Ring ring = parse_ring(o.ring);
  std::vector<Report> reports;
  auto size = [&](std::size_t fallback) { return o.n ? need_n(o) : fallback; };
  try {
    if (o.kind == "s2") {
      if (size(2) != 2) throw UsageError("--kind s2 is the n = 2 case");
      reports.push_back(check_witness(structure::iso_s2(ring)));
    } else if (o.kind == "s3") {
      if (size(3) != 3) throw UsageError("--kind s3 is the n = 3 case");
      reports.push_back(check_witness(structure::s3_presentation(ring).witness));
    } else if (o.kind == "even") {
      const std::size_t n = need_n(o);
      if (n % 2) throw UsageError("--kind even needs even n");
      reports.push_back(check_witness(structure::iso_even(ring, n / 2)));
    } else if (o.kind == "odd-quotient") {
      const std::size_t n = need_n(o);
      if (n % 2 == 0 || n < 3) throw UsageError("--kind odd-quotient needs odd n >= 3");
      for (auto& r : suite::iso_checks(ring, n))
        if (r.check == "witness:iso_odd_quotient") reports.push_back(std::move(r));
    } else if (o.kind == "wedderburn") {
      const std::size_t n = need_n(o);
      const auto w = structure::wedderburn_split(ring, n);
      Report r = check_witness(w.product_iso);
      r.absorb(check_witness(w.plus_iso), "plus/");
      r.absorb(check_witness(w.minus_iso), "minus/");
      r.witness["piece_ranks"] = {w.plus->rank(), w.minus->rank()};
      reports.push_back(std::move(r));
    } else if (o.kind == "morita") {
      const std::size_t n = need_n(o);
      if (o.j) {
        reports.push_back(check_witness(structure::morita_column_iso(ring, n, *o.j)));
      } else {
        if (n < 4) throw UsageError("--kind morita needs n >= 4");
        for (std::size_t j = 2; j <= n / 2; ++j) reports.push_back(check_witness(structure::morita_column_iso(ring, n, j)));
      }
    } else if (o.kind == "endring") {
      const auto e = structure::endring_odd(ring, need_n(o));
      Report r = check_witness(e.witness);
      r.absorb(e.relations, "relations/");
      reports.push_back(std::move(r));
    } else {
      throw UsageError("unknown --kind '" + o.kind + "'");
    }
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  } catch (const IndexError& e) {
    throw UsageError(e.what());
  }
  return emit("iso", reports, o, out);
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  std::vector<Report> reports;
  std::optional<Matrix> file_matrix;
  if (!o.matrix_file.empty()) file_matrix = read_matrix_file(o.matrix_file);
  const Ring ring = file_matrix && o.ring == "int" ? file_matrix->ring() : parse_ring(o.ring);
  const std::size_t n = file_matrix && !o.n ? file_matrix->size() : need_n(o);
  const auto sys = frobenius::FrobeniusSystem::make(ring, n);
  reports.push_back(frobenius::verify_frobenius_system(sys, o.seed, o.batch));
  reports.push_back(frobenius::separability_check(sys));
  reports.push_back(frobenius::splitness_check(sys));
  if (file_matrix) {
    if (file_matrix->size() != n || !(file_matrix->ring() == ring)) throw UsageError("matrix file does not match --n/--ring");
    reports.push_back(matrix_report(*file_matrix));
  }
  return emit("frobenius", reports, o, out);
}

int cmd_cellchain(const Options& o, std::ostream& out) {
  const std::size_t n = need_n(o);
  const Ring ring = parse_ring(o.ring);
  Report r = cellular::verify_cell_chain(cellular::cell_chain(ring, n));
  r.params["n"] = n;
  if (!o.json) {
    const auto& layers = r.witness["layers"];
    for (std::size_t p = 0; p < layers.size(); ++p)
      out << "layer " << p + 1 << ": rank " << layers[p]["rank"] << ", delta " << layers[p]["delta"].dump() << '\n';
  }
  return emit("cellchain", {r}, o, out);
}

int cmd_centre(const Options& o, std::ostream& out) {
  const std::size_t n = need_n(o);
  const Ring ring = parse_ring(o.ring);
  return emit("centre", {suite::centre_check(ring, n)}, o, out);
}

int cmd_dump(const Options& o, std::ostream& out) {
  const std::size_t n = need_n(o);
  const Ring ring = parse_ring(o.ring);
  out << algebra_of_censym(ring, n)->to_json().dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for centrosymmetric matrix algebras S_n(R)", "censym"};
  app.require_subcommand(1);
  Options o;
  std::size_t n_value = 0;

  auto common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--n", n_value, "matrix size n >= 1");
    sub->add_option("--ring", o.ring, "ring literal: int, rat, zmod:m, gf:p, c2:<ring>");
    sub->add_flag("--json", o.json, "emit JSON");
    if (with_seed) sub->add_option("--seed", o.seed, "seed for random batches");
  };
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify, true);
  verify->add_option("--check", o.checks, "checks to run (comma separated, or all)")->delimiter(',');
  verify->add_option("--matrix-file", o.matrix_file, "also classify the matrix in this file");
  auto* table = app.add_subcommand("table", "print the multiplication table of the f-basis");
  common(table, false);
  auto* iso = app.add_subcommand("iso", "check an explicit isomorphism witness");
  common(iso, false);
  iso->add_option("--kind", o.kind, "s2, s3, even, odd-quotient, wedderburn, morita, endring")->required();
  iso->add_option("--j", o.j, "column for --kind morita (default: all)");
  auto* frob = app.add_subcommand("frobenius", "verify the Frobenius system of S_n(R) in M_n(R)");
  common(frob, true);
  frob->add_option("--batch", o.batch, "random matrices per identity");
  frob->add_option("--matrix-file", o.matrix_file, "also test the identities on this matrix");
  auto* cell = app.add_subcommand("cellchain", "build and verify the cell chain");
  common(cell, false);
  auto* cen = app.add_subcommand("centre", "compute the centre");
  common(cen, false);
  auto* demo = app.add_subcommand("demo-bisymmetric", "bisymmetric matrices are not closed under products");
  demo->add_flag("--json", o.json, "emit JSON");
  auto* dump = app.add_subcommand("dump-algebra", "dump S_n(R) as a structure-constant algebra (JSON)");
  common(dump, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->get_option_no_throw("--n") && sub->count("--n")) o.n = n_value;

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (iso->parsed()) return cmd_iso(o, out);
    if (frob->parsed()) return cmd_frobenius(o, out);
    if (cell->parsed()) return cmd_cellchain(o, out);
    if (cen->parsed()) return cmd_centre(o, out);
    if (demo->parsed()) return emit("demo-bisymmetric", {suite::demo_bisymmetric()}, o, out);
    if (dump->parsed()) return cmd_dump(o, out);
  } catch (const UsageError& e) {
    err << "censym: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "censym: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "censym: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    err << "censym: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace censym::cli
