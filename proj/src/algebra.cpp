#include "censym/algebra.hpp"

#include <deque>
#include <mutex>
#include <map>
#include <shared_mutex>

#include "censym/centro.hpp"
#include "censym/errors.hpp"

namespace censym {

namespace {

std::vector<std::size_t> support(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(k);
  return out;
}

nlohmann::json matrix_json(const CoordMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_negative_scalar(const RingElt& x) {
  return x.ring().depth() == 0 && x.ring().kind() != RingKind::modular && x.coefficients()[0] < 0;
}

}  // namespace

std::string format_combination(const std::vector<std::string>& labels, const Vector& v) {
  if (v.size() != labels.size()) throw DimensionError("vector length does not match the number of labels");
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const RingElt& c = v[k];
    if (c.is_zero()) continue;
    const bool negative = is_negative_scalar(c);
    const RingElt magnitude = negative ? -c : c;
    std::string text;
    if (magnitude.is_one()) {
      text = labels.at(k);
    } else if (c.ring().depth() > 0) {
      text = "(" + magnitude.to_string() + ")*" + labels.at(k);
    } else {
      text = magnitude.to_string() + "*" + labels.at(k);
    }
    if (out.empty()) {
      out = negative ? "-" + text : text;
    } else {
      out += negative ? " - " + text : " + " + text;
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json vector_json(const Vector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

// --- StructureAlgebra -------------------------------------------------------

StructureAlgebra::StructureAlgebra(Ring ring, std::vector<std::string> labels, StructureTensor tensor, Vector unit,
                                   CoordMatrix involution)
    : ring_(ring),
      labels_(std::move(labels)),
      tensor_(std::move(tensor)),
      unit_(std::move(unit)),
      involution_(std::move(involution)) {
  const std::size_t r = labels_.size();
  if (tensor_.rank() != r || unit_.size() != r || involution_.rows() != r || involution_.cols() != r) {
    throw DimensionError("structure algebra components disagree on the rank");
  }
  if (!(tensor_.ring() == ring_) || !(involution_.ring() == ring_)) {
    throw RingMismatchError(ring_.literal(), tensor_.ring().literal());
  }
}

StructureAlgebra StructureAlgebra::from_products(Ring ring, std::vector<std::string> labels, const ProductFn& product,
                                                 Vector unit, CoordMatrix involution) {
  const std::size_t r = labels.size();
  StructureTensor tensor(ring, r);
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) tensor.set_product_dense(u, v, product(u, v));
  return StructureAlgebra(ring, std::move(labels), std::move(tensor), std::move(unit), std::move(involution));
}

Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw DimensionError("coordinate vector has wrong length");
  Vector out = zero();
  const auto sa = support(a);
  const auto sb = support(b);
  for (auto u : sa) {
    for (auto v : sb) {
      const auto& terms = tensor_.product(u, v);
      if (terms.empty()) continue;
      const RingElt coeff = a[u] * b[v];
      for (const auto& t : terms) out[t.index] += coeff * t.coeff;
    }
  }
  return out;
}

bool StructureAlgebra::involution_is_signed_permutation() const {
  std::vector<bool> hit(rank(), false);
  const RingElt one = ring_.one();
  const RingElt minus_one = -one;
  for (std::size_t c = 0; c < rank(); ++c) {
    const auto s = support(involution_.column(c));
    if (s.size() != 1 || hit[s[0]]) return false;
    const RingElt& x = involution_(s[0], c);
    if (!(x == one) && !(x == minus_one)) return false;
    hit[s[0]] = true;
  }
  return true;
}

std::string StructureAlgebra::format(const Vector& v) const { return format_combination(labels_, v); }

nlohmann::json StructureAlgebra::to_json() const {
  nlohmann::json out;
  out["ring"] = ring_.literal();
  out["rank"] = rank();
  out["labels"] = labels_;
  auto tensor = nlohmann::json::array();
  for (std::size_t u = 0; u < rank(); ++u) {
    auto row = nlohmann::json::array();
    for (std::size_t v = 0; v < rank(); ++v) {
      auto cell = nlohmann::json::array();
      for (std::size_t w = 0; w < rank(); ++w) cell.push_back(tensor_.at(u, v, w).to_string());
      row.push_back(std::move(cell));
    }
    tensor.push_back(std::move(row));
  }
  out["tensor"] = std::move(tensor);
  out["unit"] = vector_json(unit_);
  out["involution"] = matrix_json(involution_);
  return out;
}

Report audit(const StructureAlgebra& a) {
  Report report;
  report.check = "algebra-audit";
  report.params = {{"ring", a.ring().literal()}, {"rank", a.rank()}};
  const std::size_t r = a.rank();

  ClauseCheck assoc("associativity");
  for (std::size_t u = 0; u < r && assoc.ok(); ++u)
    for (std::size_t v = 0; v < r && assoc.ok(); ++v) {
      const Vector uv = a.multiply(a.basis(u), a.basis(v));
      for (std::size_t w = 0; w < r; ++w) {
        const Vector lhs = a.multiply(uv, a.basis(w));
        const Vector rhs = a.multiply(a.basis(u), a.multiply(a.basis(v), a.basis(w)));
        if (!assoc.expect(lhs == rhs, [&] {
              return nlohmann::json{{"u", a.labels()[u]}, {"v", a.labels()[v]}, {"w", a.labels()[w]},
                                    {"(uv)w", a.format(lhs)}, {"u(vw)", a.format(rhs)}};
            }))
          break;
      }
    }
  report.add(std::move(assoc).finish());

  ClauseCheck unit("unit");
  for (std::size_t u = 0; u < r; ++u) {
    const Vector b = a.basis(u);
    const Vector left = a.multiply(a.unit(), b);
    const Vector right = a.multiply(b, a.unit());
    unit.expect(left == b && right == b, [&] {
      return nlohmann::json{{"u", a.labels()[u]}, {"1*u", a.format(left)}, {"u*1", a.format(right)}};
    });
  }
  report.add(std::move(unit).finish());

  ClauseCheck anti("involution-anti-multiplicative");
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) {
      const Vector lhs = a.involute(a.multiply(a.basis(u), a.basis(v)));
      const Vector rhs = a.multiply(a.involute(a.basis(v)), a.involute(a.basis(u)));
      anti.expect(lhs == rhs, [&] {
        return nlohmann::json{{"u", a.labels()[u]}, {"v", a.labels()[v]}, {"i(uv)", a.format(lhs)},
                              {"i(v)i(u)", a.format(rhs)}};
      });
    }
  report.add(std::move(anti).finish());

  ClauseCheck order("involution-order-2");
  for (std::size_t u = 0; u < r; ++u) {
    const Vector twice = a.involute(a.involute(a.basis(u)));
    order.expect(twice == a.basis(u), [&] { return nlohmann::json{{"u", a.labels()[u]}, {"i(i(u))", a.format(twice)}}; });
  }
  report.add(std::move(order).finish());
  return report;
}

// --- constructions ----------------------------------------------------------

AlgebraPtr algebra_of_censym(const Ring& ring, std::size_t n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, AlgebraPtr> cache;
  const auto key = std::make_pair(ring.literal(), n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto basis = canonical_basis(ring, n);
  std::vector<std::string> labels;
  std::vector<Vector> transposes;
  for (const auto& b : basis) {
    labels.push_back(b.index.label());
    transposes.push_back(coords(CentroMatrix::checked(b.matrix.matrix().transpose())));
  }
  auto algebra = std::make_shared<const StructureAlgebra>(
      ring, std::move(labels), *structure_constants(ring, n), coords(CentroMatrix::checked(Matrix::identity(ring, n))),
      CoordMatrix::from_columns(ring, basis.size(), transposes));
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(algebra)).first->second;
}

AlgebraPtr zero_algebra(const Ring& ring) {
  return std::make_shared<const StructureAlgebra>(ring, std::vector<std::string>{}, StructureTensor(ring, 0), Vector{},
                                                  CoordMatrix(ring, 0, 0));
}

namespace {

AlgebraPtr matrix_units(const Ring& coeffs, std::size_t m, bool grouped) {
  if (m == 0) return zero_algebra(coeffs);
  const std::size_t g = grouped ? 2 : 1;
  const std::size_t r = g * m * m;
  auto index = [&](std::size_t gen, std::size_t i, std::size_t j) { return g * ((i - 1) * m + (j - 1)) + gen; };

  std::vector<std::string> labels(r);
  CoordMatrix involution(coeffs, r, r);
  Vector unit = zero_vector(coeffs, r);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t gen = 0; gen < g; ++gen) {
        const std::string e = "E" + std::to_string(i) + "_" + std::to_string(j);
        labels[index(gen, i, j)] = gen ? "x*" + e : e;
        involution(index(gen, j, i), index(gen, i, j)) = coeffs.one();
      }
  for (std::size_t i = 1; i <= m; ++i) unit[index(0, i, i)] = coeffs.one();

  StructureTensor tensor(coeffs, r);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t l = 1; l <= m; ++l)
        for (std::size_t a = 0; a < g; ++a)
          for (std::size_t b = 0; b < g; ++b) {
            // (x^a E_ij)(x^b E_jl) = x^(a xor b) E_il
            tensor.set_product(index(a, i, j), index(b, j, l), {{index(a ^ b, i, l), coeffs.one()}});
          }
  return std::make_shared<const StructureAlgebra>(coeffs, std::move(labels), std::move(tensor), std::move(unit),
                                                  std::move(involution));
}

}  // namespace

AlgebraPtr full_matrix_algebra(const Ring& ring, std::size_t m) { return matrix_units(ring, m, false); }

AlgebraPtr group_matrix_algebra(const Ring& base, std::size_t m) { return matrix_units(base, m, true); }

AlgebraPtr group_algebra_c2(const Ring& base) {
  const auto m = group_matrix_algebra(base, 1);
  return std::make_shared<const StructureAlgebra>(base, std::vector<std::string>{"1", "x"}, m->tensor(), m->unit(),
                                                  m->involution());
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->ring() == b->ring())) throw RingMismatchError(a->ring().literal(), b->ring().literal());
  const Ring ring = a->ring();
  const std::size_t ra = a->rank(), rb = b->rank(), r = ra + rb;
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back("1:" + l);
  for (const auto& l : b->labels()) labels.push_back("2:" + l);
  StructureTensor tensor(ring, r);
  for (std::size_t u = 0; u < ra; ++u)
    for (std::size_t v = 0; v < ra; ++v) tensor.set_product(u, v, a->tensor().product(u, v));
  for (std::size_t u = 0; u < rb; ++u)
    for (std::size_t v = 0; v < rb; ++v) {
      std::vector<Term> terms = b->tensor().product(u, v);
      for (auto& t : terms) t.index += ra;
      tensor.set_product(ra + u, ra + v, std::move(terms));
    }
  Vector unit = a->unit();
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());
  CoordMatrix involution(ring, r, r);
  for (std::size_t x = 0; x < ra; ++x)
    for (std::size_t y = 0; y < ra; ++y) involution(x, y) = a->involution()(x, y);
  for (std::size_t x = 0; x < rb; ++x)
    for (std::size_t y = 0; y < rb; ++y) involution(ra + x, ra + y) = b->involution()(x, y);
  return std::make_shared<const StructureAlgebra>(ring, std::move(labels), std::move(tensor), std::move(unit),
                                                  std::move(involution));
}

IdealBasis ideal_generated(const AlgebraPtr& algebra, const std::vector<Vector>& gens) {
  if (gens.empty()) throw PreconditionError("ideal_generated needs at least one generator");
  const StructureAlgebra& a = *algebra;
  SpanBuilder span(a.ring(), a.rank());
  std::deque<Vector> queue(gens.begin(), gens.end());
  std::vector<Vector> deferred;

  auto push_products = [&](const Vector& v) {
    for (std::size_t u = 0; u < a.rank(); ++u) {
      queue.push_back(a.multiply(a.basis(u), v));
      queue.push_back(a.multiply(v, a.basis(u)));
    }
  };

  while (true) {
    while (!queue.empty()) {
      Vector v = span.reduce(std::move(queue.front()));
      queue.pop_front();
      if (is_zero(v)) continue;
      if (span.add(v) == SpanBuilder::AddResult::added) {
        push_products(v);
      } else {
        deferred.push_back(std::move(v));
      }
    }
    // Elements without a unit pivot may become reducible once more of the
    // ideal is known; retry them before giving up.
    bool progress = false;
    std::vector<Vector> still;
    for (auto& d : deferred) {
      Vector v = span.reduce(std::move(d));
      if (is_zero(v)) continue;
      if (span.add(v) == SpanBuilder::AddResult::added) {
        push_products(v);
        progress = true;
      } else {
        still.push_back(std::move(v));
      }
    }
    deferred = std::move(still);
    if (!progress) break;
  }
  if (!deferred.empty()) {
    throw FreenessUndetermined("ideal element " + a.format(deferred.front()) +
                               " cannot be reduced with a unit pivot; freeness undetermined");
  }
  return {algebra, span.rows()};
}

std::string to_string(MapProperty p) {
  switch (p) {
    case MapProperty::algebra_homomorphism:
      return "algebra-homomorphism";
    case MapProperty::left_module_homomorphism:
      return "left-module-homomorphism";
    case MapProperty::bimodule_homomorphism:
      return "bimodule-homomorphism";
    case MapProperty::bijective:
      return "bijective";
    case MapProperty::involution_compatible:
      return "involution-compatible";
  }
  return "?";
}

nlohmann::json LinearMapWitness::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  out["source"] = source->labels();
  out["target"] = target->labels();
  if (matrix.rows() == target->rank() && matrix.cols() == source->rank()) {
    auto images = nlohmann::json::object();
    for (std::size_t u = 0; u < source->rank(); ++u) images[source->labels()[u]] = target->format(matrix.column(u));
    out["images"] = std::move(images);
  }
  out["matrix"] = matrix_json(matrix);
  if (inverse) out["inverse"] = matrix_json(*inverse);
  auto claims_json = nlohmann::json::array();
  for (auto c : claims) claims_json.push_back(to_string(c));
  out["claims"] = std::move(claims_json);
  return out;
}

nlohmann::json ModuleMapWitness::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  auto src = nlohmann::json::array();
  for (const auto& v : source_basis) src.push_back(algebra->format(v));
  auto dst = nlohmann::json::array();
  for (const auto& v : target_basis) dst.push_back(algebra->format(v));
  out["source_basis"] = std::move(src);
  out["target_basis"] = std::move(dst);
  out["matrix"] = matrix_json(matrix);
  if (inverse) out["inverse"] = matrix_json(*inverse);
  auto claims_json = nlohmann::json::array();
  for (auto c : claims) claims_json.push_back(to_string(c));
  out["claims"] = std::move(claims_json);
  return out;
}

namespace {

Clause check_inverse(const CoordMatrix& matrix, const std::optional<CoordMatrix>& inverse) {
  ClauseCheck clause(to_string(MapProperty::bijective));
  if (!inverse) {
    clause.expect(false, [] { return nlohmann::json{{"reason", "no inverse supplied"}}; });
    return std::move(clause).finish();
  }
  if (inverse->rows() != matrix.cols() || inverse->cols() != matrix.rows()) {
    clause.expect(false, [] { return nlohmann::json{{"reason", "inverse has the wrong shape"}}; });
    return std::move(clause).finish();
  }
  const Ring& ring = matrix.ring();
  const CoordMatrix left = *inverse * matrix;
  const CoordMatrix right = matrix * *inverse;
  clause.expect(left == CoordMatrix::identity(ring, matrix.cols()),
                [] { return nlohmann::json{{"reason", "inverse * map is not the identity"}}; });
  clause.expect(right == CoordMatrix::identity(ring, matrix.rows()),
                [] { return nlohmann::json{{"reason", "map * inverse is not the identity"}}; });
  return std::move(clause).finish();
}

}  // namespace

Report check_witness(const LinearMapWitness& w) {
  Report report;
  report.check = "witness:" + w.name;
  report.witness = w.to_json();
  const StructureAlgebra& s = *w.source;
  const StructureAlgebra& t = *w.target;
  if (w.matrix.rows() != t.rank() || w.matrix.cols() != s.rank()) {
    ClauseCheck shape("shape");
    shape.expect(false, [&] {
      return nlohmann::json{{"rows", w.matrix.rows()}, {"cols", w.matrix.cols()}, {"expected_rows", t.rank()},
                            {"expected_cols", s.rank()}};
    });
    report.add(std::move(shape).finish());
    return report;
  }

  for (auto claim : w.claims) {
    switch (claim) {
      case MapProperty::algebra_homomorphism: {
        ClauseCheck c(to_string(claim));
        const Vector image_of_one = w.apply(s.unit());
        c.expect(image_of_one == t.unit(),
                 [&] { return nlohmann::json{{"identity", "phi(1) != 1"}, {"phi(1)", t.format(image_of_one)}}; });
        for (std::size_t u = 0; u < s.rank(); ++u)
          for (std::size_t v = 0; v < s.rank(); ++v) {
            const Vector lhs = w.apply(s.multiply(s.basis(u), s.basis(v)));
            const Vector rhs = t.multiply(w.apply(s.basis(u)), w.apply(s.basis(v)));
            c.expect(lhs == rhs, [&] {
              return nlohmann::json{{"u", s.labels()[u]}, {"v", s.labels()[v]}, {"phi(uv)", t.format(lhs)},
                                    {"phi(u)phi(v)", t.format(rhs)}};
            });
          }
        report.add(std::move(c).finish());
        break;
      }
      case MapProperty::bijective:
        report.add(check_inverse(w.matrix, w.inverse));
        break;
      case MapProperty::involution_compatible: {
        ClauseCheck c(to_string(claim));
        for (std::size_t u = 0; u < s.rank(); ++u) {
          const Vector lhs = t.involute(w.apply(s.basis(u)));
          const Vector rhs = w.apply(s.involute(s.basis(u)));
          c.expect(lhs == rhs, [&] {
            return nlohmann::json{{"u", s.labels()[u]}, {"i(phi(u))", t.format(lhs)}, {"phi(i(u))", t.format(rhs)}};
          });
        }
        report.add(std::move(c).finish());
        break;
      }
      case MapProperty::left_module_homomorphism:
      case MapProperty::bimodule_homomorphism: {
        ClauseCheck c(to_string(claim));
        c.expect(false, [] { return nlohmann::json{{"reason", "module properties apply to module maps"}}; });
        report.add(std::move(c).finish());
        break;
      }
    }
  }
  return report;
}

Report check_witness(const ModuleMapWitness& w) {
  Report report;
  report.check = "witness:" + w.name;
  report.witness = w.to_json();
  const StructureAlgebra& a = *w.algebra;
  const Ring& ring = a.ring();
  if (w.matrix.rows() != w.target_basis.size() || w.matrix.cols() != w.source_basis.size()) {
    ClauseCheck shape("shape");
    shape.expect(false, [] { return nlohmann::json{{"reason", "matrix shape does not match the module bases"}}; });
    report.add(std::move(shape).finish());
    return report;
  }

  std::optional<BasisSolver> source_solver;
  std::optional<BasisSolver> target_solver;
  try {
    source_solver.emplace(ring, a.rank(), w.source_basis);
    target_solver.emplace(ring, a.rank(), w.target_basis);
  } catch (const FreenessUndetermined& e) {
    Clause c{"module-bases-free", Verdict::undetermined, 0, nullptr, e.what()};
    report.add(std::move(c));
    return report;
  } catch (const PreconditionError& e) {
    ClauseCheck c("module-bases-free");
    c.expect(false, [&] { return nlohmann::json{{"reason", e.what()}}; });
    report.add(std::move(c).finish());
    return report;
  }

  // Image in A-coordinates of a source-module coordinate vector.
  auto image = [&](const Vector& module_coords) {
    const Vector target_coords = w.matrix.apply(module_coords);
    Vector out = a.zero();
    for (std::size_t l = 0; l < target_coords.size(); ++l) axpy(out, target_coords[l], w.target_basis[l]);
    return out;
  };

  auto check_side = [&](MapProperty claim, bool right_too) {
    ClauseCheck c(to_string(claim));
    for (std::size_t s = 0; s < a.rank(); ++s) {
      for (std::size_t k = 0; k < w.source_basis.size(); ++k) {
        const Vector& v = w.source_basis[k];
        const Vector phi_v = image(unit_vector(ring, w.source_basis.size(), k));
        for (int side = 0; side < (right_too ? 2 : 1); ++side) {
          const Vector sv = side == 0 ? a.multiply(a.basis(s), v) : a.multiply(v, a.basis(s));
          const auto sv_coords = source_solver->solve(sv);
          if (!c.expect(sv_coords.has_value(), [&] {
                return nlohmann::json{{"s", a.labels()[s]}, {"v", a.format(v)}, {"side", side == 0 ? "left" : "right"},
                                      {"reason", "product leaves the source module"}};
              }))
            continue;
          const Vector lhs = image(*sv_coords);
          const Vector rhs = side == 0 ? a.multiply(a.basis(s), phi_v) : a.multiply(phi_v, a.basis(s));
          c.expect(lhs == rhs, [&] {
            return nlohmann::json{{"s", a.labels()[s]},      {"v", a.format(v)},
                                  {"side", side == 0 ? "left" : "right"}, {"phi(sv)", a.format(lhs)},
                                  {"s*phi(v)", a.format(rhs)}};
          });
        }
      }
    }
    report.add(std::move(c).finish());
  };

  for (auto claim : w.claims) {
    switch (claim) {
      case MapProperty::left_module_homomorphism:
        check_side(claim, false);
        break;
      case MapProperty::bimodule_homomorphism:
        check_side(claim, true);
        break;
      case MapProperty::bijective:
        report.add(check_inverse(w.matrix, w.inverse));
        break;
      case MapProperty::algebra_homomorphism:
      case MapProperty::involution_compatible: {
        ClauseCheck c(to_string(claim));
        c.expect(false, [] { return nlohmann::json{{"reason", "algebra properties apply to algebra maps"}}; });
        report.add(std::move(c).finish());
        break;
      }
    }
  }
  return report;
}

Quotient quotient_by_ideal(const AlgebraPtr& algebra, const IdealBasis& ideal,
                           std::optional<std::vector<Vector>> complement) {
  const StructureAlgebra& a = *algebra;
  const Ring& ring = a.ring();
  const std::size_t r = a.rank();

  SpanBuilder ideal_span(ring, r);
  for (const auto& v : ideal.basis) {
    if (ideal_span.add(v) != SpanBuilder::AddResult::added) {
      throw PreconditionError("ideal basis is not free with unit pivots");
    }
  }
  if (!complement) {
    std::vector<bool> is_pivot(r, false);
    for (auto p : ideal_span.pivots()) is_pivot[p] = true;
    complement.emplace();
    for (std::size_t u = 0; u < r; ++u)
      if (!is_pivot[u]) complement->push_back(a.basis(u));
  }
  const std::size_t q = complement->size();
  if (ideal.basis.size() + q != r) {
    throw PreconditionError("ideal and complement ranks do not add up to the algebra rank");
  }
  std::vector<Vector> combined = ideal.basis;
  combined.insert(combined.end(), complement->begin(), complement->end());
  std::optional<CoordMatrix> inv;
  try {
    inv = invert(CoordMatrix::from_columns(ring, r, combined));
  } catch (const FreenessUndetermined&) {
    throw PreconditionError("no free complement found: elimination needs a non-unit pivot");
  }
  if (!inv) throw PreconditionError("no free complement found: ideal and complement are dependent");

  CoordMatrix projection(ring, q, r);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t u = 0; u < r; ++u) projection(k, u) = (*inv)(ideal.basis.size() + k, u);

  std::vector<std::string> labels;
  for (const auto& c : *complement) {
    const auto s = support(c);
    labels.push_back("[" + (s.size() == 1 && c[s[0]].is_one() ? a.labels()[s[0]] : a.format(c)) + "]");
  }

  bool stable = true;
  for (const auto& v : ideal.basis) stable = stable && ideal_span.contains(a.involute(v));
  CoordMatrix involution = CoordMatrix::identity(ring, q);
  if (stable) {
    std::vector<Vector> cols;
    for (const auto& c : *complement) cols.push_back(projection.apply(a.involute(c)));
    involution = CoordMatrix::from_columns(ring, q, cols);
  }

  const auto& comp = *complement;
  auto quotient = std::make_shared<const StructureAlgebra>(StructureAlgebra::from_products(
      ring, std::move(labels), [&](std::size_t x, std::size_t y) { return projection.apply(a.multiply(comp[x], comp[y])); },
      projection.apply(a.unit()), std::move(involution)));

  LinearMapWitness proj{"projection", algebra, quotient, projection, std::nullopt, {MapProperty::algebra_homomorphism}};
  return {quotient, std::move(proj), std::move(*complement)};
}

AlgebraPtr subalgebra_on(const AlgebraPtr& algebra, const std::vector<Vector>& basis, std::vector<std::string> labels,
                         const Vector& unit_in_sub) {
  const StructureAlgebra& a = *algebra;
  const Ring& ring = a.ring();
  const BasisSolver solver(ring, a.rank(), basis);
  auto coords_of = [&](const Vector& v) {
    auto c = solver.solve(v);
    if (!c) throw PreconditionError("product " + a.format(v) + " leaves the subalgebra span");
    return *c;
  };
  bool stable = true;
  std::vector<Vector> inv_cols;
  for (const auto& b : basis) {
    auto c = solver.solve(a.involute(b));
    if (!c) {
      stable = false;
      break;
    }
    inv_cols.push_back(*c);
  }
  CoordMatrix involution =
      stable ? CoordMatrix::from_columns(ring, basis.size(), inv_cols) : CoordMatrix::identity(ring, basis.size());
  return std::make_shared<const StructureAlgebra>(StructureAlgebra::from_products(
      ring, std::move(labels), [&](std::size_t x, std::size_t y) { return coords_of(a.multiply(basis[x], basis[y])); },
      unit_in_sub, std::move(involution)));
}

CentreResult centre(const StructureAlgebra& a, const std::vector<Vector>& candidates) {
  CentreResult result;
  Report& report = result.report;
  report.check = "centre";
  report.params = {{"ring", a.ring().literal()}, {"rank", a.rank()}};
  const Ring& ring = a.ring();
  const std::size_t r = a.rank();

  ClauseCheck central("candidates-central");
  for (const auto& z : candidates) {
    for (std::size_t u = 0; u < r; ++u) {
      const Vector zb = a.multiply(z, a.basis(u));
      const Vector bz = a.multiply(a.basis(u), z);
      central.expect(zb == bz, [&] {
        return nlohmann::json{{"z", a.format(z)}, {"b", a.labels()[u]}, {"zb", a.format(zb)}, {"bz", a.format(bz)}};
      });
    }
  }
  report.add(std::move(central).finish());

  ClauseCheck independent("candidates-independent");
  SpanBuilder cand_span(ring, r);
  for (const auto& z : candidates) {
    const auto added = cand_span.add(z);
    if (added == SpanBuilder::AddResult::no_unit_pivot) {
      independent.undetermined("candidate " + a.format(z) + " has no unit pivot");
    } else {
      independent.expect(added == SpanBuilder::AddResult::added,
                         [&] { return nlohmann::json{{"dependent", a.format(z)}}; });
    }
  }
  report.add(std::move(independent).finish());

  // z = sum_u z_u b_u is central iff sum_u z_u (T[u][v][w] - T[v][u][w]) = 0
  // for all v, w.
  CoordMatrix system(ring, r * r, r);
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) {
      for (const auto& t : a.tensor().product(u, v)) system(v * r + t.index, u) += t.coeff;
      for (const auto& t : a.tensor().product(v, u)) system(v * r + t.index, u) -= t.coeff;
    }
  try {
    result.basis = nullspace(system).basis;
    result.complete = true;
    ClauseCheck spans("nullspace-contains-candidates");
    SpanBuilder centre_span(ring, r);
    for (const auto& z : result.basis) centre_span.add(z);
    for (const auto& z : candidates) {
      spans.expect(centre_span.contains(z), [&] { return nlohmann::json{{"outside", a.format(z)}}; });
    }
    spans.note("dimension " + std::to_string(result.basis.size()));
    report.add(std::move(spans).finish());
  } catch (const FreenessUndetermined& e) {
    result.complete = false;
    result.basis = candidates;
    Clause c{"nullspace", Verdict::pass, 0, nullptr,
             std::string("commutation system not solvable with unit pivots; containment certificate only (") +
                 e.what() + ")"};
    report.add(std::move(c));
  }

  auto basis_json = nlohmann::json::array();
  for (const auto& z : result.basis) basis_json.push_back(a.format(z));
  report.witness = {{"complete", result.complete}, {"dimension", result.basis.size()}, {"basis", basis_json}};
  return result;
}

}  // namespace censym
