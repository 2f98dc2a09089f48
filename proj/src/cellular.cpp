#include "censym/cellular.hpp"

#include "censym/centro.hpp"
#include "censym/errors.hpp"
#include "censym/structure.hpp"

namespace censym::cellular {

namespace {

nlohmann::json formatted(const StructureAlgebra& a, const std::vector<Vector>& vs) {
  auto out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(a.format(v));
  return out;
}

Clause blocked(const std::string& name, Verdict verdict, const std::string& why) {
  Clause c{name, verdict, 0, nullptr, why};
  if (verdict == Verdict::fail) c.counterexample = {{"reason", why}};
  return c;
}

bool same_span(const Ring& ring, std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  SpanBuilder sa(ring, dim), sb(ring, dim);
  for (const auto& v : a) sa.add(v);
  for (const auto& v : b) sb.add(v);
  if (sa.rank() != sb.rank()) return false;
  for (const auto& v : a)
    if (!sb.contains(v)) return false;
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

}  // namespace

nlohmann::json CellIdealWitness::to_json() const {
  nlohmann::json out;
  out["ideal"] = formatted(*algebra, ideal);
  out["delta"] = formatted(*algebra, delta);
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < alpha.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < alpha.cols(); ++c) row.push_back(alpha(r, c).to_string());
    rows.push_back(std::move(row));
  }
  out["alpha"] = std::move(rows);
  return out;
}

Report verify_cell_ideal(const CellIdealWitness& w) {
  const StructureAlgebra& a = *w.algebra;
  const Ring& ring = a.ring();
  const std::size_t r = a.rank(), nj = w.ideal.size(), nd = w.delta.size();
  Report report;
  report.check = "cell-ideal";
  report.params = {{"ring", ring.literal()}, {"rank", r}, {"ideal_rank", nj}, {"delta_rank", nd}};
  report.witness = w.to_json();

  static const char* const kNames[] = {"involution-stable", "delta-free-rank", "bimodule", "bijective",
                                       "commuting-square"};
  auto block_from = [&](std::size_t first, Verdict verdict, const std::string& why) {
    for (std::size_t k = first; k < 5; ++k) report.add(blocked(kNames[k], verdict, why));
  };

  std::optional<BasisSolver> jsol;
  try {
    jsol.emplace(ring, r, w.ideal);
  } catch (const FreenessUndetermined& e) {
    block_from(0, Verdict::undetermined, std::string("ideal basis: ") + e.what());
    return report;
  } catch (const PreconditionError& e) {
    block_from(0, Verdict::fail, std::string("ideal basis: ") + e.what());
    return report;
  }

  ClauseCheck stable(kNames[0]);
  std::vector<Vector> involuted_coords(nj);
  for (std::size_t t = 0; t < nj; ++t) {
    const Vector it = a.involute(w.ideal[t]);
    auto c = jsol->solve(it);
    if (stable.expect(c.has_value(), [&] {
          return nlohmann::json{{"element", a.format(w.ideal[t])}, {"involuted", a.format(it)}};
        }))
      involuted_coords[t] = std::move(*c);
  }
  const bool is_stable = stable.ok();
  report.add(std::move(stable).finish());

  // Delta: free, inside J, a left ideal, |J| = |Delta|^2.
  ClauseCheck free_rank(kNames[1]);
  std::optional<BasisSolver> dsol;
  try {
    dsol.emplace(ring, r, w.delta);
  } catch (const FreenessUndetermined& e) {
    free_rank.undetermined(std::string("delta basis: ") + e.what());
  } catch (const PreconditionError& e) {
    free_rank.expect(false, [&] { return nlohmann::json{{"reason", std::string("delta basis: ") + e.what()}}; });
  }
  free_rank.expect(nj == nd * nd, [&] { return nlohmann::json{{"ideal_rank", nj}, {"delta_rank", nd}}; });
  free_rank.expect(w.alpha.rows() == nd * nd && w.alpha.cols() == nj, [&] {
    return nlohmann::json{{"reason", "alpha shape"}, {"rows", w.alpha.rows()}, {"cols", w.alpha.cols()}};
  });
  for (const auto& d : w.delta)
    free_rank.expect(jsol->contains(d), [&] { return nlohmann::json{{"outside_ideal", a.format(d)}}; });
  // lambda[u][x] = coordinates of b_u * delta_x over Delta.
  std::vector<std::vector<Vector>> lambda(r, std::vector<Vector>(nd));
  if (dsol) {
    for (std::size_t u = 0; u < r; ++u)
      for (std::size_t x = 0; x < nd; ++x) {
        const Vector p = a.multiply(a.basis(u), w.delta[x]);
        auto c = dsol->solve(p);
        if (free_rank.expect(c.has_value(), [&] {
              return nlohmann::json{{"reason", "delta is not a left ideal"}, {"b", a.labels()[u]},
                                    {"delta", a.format(w.delta[x])}, {"product", a.format(p)}};
            }))
          lambda[u][x] = std::move(*c);
      }
  }
  const bool delta_ok = free_rank.ok();
  report.add(std::move(free_rank).finish());
  if (!delta_ok) {
    block_from(2, Verdict::fail, "delta-free-rank failed");
    return report;
  }

  auto alpha_of = [&](const Vector& jcoords) { return w.alpha.apply(jcoords); };

  ClauseCheck bimodule(kNames[2]);
  for (std::size_t u = 0; u < r; ++u) {
    // mu[x] = coordinates of i(b_u) * delta_x over Delta, so that
    // i(delta_x) * b_u = i(sum_y mu[x][y] delta_y).
    std::vector<Vector> mu(nd);
    const Vector ib = a.involute(a.basis(u));
    for (std::size_t x = 0; x < nd; ++x) {
      auto c = dsol->solve(a.multiply(ib, w.delta[x]));
      mu[x] = c ? std::move(*c) : zero_vector(ring, nd);
    }
    for (std::size_t t = 0; t < nj; ++t) {
      const Vector col = w.alpha.column(t);
      for (int side = 0; side < 2; ++side) {
        const Vector prod = side == 0 ? a.multiply(a.basis(u), w.ideal[t]) : a.multiply(w.ideal[t], a.basis(u));
        auto c = jsol->solve(prod);
        if (!bimodule.expect(c.has_value(), [&] {
              return nlohmann::json{{"reason", "ideal not closed"}, {"b", a.labels()[u]},
                                    {"t", a.format(w.ideal[t])}, {"side", side == 0 ? "left" : "right"}};
            }))
          continue;
        const Vector lhs = alpha_of(*c);
        Vector rhs = zero_vector(ring, nd * nd);
        for (std::size_t x = 0; x < nd; ++x)
          for (std::size_t y = 0; y < nd; ++y) {
            const RingElt& coeff = col[x * nd + y];
            if (coeff.is_zero()) continue;
            if (side == 0) {
              for (std::size_t z = 0; z < nd; ++z) rhs[z * nd + y] += coeff * lambda[u][x][z];
            } else {
              for (std::size_t z = 0; z < nd; ++z) rhs[x * nd + z] += coeff * mu[y][z];
            }
          }
        bimodule.expect(lhs == rhs, [&] {
          return nlohmann::json{{"b", a.labels()[u]},
                                {"t", a.format(w.ideal[t])},
                                {"side", side == 0 ? "left" : "right"},
                                {"alpha(product)", vector_json(lhs)},
                                {"product(alpha)", vector_json(rhs)}};
        });
      }
    }
  }
  report.add(std::move(bimodule).finish());

  ClauseCheck bijective(kNames[3]);
  try {
    const auto inv = invert(w.alpha);
    bijective.expect(inv.has_value(), [] { return nlohmann::json{{"reason", "alpha is singular"}}; });
  } catch (const FreenessUndetermined& e) {
    bijective.undetermined(e.what());
  }
  report.add(std::move(bijective).finish());

  ClauseCheck square(kNames[4]);
  if (!is_stable) {
    report.add(blocked(kNames[4], Verdict::fail, "ideal is not involution stable"));
    return report;
  }
  for (std::size_t t = 0; t < nj; ++t) {
    const Vector lhs = alpha_of(involuted_coords[t]);
    const Vector col = w.alpha.column(t);
    Vector rhs = zero_vector(ring, nd * nd);
    for (std::size_t x = 0; x < nd; ++x)
      for (std::size_t y = 0; y < nd; ++y) rhs[y * nd + x] = col[x * nd + y];
    square.expect(lhs == rhs, [&] {
      return nlohmann::json{{"t", a.format(w.ideal[t])}, {"alpha(i(t))", vector_json(lhs)}, {"swap(alpha(t))", vector_json(rhs)}};
    });
  }
  report.add(std::move(square).finish());
  return report;
}

nlohmann::json CellChainWitness::to_json() const {
  nlohmann::json out;
  out["rank"] = algebra->rank();
  auto layers_json = nlohmann::json::array();
  for (const auto& layer : layers) {
    layers_json.push_back({{"rank", layer.span.size()},
                           {"delta_rank", layer.delta.size()},
                           {"span", formatted(*algebra, layer.span)},
                           {"delta", formatted(*algebra, layer.delta)}});
  }
  out["layers"] = std::move(layers_json);
  return out;
}

CellChainWitness assemble_chain(const AlgebraPtr& algebra, const std::vector<LayerSpec>& layers) {
  CellChainWitness chain{algebra, {}};
  const Ring& ring = algebra->ring();
  std::vector<Vector> earlier;
  for (std::size_t p = 0; p < layers.size(); ++p) {
    std::vector<Vector> complement;
    for (std::size_t q = p; q < layers.size(); ++q)
      complement.insert(complement.end(), layers[q].span.begin(), layers[q].span.end());
    Quotient quotient = quotient_by_ideal(algebra, IdealBasis{algebra, earlier}, complement);
    const std::size_t qr = quotient.algebra->rank();
    CellIdealWitness cell{quotient.algebra, {}, {}, layers[p].alpha};
    for (std::size_t t = 0; t < layers[p].span.size(); ++t) cell.ideal.push_back(unit_vector(ring, qr, t));
    for (const auto& d : layers[p].delta) cell.delta.push_back(quotient.projection.apply(d));
    chain.layers.push_back({layers[p].span, layers[p].delta, std::move(cell)});
    earlier.insert(earlier.end(), layers[p].span.begin(), layers[p].span.end());
  }
  return chain;
}

Report verify_cell_chain(const CellChainWitness& w) {
  const StructureAlgebra& a = *w.algebra;
  const Ring& ring = a.ring();
  const std::size_t r = a.rank();
  Report report;
  report.check = "cell-chain";
  report.params = {{"ring", ring.literal()}, {"rank", r}, {"layers", w.layers.size()}};
  report.witness = w.to_json();

  ClauseCheck direct("direct-sum");
  std::vector<Vector> all;
  for (const auto& layer : w.layers) all.insert(all.end(), layer.span.begin(), layer.span.end());
  if (direct.expect(all.size() == r, [&] { return nlohmann::json{{"total_rank", all.size()}, {"rank", r}}; })) {
    try {
      const auto inv = invert(CoordMatrix::from_columns(ring, r, all));
      direct.expect(inv.has_value(), [] { return nlohmann::json{{"reason", "layers are dependent"}}; });
    } catch (const FreenessUndetermined& e) {
      direct.undetermined(e.what());
    }
  }
  report.add(std::move(direct).finish());

  ClauseCheck ideals("partial-sums-ideals");
  SpanBuilder partial(ring, r);
  for (std::size_t p = 0; p < w.layers.size(); ++p) {
    for (const auto& v : w.layers[p].span) partial.add(v);
    for (std::size_t q = 0; q <= p; ++q)
      for (const auto& v : w.layers[q].span)
        for (std::size_t u = 0; u < r; ++u) {
          const Vector left = a.multiply(a.basis(u), v);
          const Vector right = a.multiply(v, a.basis(u));
          ideals.expect(partial.contains(left) && partial.contains(right), [&] {
            return nlohmann::json{{"partial_sum", p + 1}, {"element", a.format(v)}, {"b", a.labels()[u]}};
          });
        }
  }
  report.add(std::move(ideals).finish());

  ClauseCheck stable("layers-involution-stable");
  for (std::size_t p = 0; p < w.layers.size(); ++p) {
    SpanBuilder layer(ring, r);
    for (const auto& v : w.layers[p].span) layer.add(v);
    for (const auto& v : w.layers[p].span) {
      const Vector iv = a.involute(v);
      stable.expect(layer.contains(iv), [&] {
        return nlohmann::json{{"layer", p + 1}, {"element", a.format(v)}, {"involuted", a.format(iv)}};
      });
    }
  }
  report.add(std::move(stable).finish());

  ClauseCheck ranks("rank-sum");
  std::size_t sum = 0;
  for (const auto& layer : w.layers) sum += layer.delta.size() * layer.delta.size();
  ranks.expect(sum == r, [&] { return nlohmann::json{{"sum_delta_squared", sum}, {"rank", r}}; });
  report.add(std::move(ranks).finish());

  for (std::size_t p = 0; p < w.layers.size(); ++p)
    report.absorb(verify_cell_ideal(w.layers[p].cell), "layer" + std::to_string(p + 1) + "/");
  return report;
}

CellChainWitness cell_chain_odd(const Ring& ring, std::size_t n) {
  if (n % 2 == 0) throw PreconditionError("cell_chain_odd needs odd n");
  const std::size_t m = n / 2;
  auto a = algebra_of_censym(ring, n);
  using structure::f_vector;

  LayerSpec first{{}, {}, CoordMatrix::identity(ring, (m + 1) * (m + 1))};
  for (std::size_t x = 1; x <= m + 1; ++x) first.delta.push_back(f_vector(ring, n, x, m + 1));
  // alpha(delta_x i(delta_y)) = delta_x (x) i(delta_y)
  for (const auto& dx : first.delta)
    for (const auto& dy : first.delta) first.span.push_back(a->multiply(dx, a->involute(dy)));

  std::vector<LayerSpec> layers{std::move(first)};
  if (m > 0) {
    LayerSpec second{{}, {}, CoordMatrix::identity(ring, m * m)};
    for (std::size_t i = 1; i <= m; ++i) {
      second.delta.push_back(f_vector(ring, n, i, 1));
      for (std::size_t j = 1; j <= m; ++j) second.span.push_back(f_vector(ring, n, i, j));
    }
    layers.push_back(std::move(second));
  }
  return assemble_chain(a, layers);
}

CellChainWitness cell_chain_even(const Ring& ring, std::size_t n) {
  if (n == 0 || n % 2 == 1) throw PreconditionError("cell_chain_even needs even n >= 2");
  const std::size_t m = n / 2;
  const LinearMapWitness phi = structure::iso_even(ring, m);
  const std::size_t mr = phi.source->rank();
  // Coordinates in M_m(R[C2]) of (c0 + c1 x) E_ij.
  auto element = [&](std::size_t i, std::size_t j, long c0, long c1) {
    Vector v = zero_vector(ring, mr);
    const std::size_t k = 2 * ((i - 1) * m + (j - 1));
    v[k] = ring.from_int(c0);
    v[k + 1] = ring.from_int(c1);
    return phi.apply(v);
  };
  LayerSpec first{{}, {}, CoordMatrix::identity(ring, m * m)};
  LayerSpec second{{}, {}, CoordMatrix::identity(ring, m * m)};
  for (std::size_t i = 1; i <= m; ++i) {
    first.delta.push_back(element(i, 1, 1, -1));
    second.delta.push_back(element(i, 1, 1, 0));
    for (std::size_t j = 1; j <= m; ++j) {
      first.span.push_back(element(i, j, 1, -1));
      second.span.push_back(element(i, j, 1, 0));
    }
  }
  return assemble_chain(phi.target, {std::move(first), std::move(second)});
}

CellChainWitness cell_chain(const Ring& ring, std::size_t n) {
  return n % 2 == 1 ? cell_chain_odd(ring, n) : cell_chain_even(ring, n);
}

nlohmann::json HeredityWitness::to_json() const {
  nlohmann::json out;
  out["e"] = algebra->format(e);
  out["Ae"] = formatted(*algebra, ae_basis);
  out["eA"] = formatted(*algebra, ea_basis);
  out["AeA_rank"] = ideal_basis.size();
  if (cell) out["cell"] = cell->to_json();
  return out;
}

HeredityResult heredity_check(const AlgebraPtr& algebra, const Vector& e) {
  const StructureAlgebra& a = *algebra;
  const Ring& ring = a.ring();
  const std::size_t r = a.rank();
  if (!(a.multiply(e, e) == e)) throw PreconditionError(a.format(e) + " is not idempotent");

  HeredityResult result;
  Report& report = result.report;
  report.check = "heredity";
  report.params = {{"ring", ring.literal()}, {"rank", r}, {"e", a.format(e)}};

  ClauseCheck corner("eAe = R e");
  std::size_t k = r;
  std::optional<RingElt> inv;
  for (std::size_t x = 0; x < r && !inv; ++x) {
    if (e[x].is_zero()) continue;
    inv = e[x].inverse();
    if (inv) k = x;
  }
  if (is_zero(e)) {
    corner.expect(false, [] { return nlohmann::json{{"reason", "e = 0"}}; });
  } else if (!inv) {
    corner.undetermined("e has no unit coordinate");
  } else {
    for (std::size_t u = 0; u < r; ++u) {
      const Vector ebe = a.multiply(a.multiply(e, a.basis(u)), e);
      const RingElt lambda = ebe[k] * *inv;
      corner.expect(ebe == lambda * e, [&] { return nlohmann::json{{"b", a.labels()[u]}, {"ebe", a.format(ebe)}}; });
    }
  }
  report.add(std::move(corner).finish());

  auto side_basis = [&](bool left, std::vector<Vector>& out) {
    ClauseCheck c(left ? "Ae free" : "eA free");
    SpanBuilder span(ring, r);
    for (std::size_t u = 0; u < r; ++u) {
      const Vector p = left ? a.multiply(a.basis(u), e) : a.multiply(e, a.basis(u));
      if (span.add(p) == SpanBuilder::AddResult::no_unit_pivot)
        c.undetermined("product with " + a.labels()[u] + " has no unit pivot");
    }
    out = span.inputs();
    c.note("rank " + std::to_string(out.size()));
    report.add(std::move(c).finish());
  };
  std::vector<Vector> ae, ea;
  side_basis(true, ae);
  side_basis(false, ea);

  ClauseCheck inj("multiplication injective");
  SpanBuilder image(ring, r);
  for (const auto& p : ae)
    for (const auto& q : ea) {
      const Vector pq = a.multiply(p, q);
      switch (image.add(pq)) {
        case SpanBuilder::AddResult::added:
          inj.expect(true, [] { return nullptr; });
          break;
        case SpanBuilder::AddResult::in_span:
          inj.expect(false, [&] {
            return nlohmann::json{{"p", a.format(p)}, {"q", a.format(q)}, {"product", a.format(pq)},
                                  {"reason", "product depends on earlier products"}};
          });
          break;
        case SpanBuilder::AddResult::no_unit_pivot:
          inj.undetermined("product " + a.format(pq) + " has no unit pivot");
          break;
      }
    }
  inj.note("AeA rank " + std::to_string(image.rank()));
  report.add(std::move(inj).finish());

  if (!report.passed()) return result;

  HeredityWitness w{algebra, e, ae, ea, image.inputs(), std::nullopt};
  if (a.involute(e) == e) {
    CellIdealWitness cell{algebra, {}, ae, CoordMatrix::identity(ring, ae.size() * ae.size())};
    for (const auto& p : ae)
      for (const auto& q : ae) cell.ideal.push_back(a.multiply(p, a.involute(q)));
    report.absorb(verify_cell_ideal(cell), "induced-cell/");
    w.cell = std::move(cell);
  }
  report.witness = w.to_json();
  if (report.passed()) result.witness = std::move(w);
  return result;
}

HeredityChain quasi_hereditary_chain_odd(const Ring& ring, std::size_t n) {
  if (n % 2 == 0) throw PreconditionError("quasi_hereditary_chain_odd needs odd n");
  const std::size_t m = n / 2;
  auto a = algebra_of_censym(ring, n);
  HeredityChain chain;
  Report& report = chain.report;
  report.check = "quasi-hereditary-chain";
  report.params = {{"n", n}, {"ring", ring.literal()}};

  const Vector mid = structure::f_vector(ring, n, m + 1, m + 1);
  chain.steps.push_back(heredity_check(a, mid));
  report.absorb(chain.steps.back().report, "step1/");
  std::size_t covered = chain.steps.back().witness ? chain.steps.back().witness->ideal_basis.size() : 0;
  auto idempotents = nlohmann::json::array({a->format(mid)});

  if (m > 0) {
    auto q = structure::iso_odd_quotient(ring, m);
    ClauseCheck agree("step1 ideal = ideal of f_{m+1}");
    const auto& w1 = chain.steps.back().witness;
    agree.expect(w1 && same_span(ring, a->rank(), w1->ideal_basis, q.ideal.basis),
                 [] { return nlohmann::json{{"reason", "AeA differs from the generated ideal"}}; });
    report.add(std::move(agree).finish());

    const AlgebraPtr& quotient = q.quotient.algebra;
    chain.steps.push_back(heredity_check(quotient, quotient->basis(0)));
    report.absorb(chain.steps.back().report, "step2/");
    if (chain.steps.back().witness) covered += chain.steps.back().witness->ideal_basis.size();
    idempotents.push_back(quotient->labels()[0]);
  }

  ClauseCheck exhaust("chain exhausts the algebra");
  exhaust.expect(covered == a->rank(), [&] { return nlohmann::json{{"covered", covered}, {"rank", a->rank()}}; });
  report.add(std::move(exhaust).finish());
  report.witness = {{"length", chain.steps.size()}, {"idempotents", idempotents}};
  return chain;
}

Report injectivity_check_mu(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  if (n % 2 == 0) throw PreconditionError("injectivity_check_mu needs odd n");
  const std::size_t m = n / 2;
  if (i < 1 || j < 1 || i > m + 1 || j > m + 1) throw IndexError("indices must lie in 1..m+1");
  auto a = algebra_of_censym(ring, n);
  Report report;
  report.check = "injectivity-mu";
  report.params = {{"n", n}, {"ring", ring.literal()}, {"i", i}, {"j", j}};

  std::vector<Vector> left, right;
  for (const auto& b : peirce_component(ring, n, i, m + 1)) left.push_back(coords(b.matrix));
  for (const auto& b : peirce_component(ring, n, m + 1, j)) right.push_back(coords(b.matrix));

  ClauseCheck free("image free");
  SpanBuilder image(ring, a->rank());
  std::vector<Vector> products;
  for (const auto& p : left)
    for (const auto& q : right) {
      products.push_back(a->multiply(p, q));
      const auto added = image.add(products.back());
      if (added == SpanBuilder::AddResult::no_unit_pivot) {
        free.undetermined(a->format(products.back()) + " has no unit pivot");
      } else {
        free.expect(added == SpanBuilder::AddResult::added,
                    [&] { return nlohmann::json{{"dependent", a->format(products.back())}}; });
      }
    }
  report.add(std::move(free).finish());

  const bool obvious = i == m + 1 || j == m + 1;
  Vector expected = structure::f_vector(ring, n, i, j);
  if (!obvious) expected = expected + structure::f_vector(ring, n, i, n + 1 - j);
  ClauseCheck gen("generator");
  gen.expect(products.size() == 1 && products[0] == expected, [&] {
    return nlohmann::json{{"expected", a->format(expected)}, {"products", formatted(*a, products)}};
  });
  report.add(std::move(gen).finish());
  report.witness = {{"branch", obvious ? "obvious" : "generic"},
                    {"tensor_rank", left.size() * right.size()},
                    {"generator", products.empty() ? "0" : a->format(products[0])}};
  return report;
}

Report char2_negative_control(const Ring& ring) {
  if (!ring.is_finite() || !ring.from_int(2).is_zero()) {
    throw PreconditionError("the negative control needs a finite ring of characteristic 2");
  }
  auto a = group_algebra_c2(ring);
  Report report;
  report.check = "char2-negative-control";
  report.params = {{"ring", ring.literal()}};

  Vector g = zero_vector(ring, 2);
  g[0] = ring.one();
  g[1] = ring.one();
  const IdealBasis j = ideal_generated(a, {g});

  ClauseCheck rank("ideal of 1+x has rank 1");
  rank.expect(j.basis.size() == 1, [&] { return nlohmann::json{{"rank", j.basis.size()}}; });
  report.add(std::move(rank).finish());

  ClauseCheck square("J^2 = 0");
  for (const auto& x : j.basis)
    for (const auto& y : j.basis) {
      const Vector p = a->multiply(x, y);
      square.expect(is_zero(p), [&] { return nlohmann::json{{"x", a->format(x)}, {"y", a->format(y)}, {"xy", a->format(p)}}; });
    }
  report.add(std::move(square).finish());

  ClauseCheck none("no idempotent generates J");
  std::size_t idempotent_count = 0;
  for (const auto& c0 : ring.elements())
    for (const auto& c1 : ring.elements()) {
      const Vector v{c0, c1};
      if (!(a->multiply(v, v) == v)) continue;
      ++idempotent_count;
      const auto generated = is_zero(v) ? std::vector<Vector>{} : ideal_generated(a, {v}).basis;
      none.expect(!same_span(ring, 2, generated, j.basis), [&] { return nlohmann::json{{"idempotent", a->format(v)}}; });
    }
  none.note(std::to_string(idempotent_count) + " idempotents enumerated");
  report.add(std::move(none).finish());

  ClauseCheck layer("S_2 first layer squares to zero");
  const auto chain = cell_chain_even(ring, 2);
  const auto& s2 = *chain.algebra;
  for (const auto& x : chain.layers.front().span)
    for (const auto& y : chain.layers.front().span) {
      const Vector p = s2.multiply(x, y);
      layer.expect(is_zero(p), [&] { return nlohmann::json{{"x", s2.format(x)}, {"xy", s2.format(p)}}; });
    }
  report.add(std::move(layer).finish());
  report.witness = {{"ideal", formatted(*a, j.basis)}, {"s2_layer", formatted(s2, chain.layers.front().span)}};
  return report;
}

}  // namespace censym::cellular
