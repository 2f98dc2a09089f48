#include "censym/structure.hpp"

#include "censym/centro.hpp"
#include "censym/errors.hpp"

namespace censym::structure {

namespace {

std::size_t f_pos(std::size_t n, std::size_t i, std::size_t j) { return basis_position(BasisIndex::canonical(n, i, j)); }

// Permutation-style coordinate matrix: column c has a single 1 at row rows[c].
CoordMatrix placement(const Ring& ring, std::size_t target_rank, const std::vector<std::size_t>& rows) {
  CoordMatrix m(ring, target_rank, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) m(rows[c], c) = ring.one();
  return m;
}

CoordMatrix transpose(const CoordMatrix& m) {
  CoordMatrix t(m.ring(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

// (a, b, u, d, v) * (a1, b1, u1, d1, v1) for [[a + b x, u], [d, v]].
Vector s3_formula(const Vector& p, const Vector& q) {
  const RingElt &a = p[0], &b = p[1], &u = p[2], &d = p[3], &v = p[4];
  const RingElt &a1 = q[0], &b1 = q[1], &u1 = q[2], &d1 = q[3], &v1 = q[4];
  const RingElt two = a.ring().from_int(2);
  return {a * a1 + b * b1 + u * d1, a * b1 + b * a1 + u * d1, a * u1 + b * u1 + u * v1, d * a1 + d * b1 + v * d1,
          two * d * u1 + v * v1};
}

// Corner basis order (f_1, f_1n or f1_3, f_{1,m+1}, f_{m+1,1}, f_{m+1}) onto
// S_3 positions.
std::vector<std::size_t> s3_targets() {
  return {f_pos(3, 1, 1), f_pos(3, 1, 3), f_pos(3, 1, 2), f_pos(3, 2, 1), f_pos(3, 2, 2)};
}

Matrix outer(const Ring& ring, std::size_t n, const std::vector<RingElt>& col, const std::vector<RingElt>& row) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (col[i - 1].is_zero() || row[j - 1].is_zero()) continue;
      m.set(i, j, col[i - 1] * row[j - 1]);
    }
  return m;
}

}  // namespace

Vector f_vector(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t rank = canonical_indices(n).size();
  return unit_vector(ring, rank, f_pos(n, i, j));
}

LinearMapWitness iso_s2(const Ring& ring) {
  auto source = group_algebra_c2(ring);
  auto target = algebra_of_censym(ring, 2);
  CoordMatrix m = placement(ring, 2, {f_pos(2, 1, 1), f_pos(2, 1, 2)});
  return {"iso_s2",
          source,
          target,
          m,
          transpose(m),
          {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible}};
}

Presentation s3_presentation(const Ring& ring) {
  const std::vector<std::string> labels{"a", "b", "u", "d", "v"};
  Vector unit = zero_vector(ring, 5);
  unit[0] = ring.one();
  unit[4] = ring.one();
  // i swaps the off-diagonal corners u and d.
  CoordMatrix inv = placement(ring, 5, {0, 1, 3, 2, 4});
  auto algebra = std::make_shared<const StructureAlgebra>(StructureAlgebra::from_products(
      ring, labels,
      [&](std::size_t x, std::size_t y) { return s3_formula(unit_vector(ring, 5, x), unit_vector(ring, 5, y)); }, unit,
      inv));
  CoordMatrix m = placement(ring, 5, s3_targets());
  LinearMapWitness w{"s3_presentation",
                     algebra,
                     algebra_of_censym(ring, 3),
                     m,
                     transpose(m),
                     {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible}};
  return {algebra, std::move(w)};
}

LinearMapWitness iso_even(const Ring& ring, std::size_t m) {
  if (m == 0) throw PreconditionError("iso_even needs m >= 1");
  const std::size_t n = 2 * m;
  auto source = group_matrix_algebra(ring, m);
  auto target = algebra_of_censym(ring, n);
  std::vector<std::size_t> rows(source->rank());
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t k = 2 * ((i - 1) * m + (j - 1));
      rows[k] = f_pos(n, i, j);
      rows[k + 1] = f_pos(n, i, n + 1 - j);
    }
  CoordMatrix mat = placement(ring, target->rank(), rows);
  return {"iso_even",
          source,
          target,
          mat,
          transpose(mat),
          {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible}};
}

OddQuotientIso iso_odd_quotient(const Ring& ring, std::size_t m) {
  if (m == 0) throw PreconditionError("iso_odd_quotient needs m >= 1");
  const std::size_t n = 2 * m + 1;
  auto a = algebra_of_censym(ring, n);
  IdealBasis ideal = ideal_generated(a, {f_vector(ring, n, m + 1, m + 1)});
  std::vector<Vector> complement;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) complement.push_back(f_vector(ring, n, i, j));
  Quotient q = quotient_by_ideal(a, ideal, complement);
  auto target = full_matrix_algebra(ring, m);
  LinearMapWitness w{"iso_odd_quotient",
                     q.algebra,
                     target,
                     CoordMatrix::identity(ring, m * m),
                     CoordMatrix::identity(ring, m * m),
                     {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible}};
  return {std::move(ideal), std::move(q), std::move(w)};
}

ModuleMapWitness morita_column_iso(const Ring& ring, std::size_t n, std::size_t j) {
  if (n < 4) throw PreconditionError("column isomorphisms need n >= 4; use iso_s2 or s3_presentation");
  if (j < 2 || j > half_down(n)) {
    throw IndexError("column index " + std::to_string(j) + " outside 2.." + std::to_string(half_down(n)));
  }
  auto a = algebra_of_censym(ring, n);
  std::vector<Vector> source, target;
  for (const auto& idx : canonical_indices(n)) {
    if (idx.j == 1 || idx.j == n) source.push_back(a->basis(basis_position(idx)));
    if (idx.j == j || idx.j == n + 1 - j) target.push_back(a->basis(basis_position(idx)));
  }
  const BasisSolver source_solver(ring, a->rank(), source);
  const BasisSolver target_solver(ring, a->rank(), target);

  // Right multiplication by f_1j = e_1j + e_{n,n+1-j}; the inverse pulls
  // columns j, n+1-j back to 1, n via f_j1.
  const Vector forward = f_vector(ring, n, 1, j);
  const Vector backward = f_vector(ring, n, j, 1);
  auto image_matrix = [&](const std::vector<Vector>& from, const BasisSolver& to, const Vector& by) {
    std::vector<Vector> cols;
    for (const auto& v : from) {
      auto c = to.solve(a->multiply(v, by));
      if (!c) throw PreconditionError("column map leaves the target module");
      cols.push_back(*c);
    }
    return CoordMatrix::from_columns(ring, to.size(), cols);
  };
  CoordMatrix mat = image_matrix(source, target_solver, forward);
  CoordMatrix inv = image_matrix(target, source_solver, backward);
  return {"morita_column_iso(j=" + std::to_string(j) + ")",
          a,
          source,
          target,
          std::move(mat),
          std::move(inv),
          {MapProperty::left_module_homomorphism, MapProperty::bijective}};
}

EndRing endring_odd(const Ring& ring, std::size_t n) {
  if (n % 2 == 0 || n < 5) throw PreconditionError("endring_odd needs odd n >= 5");
  const std::size_t m = n / 2;
  auto a = algebra_of_censym(ring, n);
  const Vector f1 = f_vector(ring, n, 1, 1), f1n = f_vector(ring, n, 1, n), fu = f_vector(ring, n, 1, m + 1),
               fd = f_vector(ring, n, m + 1, 1), fv = f_vector(ring, n, m + 1, m + 1);

  Report relations;
  relations.check = "endring-relations";
  relations.params = {{"n", n}, {"ring", ring.literal()}};
  const auto& L = a->labels();
  ClauseCheck r1("f_{1,m+1} f_{m+1,1} = f_1 + f_{1,n}");
  const Vector p1 = a->multiply(fu, fd);
  r1.expect(p1 == f1 + f1n, [&] { return nlohmann::json{{"lhs", a->format(p1)}, {"rhs", a->format(f1 + f1n)}}; });
  r1.note(L[f_pos(n, 1, m + 1)] + " * " + L[f_pos(n, m + 1, 1)] + " = " + a->format(p1));
  relations.add(std::move(r1).finish());
  ClauseCheck r2("f_{m+1,1} f_{1,m+1} = 2 f_{m+1}");
  const Vector p2 = a->multiply(fd, fu);
  const Vector rhs2 = ring.from_int(2) * fv;
  r2.expect(p2 == rhs2, [&] { return nlohmann::json{{"lhs", a->format(p2)}, {"rhs", a->format(rhs2)}}; });
  r2.note(L[f_pos(n, m + 1, 1)] + " * " + L[f_pos(n, 1, m + 1)] + " = " + a->format(p2));
  relations.add(std::move(r2).finish());

  std::vector<Vector> basis{f1, f1n, fu, fd, fv};
  std::vector<std::string> labels;
  for (const auto& v : basis) labels.push_back(a->format(v));
  Vector unit = zero_vector(ring, 5);
  unit[0] = ring.one();
  unit[4] = ring.one();
  auto corner = subalgebra_on(a, basis, labels, unit);
  CoordMatrix m5 = placement(ring, 5, s3_targets());
  LinearMapWitness w{"endring_odd",
                     corner,
                     algebra_of_censym(ring, 3),
                     m5,
                     transpose(m5),
                     {MapProperty::algebra_homomorphism, MapProperty::bijective, MapProperty::involution_compatible}};
  return {corner, std::move(w), std::move(relations)};
}

WedderburnSplit wedderburn_split(const Ring& ring, std::size_t n) {
  const auto half = invert_two(ring);
  if (!half) throw PreconditionError("the Wedderburn split needs 2 to be invertible in " + ring.literal());
  if (n == 0) throw DimensionError("matrix size must be positive");
  const std::size_t k = half_up(n), l = n - k;
  auto a = algebra_of_censym(ring, n);

  // Symmetric vectors u_i with dual rows w_i, antisymmetric v_i with z_i.
  auto vec = [&](std::size_t i, int sign, bool dual) {
    std::vector<RingElt> out(n, ring.zero());
    const std::size_t ip = n + 1 - i;
    if (i == ip) {
      out[i - 1] = ring.one();
      return out;
    }
    const RingElt s = dual ? *half : ring.one();
    out[i - 1] = s;
    out[ip - 1] = sign > 0 ? s : -s;
    return out;
  };
  auto units = [&](std::size_t size, int sign, const std::string& prefix, std::vector<Vector>& in_a,
                   std::vector<std::string>& labels) {
    for (std::size_t i = 1; i <= size; ++i)
      for (std::size_t j = 1; j <= size; ++j) {
        const Matrix e = outer(ring, n, vec(i, sign, false), vec(j, sign, true));
        in_a.push_back(coords(CentroMatrix::checked(e)));
        labels.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
      }
  };
  std::vector<Vector> plus_basis, minus_basis;
  std::vector<std::string> plus_labels, minus_labels;
  units(k, +1, "P", plus_basis, plus_labels);
  units(l, -1, "N", minus_basis, minus_labels);

  auto diag_unit = [&](std::size_t size) {
    Vector u = zero_vector(ring, size * size);
    for (std::size_t i = 0; i < size; ++i) u[i * size + i] = ring.one();
    return u;
  };
  auto plus = subalgebra_on(a, plus_basis, plus_labels, diag_unit(k));
  auto minus = l ? subalgebra_on(a, minus_basis, minus_labels, diag_unit(l)) : zero_algebra(ring);

  const std::set<MapProperty> iso_claims{MapProperty::algebra_homomorphism, MapProperty::bijective};
  LinearMapWitness plus_iso{"wedderburn_plus", full_matrix_algebra(ring, k), plus, CoordMatrix::identity(ring, k * k),
                            CoordMatrix::identity(ring, k * k), iso_claims};
  LinearMapWitness minus_iso{"wedderburn_minus", full_matrix_algebra(ring, l), minus,
                             CoordMatrix::identity(ring, l * l), CoordMatrix::identity(ring, l * l), iso_claims};

  auto pieces = direct_product(full_matrix_algebra(ring, k), full_matrix_algebra(ring, l));
  std::vector<Vector> cols = plus_basis;
  cols.insert(cols.end(), minus_basis.begin(), minus_basis.end());
  CoordMatrix mat = CoordMatrix::from_columns(ring, a->rank(), cols);
  LinearMapWitness product_iso{"wedderburn_split", pieces, a, mat, invert(mat), iso_claims};
  return {k, plus, minus, std::move(plus_iso), std::move(minus_iso), std::move(product_iso)};
}

}  // namespace censym::structure
