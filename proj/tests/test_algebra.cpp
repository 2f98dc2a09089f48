#include <gtest/gtest.h>

#include <random>

#include "censym/algebra.hpp"
#include "censym/centro.hpp"
#include "censym/errors.hpp"
#include "censym/structure.hpp"

using namespace censym;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

Vector fv(const Ring& r, std::size_t n, std::size_t i, std::size_t j) { return structure::f_vector(r, n, i, j); }

bool same_span(const Ring& r, std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  SpanBuilder sa(r, dim), sb(r, dim);
  for (const auto& v : a) sa.add(v);
  for (const auto& v : b) sb.add(v);
  if (sa.rank() != sb.rank()) return false;
  for (const auto& v : a)
    if (!sb.contains(v)) return false;
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

Vector ints(const Ring& r, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(r.from_int(x));
  return v;
}

}  // namespace

TEST(Linalg, SpanBuilderOverIntegers) {
  SpanBuilder s(Z, 3);
  EXPECT_EQ(s.add(ints(Z, {1, 2, 3})), SpanBuilder::AddResult::added);
  EXPECT_EQ(s.add(ints(Z, {2, 4, 6})), SpanBuilder::AddResult::in_span);
  EXPECT_EQ(s.add(ints(Z, {0, 2, 0})), SpanBuilder::AddResult::no_unit_pivot);
  EXPECT_EQ(s.add(ints(Z, {0, 2, 1})), SpanBuilder::AddResult::added);
  EXPECT_EQ(s.rank(), 2u);
  const auto c = s.coefficients(ints(Z, {1, 4, 4}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, ints(Z, {1, 1}));
  EXPECT_FALSE(s.coefficients(ints(Z, {0, 0, 1})));
}

TEST(Linalg, InvertAndNullspace) {
  CoordMatrix m(Q, 2, 2);
  m(0, 0) = Q.from_int(2);
  m(0, 1) = Q.from_int(1);
  m(1, 0) = Q.from_int(1);
  m(1, 1) = Q.from_int(1);
  const auto inv = invert(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, CoordMatrix::identity(Q, 2));
  EXPECT_EQ(*inv * m, CoordMatrix::identity(Q, 2));

  CoordMatrix two(Z, 1, 1);
  two(0, 0) = Z.from_int(2);
  EXPECT_THROW(invert(two), FreenessUndetermined);

  CoordMatrix s(Q, 1, 3);
  s(0, 0) = Q.one();
  s(0, 1) = Q.one();
  const auto ns = nullspace(s);
  ASSERT_EQ(ns.basis.size(), 2u);
  for (const auto& z : ns.basis) EXPECT_TRUE(is_zero(s.apply(z)));
  EXPECT_THROW(BasisSolver(Q, 2, {ints(Q, {1, 1}), ints(Q, {2, 2})}), PreconditionError);
}

TEST(Algebra, AuditsPass) {
  for (const char* lit : {"int", "gf:2", "rat", "c2:int", "zmod:4"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto a = algebra_of_censym(r, n);
      EXPECT_TRUE(audit(*a).passed()) << lit << " n=" << n;
      EXPECT_TRUE(a->involution_is_signed_permutation());
    }
    for (std::size_t m = 1; m <= 3; ++m) {
      EXPECT_TRUE(audit(*full_matrix_algebra(r, m)).passed());
      EXPECT_TRUE(audit(*group_matrix_algebra(r, m)).passed());
    }
    EXPECT_TRUE(audit(*group_algebra_c2(r)).passed());
    EXPECT_TRUE(audit(*direct_product(full_matrix_algebra(r, 2), group_algebra_c2(r))).passed());
  }
  EXPECT_TRUE(audit(*zero_algebra(Z)).passed());
}

TEST(Algebra, Censym) {
  const auto s2 = algebra_of_censym(Z, 2);
  EXPECT_EQ(s2->rank(), 2u);
  EXPECT_EQ(s2->format(s2->multiply(s2->basis(1), s2->basis(1))), "f1_1");
  EXPECT_EQ(algebra_of_censym(Z, 1)->rank(), 1u);

  const auto s3 = algebra_of_censym(Z, 3);
  EXPECT_EQ(s3->involute(fv(Z, 3, 1, 2)), fv(Z, 3, 2, 1));
  EXPECT_EQ(s3->involute(fv(Z, 3, 2, 1)), fv(Z, 3, 1, 2));
  for (auto [i, j] : {std::pair{1, 1}, {2, 2}, {1, 3}}) EXPECT_EQ(s3->involute(fv(Z, 3, i, j)), fv(Z, 3, i, j));
  EXPECT_EQ(s3->format(s3->multiply(fv(Z, 3, 1, 2), fv(Z, 3, 2, 1))), "f1_1 + f1_3");
  EXPECT_EQ(s3->format(s3->multiply(fv(Z, 3, 2, 1), fv(Z, 3, 1, 2))), "2*f2_2");
}

TEST(Algebra, MatrixAlgebras) {
  const auto m2 = full_matrix_algebra(Z, 2);
  EXPECT_EQ(m2->rank(), 4u);
  EXPECT_EQ(m2->format(m2->multiply(m2->basis(1), m2->basis(2))), "E1_1");
  EXPECT_EQ(group_matrix_algebra(Z, 1)->rank(), 2u);
  EXPECT_EQ(group_matrix_algebra(Z, 2)->rank(), 8u);
  // over a group ring the coefficients are not flattened
  EXPECT_EQ(full_matrix_algebra(Ring::parse("c2:int"), 2)->rank(), 4u);
  EXPECT_EQ(full_matrix_algebra(Z, 0)->rank(), 0u);
}

TEST(Algebra, OracleEquivalence) {
  std::mt19937_64 rng(29);
  for (const char* lit : {"int", "zmod:4", "c2:int", "rat"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto alg = algebra_of_censym(r, n);
      for (int t = 0; t < 10; ++t) {
        Vector a, b;
        for (std::size_t k = 0; k < alg->rank(); ++k) {
          a.push_back(r.random(rng));
          b.push_back(r.random(rng));
        }
        const auto prod = from_coords(r, n, a) * from_coords(r, n, b);
        ASSERT_EQ(alg->multiply(a, b), coords(prod));
      }
    }
  }
}

TEST(Algebra, Ideals) {
  const auto s3 = algebra_of_censym(Z, 3);
  const auto j = ideal_generated(s3, {fv(Z, 3, 2, 2)});
  EXPECT_EQ(j.basis.size(), 4u);
  EXPECT_TRUE(same_span(Z, 5, j.basis,
                        {fv(Z, 3, 2, 2), fv(Z, 3, 1, 2), fv(Z, 3, 2, 1), fv(Z, 3, 1, 1) + fv(Z, 3, 1, 3)}));

  const auto s3q = algebra_of_censym(Q, 3);
  EXPECT_EQ(ideal_generated(s3q, {s3q->unit()}).basis.size(), 5u);

  const Ring f2 = Ring::parse("gf:2");
  const auto g = group_algebra_c2(f2);
  const auto n = ideal_generated(g, {ints(f2, {1, 1})});
  ASSERT_EQ(n.basis.size(), 1u);
  EXPECT_TRUE(is_zero(g->multiply(n.basis[0], n.basis[0])));
}

TEST(Algebra, QuotientN3) {
  const auto s3 = algebra_of_censym(Q, 3);
  const auto j = ideal_generated(s3, {fv(Q, 3, 2, 2)});
  const auto quo = quotient_by_ideal(s3, j);
  EXPECT_EQ(quo.algebra->rank(), 1u);
  const auto p11 = quo.projection.apply(fv(Q, 3, 1, 1));
  const auto p13 = quo.projection.apply(fv(Q, 3, 1, 3));
  EXPECT_FALSE(is_zero(p11));
  EXPECT_EQ(p13, Q.from_int(-1) * p11);
  EXPECT_TRUE(check_witness(quo.projection).passed());
}

TEST(Algebra, QuotientN5IsMatrixAlgebra) {
  const auto iso = structure::iso_odd_quotient(Q, 2);
  const auto& quo = iso.quotient;
  ASSERT_EQ(quo.algebra->rank(), 4u);
  const auto m2 = full_matrix_algebra(Q, 2);
  EXPECT_EQ(quo.algebra->tensor(), m2->tensor());
  EXPECT_TRUE(check_witness(quo.projection).passed());
  // projection is the identity on the complement and kills the ideal
  for (std::size_t k = 0; k < quo.complement.size(); ++k)
    EXPECT_EQ(quo.projection.apply(quo.complement[k]), quo.algebra->basis(k));
  for (const auto& v : iso.ideal.basis) EXPECT_TRUE(is_zero(quo.projection.apply(v)));
}

TEST(Algebra, QuotientByEverything) {
  const auto s2 = algebra_of_censym(Q, 2);
  const auto whole = ideal_generated(s2, {s2->unit()});
  const auto quo = quotient_by_ideal(s2, whole);
  EXPECT_EQ(quo.algebra->rank(), 0u);
  EXPECT_TRUE(audit(*quo.algebra).passed());
}

TEST(Algebra, WitnessChecks) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto a = algebra_of_censym(Z, n);
    LinearMapWitness id{"identity", a, a, CoordMatrix::identity(Z, a->rank()), CoordMatrix::identity(Z, a->rank()),
                        {MapProperty::algebra_homomorphism, MapProperty::bijective,
                         MapProperty::involution_compatible}};
    EXPECT_TRUE(check_witness(id).passed());

    LinearMapWitness tr{"transpose", a, a, a->involution(), a->involution(), {MapProperty::algebra_homomorphism}};
    const Report r = check_witness(tr);
    if (n == 2) {
      // S_2 is commutative, so the transpose is multiplicative there
      EXPECT_TRUE(r.passed());
    } else {
      EXPECT_EQ(r.verdict, Verdict::fail);
      EXPECT_FALSE(r.counterexample.is_null());
    }
  }
  const auto a = algebra_of_censym(Z, 3);
  LinearMapWitness noinv{"no inverse", a, a, CoordMatrix::identity(Z, 5), std::nullopt, {MapProperty::bijective}};
  EXPECT_EQ(check_witness(noinv).verdict, Verdict::fail);
  const auto b = algebra_of_censym(Z, 2);
  LinearMapWitness shape{"shape", a, b, CoordMatrix::identity(Z, 5), std::nullopt, {}};
  EXPECT_EQ(check_witness(shape).verdict, Verdict::fail);
}

TEST(Algebra, Centre) {
  const Ring f3 = Ring::parse("gf:3");
  const auto s4 = algebra_of_censym(f3, 4);
  const auto z = centre(*s4);
  EXPECT_TRUE(z.complete);
  ASSERT_EQ(z.basis.size(), 2u);
  const Vector c = coords(CentroMatrix::checked(Matrix::exchange(f3, 4)));
  EXPECT_TRUE(same_span(f3, s4->rank(), z.basis, {s4->unit(), c}));

  const auto s1 = centre(*algebra_of_censym(Ring::parse("gf:5"), 1));
  EXPECT_TRUE(s1.complete);
  EXPECT_EQ(s1.basis.size(), 1u);

  const auto m2 = full_matrix_algebra(Ring::parse("gf:5"), 2);
  const auto zm = centre(*m2);
  ASSERT_EQ(zm.basis.size(), 1u);
  EXPECT_TRUE(same_span(m2->ring(), 4, zm.basis, {m2->unit()}));
}

TEST(Algebra, CentreIsSubalgebra) {
  for (const char* lit : {"gf:2", "rat", "gf:7"}) {
    const Ring r = Ring::parse(lit);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto a = algebra_of_censym(r, n);
      const auto z = centre(*a, {a->unit()});
      ASSERT_TRUE(z.complete);
      EXPECT_TRUE(z.report.passed());
      SpanBuilder span(r, a->rank());
      for (const auto& v : z.basis) span.add(v);
      EXPECT_TRUE(span.contains(a->unit()));
      for (const auto& u : z.basis)
        for (const auto& v : z.basis) EXPECT_TRUE(span.contains(a->multiply(u, v)));
    }
  }
}

TEST(Algebra, CentreCandidatesRejected) {
  const auto a = algebra_of_censym(Q, 3);
  const auto z = centre(*a, {fv(Q, 3, 1, 2)});
  EXPECT_EQ(z.report.verdict, Verdict::fail);
}
