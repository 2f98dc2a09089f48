#include <gtest/gtest.h>

#include <random>

#include "censym/centro.hpp"
#include "censym/errors.hpp"
#include "censym/matrix.hpp"

using namespace censym;

namespace {

const Ring Z = Ring::integers();

Matrix sum_units(std::size_t n, std::initializer_list<std::pair<int, int>> units) {
  Matrix m(Z, n);
  for (auto [i, j] : units) m = m + Matrix::unit(Z, n, i, j);
  return m;
}

}  // namespace

TEST(Matrix, Units) {
  const Matrix e12 = Matrix::unit(Z, 2, 1, 2);
  EXPECT_EQ(e12.to_string(), "0 1\n0 0\n");
  EXPECT_EQ(e12 * Matrix::unit(Z, 2, 2, 1), Matrix::unit(Z, 2, 1, 1));
  EXPECT_TRUE((e12 * e12).is_zero());
  EXPECT_THROW(Matrix::unit(Z, 2, 3, 1), IndexError);
  EXPECT_THROW(Matrix::unit(Z, 2, 0, 1), IndexError);
}

TEST(Matrix, Exchange) {
  EXPECT_EQ(Matrix::exchange(Z, 3), sum_units(3, {{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(Matrix::exchange(Z, 1), Matrix::identity(Z, 1));
  for (std::size_t n = 1; n <= 8; ++n) {
    const Matrix c = Matrix::exchange(Z, n);
    EXPECT_EQ(c * c, Matrix::identity(Z, n));
  }
}

TEST(Matrix, ConjByC) {
  EXPECT_EQ(Matrix::unit(Z, 2, 1, 1).conj_by_c(), Matrix::unit(Z, 2, 2, 2));
  EXPECT_EQ(Matrix::identity(Z, 4).conj_by_c(), Matrix::identity(Z, 4));
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Matrix a = Matrix::random(Z, n, rng);
    const Matrix c = Matrix::exchange(Z, n);
    EXPECT_EQ(a.conj_by_c(), c * a * c);
    EXPECT_EQ(a.conj_by_c().conj_by_c(), a);
    EXPECT_EQ(mat_op(MatOp::conj_by_c, a), c * a * c);
  }
}

TEST(Matrix, ConjByCIsAutomorphism) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
          for (std::size_t l = 1; l <= n; ++l) {
            const Matrix a = Matrix::unit(Z, n, i, j), b = Matrix::unit(Z, n, k, l);
            ASSERT_EQ((a * b).conj_by_c(), a.conj_by_c() * b.conj_by_c());
          }
}

TEST(Matrix, Transpose) {
  EXPECT_EQ(Matrix::unit(Z, 3, 1, 2).transpose(), Matrix::unit(Z, 3, 2, 1));
  EXPECT_EQ(f_matrix(Z, 5, 1, 4).transpose(), f_matrix(Z, 5, 4, 1));
  std::mt19937_64 rng(5);
  for (const char* lit : {"int", "zmod:6", "c2:rat"}) {
    const Ring r = Ring::parse(lit);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = Matrix::random(r, 4, rng), b = Matrix::random(r, 4, rng), c = Matrix::random(r, 4, rng);
      ASSERT_EQ((a * b).transpose(), b.transpose() * a.transpose());
      ASSERT_EQ(a.transpose().transpose(), a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(Matrix, Symmetry) {
  const Matrix a = sum_units(3, {{1, 1}, {1, 3}, {3, 1}, {3, 3}});
  const Matrix b = sum_units(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}});
  const SymmetryFlags all{true, true, true, true};
  EXPECT_EQ(symmetry_class(a), all);
  EXPECT_EQ(symmetry_class(b), all);
  const Matrix p = a * b;
  EXPECT_EQ(p, Z.from_int(2) * sum_units(3, {{1, 2}, {3, 2}}));
  const SymmetryFlags f = symmetry_class(p);
  EXPECT_TRUE(f.centrosymmetric);
  EXPECT_FALSE(f.bisymmetric);
  EXPECT_EQ(symmetry_class(Matrix::identity(Z, 5)), all);
  EXPECT_FALSE(symmetry_class(Matrix::unit(Z, 2, 1, 1)).centrosymmetric);
}

TEST(Matrix, BisymmetricImpliesCentrosymmetric) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 30; ++t) {
      Matrix a = Matrix::random(Z, n, rng);
      // symmetrize under both transpose and c-conjugated transpose
      a = a + a.transpose();
      a = a + a.transpose().conj_by_c();
      const auto f = symmetry_class(a);
      ASSERT_TRUE(f.bisymmetric);
      ASSERT_TRUE(f.centrosymmetric);
    }
}

TEST(Matrix, Errors) {
  const Matrix a(Z, 2), b(Z, 3), q(Ring::rationals(), 2);
  EXPECT_THROW(a + b, DimensionError);
  EXPECT_THROW(a * b, DimensionError);
  EXPECT_THROW(a + q, RingMismatchError);
  EXPECT_THROW(mat_op(MatOp::add, a), std::invalid_argument);
  Matrix m(Z, 2);
  EXPECT_THROW(m.set(1, 1, Ring::rationals().one()), RingMismatchError);
  EXPECT_THROW(m.set(3, 1, Z.one()), IndexError);
  EXPECT_THROW(Matrix(Z, 0), std::invalid_argument);
}
