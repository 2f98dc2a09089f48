#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over a commutative Ring.
 *
 * Elimination only ever pivots on units of the ring. Over a field that is
 * plain Gauss-Jordan; over the integers it pivots on +-1. When a nonzero
 * column has no unit entry the routines report it (SpanBuilder returns
 * `no_unit_pivot`, the others throw FreenessUndetermined) instead of
 * guessing, since freeness of the span is then not decided.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "censym/ring.hpp"

namespace censym {

using Vector = std::vector<RingElt>;

Vector zero_vector(const Ring& ring, std::size_t dim);
Vector unit_vector(const Ring& ring, std::size_t dim, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const RingElt& s, Vector v);
/// y += s * x
void axpy(Vector& y, const RingElt& s, const Vector& x);

/// Rectangular coordinate matrix; column c is the image of the c-th source
/// basis vector when used as a linear map.
class CoordMatrix {
 public:
  CoordMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static CoordMatrix identity(const Ring& ring, std::size_t n);
  static CoordMatrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const RingElt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  RingElt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Vector apply(const Vector& v) const;

  friend CoordMatrix operator*(const CoordMatrix& a, const CoordMatrix& b);
  friend bool operator==(const CoordMatrix& a, const CoordMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElt> a_;
};

/// Incremental reduced row echelon form with unit pivots normalized to 1.
///
/// Each accepted input becomes one echelon row. Because every row has a 1
/// at its pivot column and 0 at the other pivot columns, a vector lies in
/// the span exactly when subtracting t[pivot] * row for every row leaves
/// zero; membership is therefore decided exactly over any ring.
class SpanBuilder {
 public:
  enum class AddResult { added, in_span, no_unit_pivot };

  SpanBuilder(Ring ring, std::size_t dim);

  AddResult add(const Vector& v);

  /// Residual of v after eliminating all pivot columns.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Coefficients of v over the accepted inputs (in acceptance order), or
  /// nullopt when v is outside the span.
  std::optional<Vector> coefficients(const Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<Vector>& inputs() const { return inputs_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;  // rows_[k] = sum_l combos_[k][l] * inputs_[l]
  std::vector<std::size_t> pivots_;
  std::vector<Vector> inputs_;
};

/// Solver for coordinates over a fixed list of vectors, which must all be
/// accepted with unit pivots. Throws FreenessUndetermined when a vector has
/// no unit pivot and PreconditionError when the list is dependent.
class BasisSolver {
 public:
  BasisSolver(const Ring& ring, std::size_t dim, const std::vector<Vector>& basis);

  std::optional<Vector> solve(const Vector& v) const { return span_.coefficients(v); }
  bool contains(const Vector& v) const { return span_.contains(v); }
  std::size_t size() const { return span_.rank(); }

 private:
  SpanBuilder span_;
};

/// Two-sided inverse by unit-pivot Gauss-Jordan. nullopt when the matrix is
/// not square or is singular; FreenessUndetermined when a nonzero column has
/// no unit entry.
std::optional<CoordMatrix> invert(const CoordMatrix& m);

struct Nullspace {
  std::vector<Vector> basis;
};

/// Basis of { z : m z = 0 }. Exact whenever unit-pivot elimination of the
/// rows succeeds (always over a field); otherwise throws FreenessUndetermined.
Nullspace nullspace(const CoordMatrix& m);

}  // namespace censym
