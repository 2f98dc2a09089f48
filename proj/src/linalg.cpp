#include "censym/linalg.hpp"

#include <algorithm>

#include "censym/errors.hpp"

namespace censym {

Vector zero_vector(const Ring& ring, std::size_t dim) { return Vector(dim, ring.zero()); }

Vector unit_vector(const Ring& ring, std::size_t dim, std::size_t k) {
  Vector v = zero_vector(ring, dim);
  v.at(k) = ring.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElt& x) { return x.is_zero(); });
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector lengths differ");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector lengths differ");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

Vector operator*(const RingElt& s, Vector v) {
  for (auto& x : v) x = s * x;
  return v;
}

void axpy(Vector& y, const RingElt& s, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("vector lengths differ");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (!x[k].is_zero()) y[k] += s * x[k];
  }
}

// --- CoordMatrix ------------------------------------------------------------

CoordMatrix::CoordMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, ring.zero()) {}

CoordMatrix CoordMatrix::identity(const Ring& ring, std::size_t n) {
  CoordMatrix m(ring, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = ring.one();
  return m;
}

CoordMatrix CoordMatrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns) {
  CoordMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector CoordMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector CoordMatrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector CoordMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match matrix columns");
  Vector out = zero_vector(ring_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const RingElt& x = (*this)(r, c);
      if (!x.is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

CoordMatrix operator*(const CoordMatrix& a, const CoordMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix shapes do not compose");
  CoordMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElt& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RingElt& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

// --- SpanBuilder ------------------------------------------------------------

SpanBuilder::SpanBuilder(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {}

Vector SpanBuilder::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionError("vector length does not match span dimension");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const RingElt factor = v[pivots_[k]];
    if (!factor.is_zero()) axpy(v, -factor, rows_[k]);
  }
  return v;
}

std::optional<Vector> SpanBuilder::coefficients(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector out = zero_vector(ring_, inputs_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) axpy(out, v[pivots_[k]], combos_[k]);
  return out;
}

SpanBuilder::AddResult SpanBuilder::add(const Vector& v) {
  Vector residual = v;
  Vector combo = zero_vector(ring_, inputs_.size() + 1);
  combo.back() = ring_.one();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const RingElt factor = residual[pivots_[k]];
    if (factor.is_zero()) continue;
    axpy(residual, -factor, rows_[k]);
    for (std::size_t l = 0; l < combos_[k].size(); ++l) combo[l] -= factor * combos_[k][l];
  }
  if (is_zero(residual)) return AddResult::in_span;

  std::size_t pivot = dim_;
  std::optional<RingElt> inv;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (residual[c].is_zero()) continue;
    inv = residual[c].inverse();
    if (inv) {
      pivot = c;
      break;
    }
  }
  if (pivot == dim_) return AddResult::no_unit_pivot;

  residual = *inv * std::move(residual);
  combo = *inv * std::move(combo);
  for (auto& existing : combos_) existing.push_back(ring_.zero());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const RingElt factor = rows_[k][pivot];
    if (factor.is_zero()) continue;
    axpy(rows_[k], -factor, residual);
    axpy(combos_[k], -factor, combo);
  }
  rows_.push_back(std::move(residual));
  combos_.push_back(std::move(combo));
  pivots_.push_back(pivot);
  inputs_.push_back(v);
  return AddResult::added;
}

BasisSolver::BasisSolver(const Ring& ring, std::size_t dim, const std::vector<Vector>& basis) : span_(ring, dim) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    switch (span_.add(basis[k])) {
      case SpanBuilder::AddResult::added:
        break;
      case SpanBuilder::AddResult::in_span:
        throw PreconditionError("basis vector " + std::to_string(k) + " is dependent on the previous ones");
      case SpanBuilder::AddResult::no_unit_pivot:
        throw FreenessUndetermined("basis vector " + std::to_string(k) + " has no unit pivot");
    }
  }
}

std::optional<CoordMatrix> invert(const CoordMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const Ring& ring = m.ring();
  // Columns of m are accepted in order; the combos then express each echelon
  // row (a unit vector once all n are in) over the columns.
  SpanBuilder span(ring, n);
  for (std::size_t c = 0; c < n; ++c) {
    switch (span.add(m.column(c))) {
      case SpanBuilder::AddResult::added:
        break;
      case SpanBuilder::AddResult::in_span:
        return std::nullopt;
      case SpanBuilder::AddResult::no_unit_pivot:
        throw FreenessUndetermined("no unit pivot while inverting column " + std::to_string(c));
    }
  }
  CoordMatrix inv(ring, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto coeffs = span.coefficients(unit_vector(ring, n, r));
    if (!coeffs) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) inv(c, r) = (*coeffs)[c];
  }
  return inv;
}

Nullspace nullspace(const CoordMatrix& m) {
  const Ring& ring = m.ring();
  SpanBuilder span(ring, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (span.add(m.row(r)) == SpanBuilder::AddResult::no_unit_pivot) {
      throw FreenessUndetermined("no unit pivot in row " + std::to_string(r) + " of the linear system");
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : span.pivots()) is_pivot[p] = true;
  Nullspace out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector z = unit_vector(ring, m.cols(), free);
    for (std::size_t k = 0; k < span.rank(); ++k) z[span.pivots()[k]] = -span.rows()[k][free];
    out.basis.push_back(std::move(z));
  }
  return out;
}

}  // namespace censym
