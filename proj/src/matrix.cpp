#include "censym/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "censym/errors.hpp"

namespace censym {

Matrix::Matrix(Ring ring, std::size_t n) : ring_(ring), n_(n), a_(n * n, ring.zero()) {
  if (n == 0) throw DimensionError("matrix side must be at least 1");
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::unit(Ring ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(ring, n);
  m.set(i, j, ring.one());
  return m;
}

Matrix Matrix::exchange(Ring ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, n + 1 - i) = ring.one();
  return m;
}

Matrix Matrix::random(Ring ring, std::size_t n, std::mt19937_64& rng) {
  Matrix m(ring, n);
  for (auto& x : m.a_) x = ring.random(rng);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, RingElt value) {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw IndexError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside 1.." + std::to_string(n_));
  }
  if (!(value.ring() == ring_)) throw RingMismatchError(ring_.literal(), value.ring().literal());
  at(i, j) = std::move(value);
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, n_);
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj_by_c() const {
  Matrix t(ring_, n_);
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 1; j <= n_; ++j) t.at(i, j) = (*this)(n_ + 1 - i, n_ + 1 - j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const RingElt& x) { return x.is_zero(); });
}

void Matrix::check_compatible(const Matrix& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatchError(ring_.literal(), other.ring_.literal());
  if (n_ != other.n_) {
    throw DimensionError("matrix sizes differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

Matrix operator-(Matrix a) {
  for (auto& x : a.a_) x = -x;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.check_compatible(b);
  const std::size_t n = a.n_;
  Matrix out(a.ring_, n);
  // Schoolbook product; zero entries are skipped because most operands
  // here are sums of a few matrix units.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      const RingElt& lhs = a(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        const RingElt& rhs = b(k, j);
        if (rhs.is_zero()) continue;
        out.at(i, j) += lhs * rhs;
      }
    }
  }
  return out;
}

Matrix operator*(const RingElt& s, Matrix a) {
  if (!(s.ring() == a.ring_)) throw RingMismatchError(s.ring().literal(), a.ring_.literal());
  for (auto& x : a.a_) x = s * x;
  return a;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) out << (j > 1 ? " " : "") << (*this)(i, j).to_string();
    out << '\n';
  }
  return out.str();
}

Matrix mat_op(MatOp op, const Matrix& a, const Matrix* b, const RingElt* s) {
  switch (op) {
    case MatOp::add:
      if (!b) throw std::invalid_argument("add needs a second matrix");
      return a + *b;
    case MatOp::mul:
      if (!b) throw std::invalid_argument("mul needs a second matrix");
      return a * *b;
    case MatOp::neg:
      return -a;
    case MatOp::scale:
      if (!s) throw std::invalid_argument("scale needs a ring element");
      return *s * a;
    case MatOp::conj_by_c:
      return a.conj_by_c();
  }
  throw std::logic_error("unknown MatOp");
}

SymmetryFlags symmetry_class(const Matrix& a) {
  SymmetryFlags flags;
  const Matrix t = a.transpose();
  flags.symmetric = t == a;
  flags.persymmetric = t.conj_by_c() == a;
  flags.bisymmetric = flags.symmetric && flags.persymmetric;
  flags.centrosymmetric = a.conj_by_c() == a;
  return flags;
}

}  // namespace censym
