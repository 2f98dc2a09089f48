#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "censym/ring.hpp"

namespace censym {

/// Dense square matrix over a Ring, 1-based (i, j) indexing, row-major.
class Matrix {
 public:
  /// Zero matrix of side n >= 1.
  Matrix(Ring ring, std::size_t n);

  static Matrix identity(Ring ring, std::size_t n);
  /// Matrix unit e_ij; throws IndexError unless 1 <= i, j <= n.
  static Matrix unit(Ring ring, std::size_t n, std::size_t i, std::size_t j);
  /// The anti-diagonal permutation c = e_1n + e_2,n-1 + ... + e_n1.
  static Matrix exchange(Ring ring, std::size_t n);
  static Matrix random(Ring ring, std::size_t n, std::mt19937_64& rng);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return n_; }

  const RingElt& operator()(std::size_t i, std::size_t j) const { return a_[(i - 1) * n_ + (j - 1)]; }
  /// Bounds- and ring-checked entry assignment.
  void set(std::size_t i, std::size_t j, RingElt value);

  Matrix transpose() const;
  /// c a c, i.e. (cac)_jk = a_{n+1-j, n+1-k}.
  Matrix conj_by_c() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RingElt& s, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.ring_ == b.ring_ && a.a_ == b.a_; }

  /// One line per row, entries separated by single spaces.
  std::string to_string() const;

 private:
  RingElt& at(std::size_t i, std::size_t j) { return a_[(i - 1) * n_ + (j - 1)]; }
  void check_compatible(const Matrix& other) const;

  Ring ring_;
  std::size_t n_;
  std::vector<RingElt> a_;
};

enum class MatOp { add, mul, neg, scale, conj_by_c };

/// Uniform entry point: `add`/`mul` need `b`, `scale` needs `s`.
Matrix mat_op(MatOp op, const Matrix& a, const Matrix* b = nullptr, const RingElt* s = nullptr);

struct SymmetryFlags {
  bool symmetric = false;
  bool persymmetric = false;
  bool bisymmetric = false;
  bool centrosymmetric = false;

  friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

/// symmetric: a' = a; persymmetric: c a' c = a; bisymmetric: both;
/// centrosymmetric: c a c = a.
SymmetryFlags symmetry_class(const Matrix& a);

}  // namespace censym
