#pragma once

/**
 * @file centro.hpp
 * @brief The centrosymmetric matrix algebra S_n(R) and its f-basis.
 *
 * For 1 <= i, j <= n put i' = n+1-i. The f-basis element with index (i, j)
 * is e_ij + e_i'j', except for the centre entry of an odd-sized matrix,
 * where f_(m+1, m+1) = e_(m+1, m+1). Indices (i, j) and (i', j') name the
 * same element; the canonical index has i <= ceil(n/2) and, on the middle
 * row of odd n, j <= m+1. There are ceil(n^2/2) canonical indices, ordered
 * lexicographically, and the coordinate of f_ij in a centrosymmetric
 * matrix a is simply a_ij.
 */

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "censym/matrix.hpp"
#include "censym/tensor.hpp"

namespace censym {

/// ceil(n/2)
constexpr std::size_t half_up(std::size_t n) { return (n + 1) / 2; }
/// floor(n/2)
constexpr std::size_t half_down(std::size_t n) { return n / 2; }

constexpr int kronecker(std::size_t p, std::size_t q) { return p == q ? 1 : 0; }
constexpr int anti_kronecker(std::size_t p, std::size_t q) { return p == q ? 0 : 1; }

struct BasisIndex {
  std::size_t n = 1;
  std::size_t i = 1;
  std::size_t j = 1;

  /// Canonical representative of (i, j); throws IndexError outside 1..n.
  static BasisIndex canonical(std::size_t n, std::size_t i, std::size_t j);

  /// The centre entry (m+1, m+1) of odd n, where f is a single matrix unit.
  bool is_middle_diagonal() const { return n % 2 == 1 && i == half_up(n) && j == half_up(n); }

  /// `f<i>_<j>`
  std::string label() const;

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Canonical indices in basis order; exactly ceil(n^2/2) of them.
std::vector<BasisIndex> canonical_indices(std::size_t n);

/// Position of a canonical index in basis order.
std::size_t basis_position(const BasisIndex& index);

/// f_ij as a matrix, for any 1 <= i, j <= n.
Matrix f_matrix(Ring ring, std::size_t n, std::size_t i, std::size_t j);

bool is_centrosymmetric(const Matrix& a);

/// A matrix certified to satisfy c a c = a.
class CentroMatrix {
 public:
  static std::optional<CentroMatrix> certify(Matrix m);
  /// Throws PreconditionError when m is not centrosymmetric.
  static CentroMatrix checked(Matrix m);

  const Matrix& matrix() const { return m_; }
  const Ring& ring() const { return m_.ring(); }
  std::size_t size() const { return m_.size(); }

  friend CentroMatrix operator+(const CentroMatrix& a, const CentroMatrix& b) { return CentroMatrix(a.m_ + b.m_); }
  friend CentroMatrix operator-(const CentroMatrix& a, const CentroMatrix& b) { return CentroMatrix(a.m_ - b.m_); }
  friend CentroMatrix operator*(const CentroMatrix& a, const CentroMatrix& b) { return CentroMatrix(a.m_ * b.m_); }
  friend CentroMatrix operator*(const RingElt& s, const CentroMatrix& a) { return CentroMatrix(s * a.m_); }
  friend bool operator==(const CentroMatrix& a, const CentroMatrix& b) { return a.m_ == b.m_; }

 private:
  explicit CentroMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

struct BasisElement {
  BasisIndex index;
  CentroMatrix matrix;
};

std::vector<BasisElement> canonical_basis(Ring ring, std::size_t n);

/// Coordinates over the canonical basis, in basis order.
std::vector<RingElt> coords(const CentroMatrix& a);

/// sum_u v_u f_u; throws DimensionError unless v has ceil(n^2/2) entries.
CentroMatrix from_coords(Ring ring, std::size_t n, std::span<const RingElt> v);

/// Structure constants of the f-basis, computed by expanding both factors
/// into matrix units, multiplying in M_n(R) and reading coordinates back.
/// Memoized per (ring, n).
std::shared_ptr<const StructureTensor> structure_constants(Ring ring, std::size_t n);

struct FormulaTerm {
  BasisIndex index;
  long coeff;
};

/// f_ij f_pq = delta_jp f_iq + delta_{j,n+1-p} f_{i,n+1-q}, evaluated on
/// canonical indices. Returns nullopt when a factor or a contributing term is
/// the centre element of odd n, where the formula does not apply as stated.
std::optional<std::vector<FormulaTerm>> closed_form_product(const BasisIndex& u, const BasisIndex& v);

/// f_1, ..., f_ceil(n/2).
std::vector<CentroMatrix> idempotents(Ring ring, std::size_t n);

/// Basis of f_i S_n(R) f_j: f_ij and f_i,n+1-j (one element when they
/// coincide). Throws IndexError unless 1 <= i, j <= ceil(n/2).
std::vector<BasisElement> peirce_component(Ring ring, std::size_t n, std::size_t i, std::size_t j);

/// Symmetric sequence: a_k = a_{m+1-k}.
class SymSeq {
 public:
  static std::optional<SymSeq> make(std::vector<RingElt> entries);
  const std::vector<RingElt>& entries() const { return a_; }

 private:
  explicit SymSeq(std::vector<RingElt> a) : a_(std::move(a)) {}
  std::vector<RingElt> a_;
};

bool is_symmetric_sequence(std::span<const RingElt> s);

/// Row-major fill; throws DimensionError unless the length is a nonzero
/// perfect square.
Matrix seq_to_matrix(std::span<const RingElt> s);
CentroMatrix seq_to_matrix(const SymSeq& s);

/// Row-major read-out.
std::vector<RingElt> matrix_to_seq(const Matrix& a);

}  // namespace censym
