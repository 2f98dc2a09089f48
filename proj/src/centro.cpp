#include "censym/centro.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "censym/errors.hpp"

namespace censym {

BasisIndex BasisIndex::canonical(std::size_t n, std::size_t i, std::size_t j) {
  if (n == 0 || i < 1 || j < 1 || i > n || j > n) {
    throw IndexError("basis index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside 1.." +
                     std::to_string(n));
  }
  if (i > n + 1 - i) {
    i = n + 1 - i;
    j = n + 1 - j;
  } else if (i == n + 1 - i && j > n + 1 - j) {
    j = n + 1 - j;
  }
  return {n, i, j};
}

std::string BasisIndex::label() const { return "f" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<BasisIndex> canonical_indices(std::size_t n) {
  std::vector<BasisIndex> out;
  for (std::size_t i = 1; i <= half_up(n); ++i) {
    const std::size_t last = (i == n + 1 - i) ? i : n;
    for (std::size_t j = 1; j <= last; ++j) out.push_back({n, i, j});
  }
  return out;
}

std::size_t basis_position(const BasisIndex& index) { return (index.i - 1) * index.n + (index.j - 1); }

Matrix f_matrix(Ring ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m = Matrix::unit(ring, n, i, j);
  if (i != n + 1 - i || j != n + 1 - j) m.set(n + 1 - i, n + 1 - j, ring.one());
  return m;
}

bool is_centrosymmetric(const Matrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (!(a(i, j) == a(n + 1 - i, n + 1 - j))) return false;
  return true;
}

std::optional<CentroMatrix> CentroMatrix::certify(Matrix m) {
  if (!is_centrosymmetric(m)) return std::nullopt;
  return CentroMatrix(std::move(m));
}

CentroMatrix CentroMatrix::checked(Matrix m) {
  if (!is_centrosymmetric(m)) throw PreconditionError("matrix is not centrosymmetric");
  return CentroMatrix(std::move(m));
}

std::vector<BasisElement> canonical_basis(Ring ring, std::size_t n) {
  std::vector<BasisElement> out;
  for (const auto& idx : canonical_indices(n)) {
    out.push_back({idx, CentroMatrix::checked(f_matrix(ring, n, idx.i, idx.j))});
  }
  return out;
}

std::vector<RingElt> coords(const CentroMatrix& a) {
  std::vector<RingElt> out;
  for (const auto& idx : canonical_indices(a.size())) out.push_back(a.matrix()(idx.i, idx.j));
  return out;
}

CentroMatrix from_coords(Ring ring, std::size_t n, std::span<const RingElt> v) {
  const auto indices = canonical_indices(n);
  if (v.size() != indices.size()) {
    throw DimensionError("S_" + std::to_string(n) + " has rank " + std::to_string(indices.size()) + ", got " +
                         std::to_string(v.size()) + " coordinates");
  }
  Matrix m(ring, n);
  for (std::size_t u = 0; u < indices.size(); ++u) {
    const auto& idx = indices[u];
    m.set(idx.i, idx.j, v[u]);
    m.set(n + 1 - idx.i, n + 1 - idx.j, v[u]);
  }
  return CentroMatrix::checked(std::move(m));
}

std::shared_ptr<const StructureTensor> structure_constants(Ring ring, std::size_t n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const StructureTensor>> cache;
  const auto key = std::make_pair(ring.literal(), n);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const auto basis = canonical_basis(ring, n);
  auto tensor = std::make_shared<StructureTensor>(ring, basis.size());
  for (std::size_t u = 0; u < basis.size(); ++u) {
    for (std::size_t v = 0; v < basis.size(); ++v) {
      const CentroMatrix product = basis[u].matrix * basis[v].matrix;
      tensor->set_product_dense(u, v, coords(product));
    }
  }

  std::unique_lock lock(mutex);
  // Another thread may have populated the entry; both results are equal.
  return cache.emplace(key, std::move(tensor)).first->second;
}

std::optional<std::vector<FormulaTerm>> closed_form_product(const BasisIndex& u, const BasisIndex& v) {
  const std::size_t n = u.n;
  if (v.n != n) throw DimensionError("basis indices for different n");
  if (u.is_middle_diagonal() || v.is_middle_diagonal()) return std::nullopt;
  const std::size_t i = u.i, j = u.j, p = v.i, q = v.j;
  std::vector<FormulaTerm> terms;
  auto add = [&](const BasisIndex& idx) {
    for (auto& t : terms) {
      if (t.index == idx) {
        ++t.coeff;
        return;
      }
    }
    terms.push_back({idx, 1});
  };
  if (kronecker(j, p)) {
    const auto idx = BasisIndex::canonical(n, i, q);
    if (idx.is_middle_diagonal()) return std::nullopt;
    add(idx);
  }
  if (kronecker(j, n + 1 - p)) {
    const auto idx = BasisIndex::canonical(n, i, n + 1 - q);
    if (idx.is_middle_diagonal()) return std::nullopt;
    add(idx);
  }
  return terms;
}

std::vector<CentroMatrix> idempotents(Ring ring, std::size_t n) {
  std::vector<CentroMatrix> out;
  for (std::size_t i = 1; i <= half_up(n); ++i) out.push_back(CentroMatrix::checked(f_matrix(ring, n, i, i)));
  return out;
}

std::vector<BasisElement> peirce_component(Ring ring, std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t k = half_up(n);
  if (i < 1 || j < 1 || i > k || j > k) {
    throw IndexError("Peirce index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside 1.." +
                     std::to_string(k));
  }
  const auto first = BasisIndex::canonical(n, i, j);
  const auto second = BasisIndex::canonical(n, i, n + 1 - j);
  std::vector<BasisElement> out{{first, CentroMatrix::checked(f_matrix(ring, n, first.i, first.j))}};
  if (!(second == first)) out.push_back({second, CentroMatrix::checked(f_matrix(ring, n, second.i, second.j))});
  return out;
}

bool is_symmetric_sequence(std::span<const RingElt> s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!(s[k] == s[s.size() - 1 - k])) return false;
  return true;
}

std::optional<SymSeq> SymSeq::make(std::vector<RingElt> entries) {
  if (!is_symmetric_sequence(entries)) return std::nullopt;
  return SymSeq(std::move(entries));
}

Matrix seq_to_matrix(std::span<const RingElt> s) {
  std::size_t n = 0;
  while (n * n < s.size()) ++n;
  if (s.empty() || n * n != s.size()) {
    throw DimensionError("sequence length " + std::to_string(s.size()) + " is not a nonzero perfect square");
  }
  Matrix m(s.front().ring(), n);
  for (std::size_t k = 0; k < s.size(); ++k) m.set(k / n + 1, k % n + 1, s[k]);
  return m;
}

CentroMatrix seq_to_matrix(const SymSeq& s) { return CentroMatrix::checked(seq_to_matrix(std::span(s.entries()))); }

std::vector<RingElt> matrix_to_seq(const Matrix& a) {
  std::vector<RingElt> out;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= a.size(); ++j) out.push_back(a(i, j));
  return out;
}

}  // namespace censym
