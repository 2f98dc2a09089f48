#pragma once

#include <cstddef>
#include <vector>

#include "censym/ring.hpp"

namespace censym {

struct Term {
  std::size_t index;
  RingElt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Structure constants b_u * b_v = sum_w T[u][v][w] b_w, stored sparsely:
/// each (u, v) keeps its nonzero terms sorted by w.
class StructureTensor {
 public:
  StructureTensor(Ring ring, std::size_t rank) : ring_(ring), rank_(rank), products_(rank * rank) {}

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }

  const std::vector<Term>& product(std::size_t u, std::size_t v) const { return products_[u * rank_ + v]; }

  /// Drops zero coefficients and merges repeated indices.
  void set_product(std::size_t u, std::size_t v, std::vector<Term> terms);

  /// Sets (u, v) from a dense coordinate vector.
  void set_product_dense(std::size_t u, std::size_t v, const std::vector<RingElt>& coords);

  RingElt at(std::size_t u, std::size_t v, std::size_t w) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.products_ == b.products_;
  }

 private:
  Ring ring_;
  std::size_t rank_;
  std::vector<std::vector<Term>> products_;
};

}  // namespace censym
