#include "censym/tensor.hpp"

#include <algorithm>

#include "censym/errors.hpp"

namespace censym {

void StructureTensor::set_product(std::size_t u, std::size_t v, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (t.index >= rank_) throw IndexError("structure constant index out of range");
    if (!merged.empty() && merged.back().index == t.index) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  products_[u * rank_ + v] = std::move(merged);
}

void StructureTensor::set_product_dense(std::size_t u, std::size_t v, const std::vector<RingElt>& coords) {
  if (coords.size() != rank_) throw DimensionError("dense product has wrong length");
  std::vector<Term> terms;
  for (std::size_t w = 0; w < rank_; ++w) {
    if (!coords[w].is_zero()) terms.push_back({w, coords[w]});
  }
  products_[u * rank_ + v] = std::move(terms);
}

RingElt StructureTensor::at(std::size_t u, std::size_t v, std::size_t w) const {
  for (const auto& t : product(u, v)) {
    if (t.index == w) return t.coeff;
  }
  return ring_.zero();
}

}  // namespace censym
