#pragma once

/**
 * @file cellular.hpp
 * @brief Cell ideals, cell chains and heredity ideals.
 *
 * A cell ideal J of (A, i) comes with a left ideal Delta inside J and a
 * bimodule isomorphism alpha: J -> Delta (x) i(Delta). The tensor product is
 * stored on the basis delta_a (x) i(delta_c), flattened to a * |Delta| + c,
 * so alpha is a |Delta|^2 x |J| coordinate matrix.
 */

#include <optional>
#include <vector>

#include "censym/algebra.hpp"

namespace censym::cellular {

struct CellIdealWitness {
  AlgebraPtr algebra;
  std::vector<Vector> ideal;  // J basis in A-coordinates
  std::vector<Vector> delta;  // Delta basis, inside J
  CoordMatrix alpha;

  nlohmann::json to_json() const;
};

/// Clauses: involution-stable, delta-free-rank, bimodule, bijective,
/// commuting-square.
Report verify_cell_ideal(const CellIdealWitness& w);

/// One layer J'_p of a chain. `cell` lives in the quotient of A by the sum
/// of the earlier layers, presented on this and the later layers, so its
/// ideal is spanned by the first |span| basis vectors.
struct CellLayer {
  std::vector<Vector> span;  // J'_p in A-coordinates
  std::vector<Vector> delta;  // Delta_p lifted to A-coordinates
  CellIdealWitness cell;
};

struct CellChainWitness {
  AlgebraPtr algebra;
  std::vector<CellLayer> layers;

  nlohmann::json to_json() const;
};

struct LayerSpec {
  std::vector<Vector> span;
  std::vector<Vector> delta;
  CoordMatrix alpha;
};

/// Builds the successive quotients for the given layers.
CellChainWitness assemble_chain(const AlgebraPtr& algebra, const std::vector<LayerSpec>& layers);

/// Direct-sum decomposition, partial sums are ideals, layers are involution
/// stable, rank bookkeeping, and every layer's cell ideal.
Report verify_cell_chain(const CellChainWitness& w);

/// n = 2m+1: J'_1 = S f_{m+1} S with Delta_1 = f_{a,m+1}; J'_2 = span of f_ij,
/// i, j <= m, with Delta_2 = f_i1 in the quotient.
CellChainWitness cell_chain_odd(const Ring& ring, std::size_t n);

/// n = 2m: built in M_m(R[C2]) from (1-x)E_ij and E_ij, moved to S_n(R)
/// along iso_even.
CellChainWitness cell_chain_even(const Ring& ring, std::size_t n);

/// Dispatches on the parity of n.
CellChainWitness cell_chain(const Ring& ring, std::size_t n);

struct HeredityWitness {
  AlgebraPtr algebra;
  Vector e;
  std::vector<Vector> ae_basis;
  std::vector<Vector> ea_basis;
  std::vector<Vector> ideal_basis;  // products p_a q_b, a basis of AeA
  std::optional<CellIdealWitness> cell;  // when i(e) = e

  nlohmann::json to_json() const;
};

struct HeredityResult {
  Report report;
  std::optional<HeredityWitness> witness;  // set when the report passes
};

/// eAe = R e, free bases of Ae and eA, and injectivity of
/// Ae (x) eA -> AeA. Throws PreconditionError unless e^2 = e.
HeredityResult heredity_check(const AlgebraPtr& algebra, const Vector& e);

struct HeredityChain {
  std::vector<HeredityResult> steps;
  Report report;
};

/// f_{m+1} in S_n(R), then f_11 in the quotient by its ideal (isomorphic to
/// M_m(R)). Throws PreconditionError for even n.
HeredityChain quasi_hereditary_chain_odd(const Ring& ring, std::size_t n);

/// Multiplication f_i S f_{m+1} (x) f_{m+1} S f_j -> S, odd n, 1 <= i, j <= m+1.
Report injectivity_check_mu(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);

/// Over a finite ring of characteristic 2: the ideal of R[C2] generated by
/// 1 + x squares to zero and no idempotent generates it; also the first
/// layer of the S_2 chain squares to zero.
Report char2_negative_control(const Ring& ring);

}  // namespace censym::cellular
