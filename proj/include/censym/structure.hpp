#pragma once

/**
 * @file structure.hpp
 * @brief Explicit isomorphism and Morita witnesses for S_n(R).
 *
 * Every constructor returns a witness whose claims are meant to be checked
 * with check_witness; nothing here is trusted on construction.
 */

#include <cstddef>

#include "censym/algebra.hpp"

namespace censym::structure {

/// Coordinate vector of f_ij (any 1 <= i, j <= n) in S_n(R).
Vector f_vector(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);

/// R[C2] -> S_2(R): 1 -> f1_1, x -> f1_2.
LinearMapWitness iso_s2(const Ring& ring);

struct Presentation {
  AlgebraPtr algebra;
  LinearMapWitness witness;
};

/// Rank-5 algebra on (a, b, u, d, v) = [[a + b x, u], [d, v]] with
/// multiplication read off the corner formula, mapped onto
/// (f1_1, f1_3, f1_2, f2_1, f2_2).
Presentation s3_presentation(const Ring& ring);

/// M_m(R[C2]) -> S_2m(R): a E_ij + b x E_ij -> a f_ij + b f_{i,n+1-j}.
LinearMapWitness iso_even(const Ring& ring, std::size_t m);

struct OddQuotientIso {
  IdealBasis ideal;  // ideal generated by f_{m+1}
  Quotient quotient;  // presented on f_ij, 1 <= i, j <= m
  LinearMapWitness witness;  // quotient -> M_m(R)
};

/// S_{2m+1}(R) / (f_{m+1}) -> M_m(R): [f_ij] -> E_ij. m >= 1.
OddQuotientIso iso_odd_quotient(const Ring& ring, std::size_t m);

/// S_n(R) f_1 -> S_n(R) f_j by right multiplication with e_1j + e_{n,n+1-j}.
/// Module bases are the f-basis elements in columns {1, n} and {j, n+1-j}.
/// Requires n >= 4 and 2 <= j <= floor(n/2).
ModuleMapWitness morita_column_iso(const Ring& ring, std::size_t n, std::size_t j);

struct EndRing {
  /// e S e for e = f_1 + f_{m+1}, on (f_1, f_1n, f_{1,m+1}, f_{m+1,1}, f_{m+1})
  AlgebraPtr algebra;
  LinearMapWitness witness;  // onto S_3(R)
  Report relations;
};

/// n = 2m+1 with m >= 2.
EndRing endring_odd(const Ring& ring, std::size_t n);

struct WedderburnSplit {
  std::size_t k = 0;  // ceil(n/2)
  AlgebraPtr plus;  // p+ S p+ on its matrix units
  AlgebraPtr minus;  // p- S p-
  LinearMapWitness plus_iso;  // M_k(R) -> plus
  LinearMapWitness minus_iso;  // M_{n-k}(R) -> minus
  LinearMapWitness product_iso;  // M_k(R) x M_{n-k}(R) -> S_n(R)
};

/// Split along p+- = (1 +- c)/2. Throws PreconditionError unless 2 is a unit.
WedderburnSplit wedderburn_split(const Ring& ring, std::size_t n);

}  // namespace censym::structure
