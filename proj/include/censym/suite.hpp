#pragma once

// Named verification checks over (ring, n), shared by the CLI and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "censym/frobenius.hpp"
#include "censym/report.hpp"

namespace censym::suite {

/// closure, rank, structure-constants, frobenius, separability, split, isos,
/// cellchain, heredity, centre
const std::vector<std::string>& check_names();

/// Basis products and `batch` seeded random products stay centrosymmetric.
Report closure_check(const Ring& ring, std::size_t n, std::uint64_t seed = frobenius::kDefaultSeed,
                     std::size_t batch = frobenius::kDefaultBatch);

/// Basis size ceil(n^2/2) and the coords/from_coords round trip.
Report rank_check(const Ring& ring, std::size_t n, std::uint64_t seed = frobenius::kDefaultSeed,
                  std::size_t batch = frobenius::kDefaultBatch);

/// Oracle tensor against the closed product formula, the algebra audit, and
/// at n = 3 the three sample products.
Report structure_constants_check(const Ring& ring, std::size_t n);

/// Every structure witness that applies at this n.
std::vector<Report> iso_checks(const Ring& ring, std::size_t n);

/// Odd n: the heredity chain and every mu_ij; characteristic 2 at n = 2: the
/// negative control. Empty otherwise.
std::vector<Report> heredity_checks(const Ring& ring, std::size_t n);

/// Centre of S_n(R) against R[c].
Report centre_check(const Ring& ring, std::size_t n);

/// The 3x3 integer product of two bisymmetric matrices that leaves the
/// bisymmetric matrices.
Report demo_bisymmetric();

/// Runs one named check; throws std::invalid_argument on an unknown name.
std::vector<Report> run_check(const std::string& name, const Ring& ring, std::size_t n,
                              std::uint64_t seed = frobenius::kDefaultSeed);

}  // namespace censym::suite
