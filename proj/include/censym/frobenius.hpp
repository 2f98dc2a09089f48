#pragma once

// The Frobenius extension S_n(R) in M_n(R): the map E(a) = a + cac with the
// system x_i = e_i1, y_i = e_1i, plus separability and splitness witnesses.
// For n = 1 the extension is R in R and the system is (id, 1, 1); there
// a + cac = 2a would break the unit identities.

#include <cstdint>
#include <string>
#include <vector>

#include "censym/centro.hpp"
#include "censym/report.hpp"

namespace censym::frobenius {

inline constexpr std::uint64_t kDefaultSeed = 20240517;
inline constexpr std::size_t kDefaultBatch = 100;

struct FrobeniusSystem {
  Ring ring;
  std::size_t n = 1;
  std::vector<Matrix> x;  // x_i = e_i1
  std::vector<Matrix> y;  // y_i = e_1i

  static FrobeniusSystem make(const Ring& ring, std::size_t n);

  /// e_map(a) for n >= 2, a itself for n = 1.
  CentroMatrix E(const Matrix& a) const;
  /// Human-readable form of E.
  std::string describe_e() const;
};

/// a + cac
CentroMatrix e_map(const Matrix& a);

/// Sum_i x_i E(y_i a)
Matrix left_expansion(const FrobeniusSystem& sys, const Matrix& a);
/// Sum_i E(a x_i) y_i
Matrix right_expansion(const FrobeniusSystem& sys, const Matrix& a);

/// Both unit identities on every matrix unit and on `batch` random matrices,
/// the bimodule property of E on (f-basis x matrix-unit) pairs and
/// centrosymmetry of the image of E.
Report verify_frobenius_system(const FrobeniusSystem& sys, std::uint64_t seed = kDefaultSeed,
                               std::size_t batch = kDefaultBatch);

/// d = 1 lies in the centralizer and Sum_i x_i d y_i = 1.
Report separability_check(const FrobeniusSystem& sys);

/// pass with witness d = 2^-1 * 1 when 2 is a unit (d = 1 for n = 1);
/// otherwise `unknown`, never `fail` on a missing witness.
Report splitness_check(const FrobeniusSystem& sys);

/// d commutes with every f-basis element.
bool centralizer_membership(const FrobeniusSystem& sys, const Matrix& d);

}  // namespace censym::frobenius
