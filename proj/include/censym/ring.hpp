#pragma once

/**
 * @file ring.hpp
 * @brief Pluggable exact commutative rings.
 *
 * A Ring is a cheap handle to an interned, immutable ring description:
 * the integers, the rationals, Z/mZ, or the group ring R[C2] over any of
 * these (nesting allowed). Elements (RingElt) carry their ring and are kept
 * in canonical form, so equality is payload equality:
 *
 * - integers: arbitrary precision
 * - rationals: reduced, positive denominator
 * - Z/mZ: residue in [0, m)
 * - R[C2]: a + b*x with a, b in R and x*x = 1
 *
 * Internally an element of c2^d:R is the coefficient vector of the group
 * algebra of (C2)^d over the leaf ring R, indexed by bitmask; the top-level
 * generator is the highest bit, so the first half of the vector is `a` and
 * the second half is `b`.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace censym {

enum class RingKind { integer, rational, modular, group_ring_c2 };

namespace detail {
struct RingData;
}

class RingElt;

class Ring {
 public:
  /// The integers.
  Ring();

  static Ring integers();
  static Ring rationals();
  /// Z/mZ; throws PreconditionError when m < 2.
  static Ring modular(const mpz_class& modulus);
  static Ring group_ring_c2(const Ring& base);

  /// Parses `int`, `rat`, `zmod:<m>`, `gf:<p>` (p prime) and `c2:<ring>`.
  static Ring parse(std::string_view literal);

  RingKind kind() const;
  /// Modulus of a modular ring; throws PreconditionError otherwise.
  const mpz_class& modulus() const;
  /// Coefficient ring of a group ring; throws PreconditionError otherwise.
  Ring base() const;
  /// Innermost non-group ring.
  Ring leaf() const;
  /// Number of nested group-ring constructions.
  int depth() const;
  bool is_field() const;
  bool is_finite() const;
  /// Number of elements of a finite ring.
  mpz_class cardinality() const;
  /// Canonical literal (prime moduli print as `gf:<p>`).
  const std::string& literal() const;

  RingElt zero() const;
  RingElt one() const;
  RingElt from_int(long value) const;
  RingElt from_integer(const mpz_class& value) const;
  /// Rational ring only; throws PreconditionError elsewhere.
  RingElt from_rational(const mpq_class& value) const;
  /// The generator x of a group ring.
  RingElt generator() const;
  RingElt parse_element(std::string_view literal) const;
  /// Small random element (integers in [-3, 3], fractions with small
  /// numerator and denominator, uniform residues).
  RingElt random(std::mt19937_64& rng) const;
  /// All elements of a finite ring, in a fixed order.
  std::vector<RingElt> elements() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.d_ == b.d_; }

 private:
  explicit Ring(const detail::RingData* data) : d_(data) {}
  const detail::RingData* d_;

  friend class RingElt;
};

/// Element of a Ring in canonical form.
class RingElt {
 public:
  /// Integer zero.
  RingElt();
  /// Canonicalizes `coefficients` (length 2^depth) for `ring`.
  RingElt(Ring ring, std::vector<mpq_class> coefficients);

  const Ring& ring() const { return ring_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  std::optional<RingElt> inverse() const;

  /// (a, b) with this = a + b*x; group-ring elements only.
  std::pair<RingElt, RingElt> split() const;
  /// a + b*x in c2:<ring of a>.
  static RingElt combine(const RingElt& a, const RingElt& b);

  std::string to_string() const;

  RingElt& operator+=(const RingElt& rhs);
  RingElt& operator-=(const RingElt& rhs);
  RingElt& operator*=(const RingElt& rhs);

  friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
  friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
  friend RingElt operator*(const RingElt& a, const RingElt& b);
  friend RingElt operator-(RingElt a);
  friend bool operator==(const RingElt& a, const RingElt& b);

 private:
  friend class Ring;
  struct Raw {};
  RingElt(Ring ring, std::vector<mpq_class> coefficients, Raw) : ring_(ring), c_(std::move(coefficients)) {}
  void reduce();

  Ring ring_;
  std::vector<mpq_class> c_;
};

enum class ArithOp { add, mul, neg, sub };

/// Ring operation with a structured error when the operands' rings differ.
/// `neg` ignores `b` apart from the ring check.
RingElt arith(ArithOp op, const RingElt& a, const RingElt& b);

/// d with 2*d = 1, if 2 is a unit.
std::optional<RingElt> invert_two(const Ring& ring);

inline Ring group_ring_c2(const Ring& base) { return Ring::group_ring_c2(base); }

/// Deterministic trial-division primality test.
bool is_prime(const mpz_class& value);

}  // namespace censym
