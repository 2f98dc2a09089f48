#pragma once

#include <stdexcept>
#include <string>

namespace censym {

/// Operands live over different rings.
class RingMismatchError : public std::invalid_argument {
 public:
  RingMismatchError(const std::string& lhs, const std::string& rhs)
      : std::invalid_argument("ring mismatch: " + lhs + " vs " + rhs), lhs_(lhs), rhs_(rhs) {}

  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed ring or element literal, or malformed matrix file.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (parity of n,
/// non-field ring, 2 not invertible, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact elimination met a nonzero column without a unit entry, so freeness
/// over the coefficient ring could not be decided.
class FreenessUndetermined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace censym
