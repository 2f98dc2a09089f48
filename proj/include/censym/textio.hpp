#pragma once

// Plain-text matrix files:
//
//   n 3 ring c2:int
//   1 0 x
//   0 2+x 0
//   x 0 1
//
// Entries are ring element literals without spaces; `#` starts a comment.

#include <iosfwd>

#include "censym/matrix.hpp"

namespace censym {

/// Throws ParseError on malformed input.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);

}  // namespace censym
