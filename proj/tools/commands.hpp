#pragma once

#include <iosfwd>

namespace censym::cli {

/// Exit status: 0 all checks pass/unknown/undetermined, 1 some check fails,
/// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace censym::cli
