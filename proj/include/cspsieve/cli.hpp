#pragma once

#include <iosfwd>

namespace cspsieve::cli {

// Exit codes: 0 success (and CSP holds, for verify), 1 CSP failure,
// 2 invalid parameters or usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cspsieve::cli
