#pragma once

#include <ostream>

namespace ainf {

/// Runs one command line. Returns 0 on success or a true verdict, 1 on a
/// checked-false verdict, 2 on malformed input or usage.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ainf
