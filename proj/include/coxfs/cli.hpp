#pragma once

#include <iosfwd>

namespace coxfs {

/// The coxfs command line. Returns 0 on success, 1 when a check fails, 2 on bad usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace coxfs
