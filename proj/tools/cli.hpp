#pragma once

#include <ostream>

namespace univalence {

/// Runs the command line; returns the process exit code (0 ok, 1 numeric
/// failure, 2 configuration error).
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace univalence
