#pragma once

#include <ostream>

namespace ahecke::cli {

/// Runs one command and writes its JSON document to `out` (or to --output).
/// Returns 0 on success, 2 for invalid input, 3 for an exceeded cap and 4
/// when a mathematical check fails; failures also produce a JSON diagnostic.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace ahecke::cli
