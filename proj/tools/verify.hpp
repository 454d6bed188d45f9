#pragma once

#include <cstdint>
#include <ostream>

namespace isolab::cli {

/// Cross-checks the library against brute-force references on random small
/// graphs. Prints one line per check; returns the number of failed checks.
int run_verify(std::uint64_t seed, std::uint64_t graphs_per_n, std::ostream& out);

}  // namespace isolab::cli
