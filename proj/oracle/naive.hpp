#pragma once

// Brute-force reference computations for tests. Deliberately written against
// plain edge lists and bit masks, sharing no code with the solver.

#include <cstdint>
#include <utility>
#include <vector>

namespace isolab::oracle {

using EdgePairs = std::vector<std::pair<unsigned, unsigned>>;

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

bool same_value(Fraction a, Fraction b);
bool less_than(Fraction a, Fraction b);

/// Edges with exactly one endpoint in `mask`.
std::uint64_t cut_edges(const EdgePairs& edges, std::uint64_t mask);
std::uint64_t inside_edges(const EdgePairs& edges, std::uint64_t mask);

/// min |∂S|/|S| over all masks with 1 <= |S| <= n/2 (n <= 24).
Fraction isoperimetric(unsigned n, const EdgePairs& edges);
/// Every mask attaining the minimum, both halves of an even split included.
std::vector<std::uint64_t> minimizing_masks(unsigned n, const EdgePairs& edges);

unsigned min_degree(unsigned n, const EdgePairs& edges);
unsigned max_degree(unsigned n, const EdgePairs& edges);
bool connected(unsigned n, const EdgePairs& edges);

/// Some mask of size <= k_max with more than 2|S| inside edges, or 0 (n <= 24).
std::uint64_t dense_subset(unsigned n, const EdgePairs& edges, unsigned k_max);

/// Smallest t with every degree among the first t edges at least d.
std::uint64_t degree_hitting_time(unsigned n, const EdgePairs& order, unsigned d);

}  // namespace isolab::oracle
