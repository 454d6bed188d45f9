#include "naive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace isolab::oracle {

bool same_value(Fraction a, Fraction b) { return a.num * b.den == b.num * a.den; }
bool less_than(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }

std::uint64_t cut_edges(const EdgePairs& edges, std::uint64_t mask) {
  std::uint64_t count = 0;
  for (auto [u, v] : edges) {
    const bool a = (mask >> u) & 1u;
    const bool b = (mask >> v) & 1u;
    if (a != b) ++count;
  }
  return count;
}

std::uint64_t inside_edges(const EdgePairs& edges, std::uint64_t mask) {
  std::uint64_t count = 0;
  for (auto [u, v] : edges) {
    if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ++count;
  }
  return count;
}

Fraction isoperimetric(unsigned n, const EdgePairs& edges) {
  if (n < 2 || n > 24) throw std::invalid_argument("oracle handles 2 <= n <= 24");
  Fraction best{~std::uint64_t{0}, 1};
  bool any = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const unsigned size = std::popcount(mask);
    if (2 * size > n) continue;
    const Fraction f{cut_edges(edges, mask), size};
    if (!any || less_than(f, best)) best = f;
    any = true;
  }
  return best;
}

std::vector<std::uint64_t> minimizing_masks(unsigned n, const EdgePairs& edges) {
  const Fraction best = isoperimetric(n, edges);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const unsigned size = std::popcount(mask);
    if (2 * size > n) continue;
    if (same_value(Fraction{cut_edges(edges, mask), size}, best)) out.push_back(mask);
  }
  return out;
}

namespace {

std::vector<unsigned> degrees(unsigned n, const EdgePairs& edges) {
  std::vector<unsigned> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

}  // namespace

unsigned min_degree(unsigned n, const EdgePairs& edges) {
  const auto deg = degrees(n, edges);
  return *std::min_element(deg.begin(), deg.end());
}

unsigned max_degree(unsigned n, const EdgePairs& edges) {
  const auto deg = degrees(n, edges);
  return *std::max_element(deg.begin(), deg.end());
}

bool connected(unsigned n, const EdgePairs& edges) {
  // Repeated relaxation of component labels; quadratic but obviously right.
  std::vector<unsigned> label(n);
  std::iota(label.begin(), label.end(), 0u);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : edges) {
      const unsigned low = std::min(label[u], label[v]);
      if (label[u] != low || label[v] != low) {
        label[u] = label[v] = low;
        changed = true;
      }
    }
  }
  return std::all_of(label.begin(), label.end(), [](unsigned l) { return l == 0; });
}

std::uint64_t dense_subset(unsigned n, const EdgePairs& edges, unsigned k_max) {
  if (n > 24) throw std::invalid_argument("oracle handles n <= 24");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const unsigned size = std::popcount(mask);
    if (size <= k_max && inside_edges(edges, mask) > 2ull * size) return mask;
  }
  return 0;
}

std::uint64_t degree_hitting_time(unsigned n, const EdgePairs& order, unsigned d) {
  for (std::uint64_t t = 0; t <= order.size(); ++t) {
    const EdgePairs prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    if (min_degree(n, prefix) >= d) return t;
  }
  throw std::invalid_argument("degree never reached");
}

}  // namespace isolab::oracle
