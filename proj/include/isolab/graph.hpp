#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace isolab {

using Vertex = std::uint32_t;
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Undirected vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of {0, ..., universe-1} stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex universe) : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(Vertex universe, std::initializer_list<Vertex> members);
  VertexSet(Vertex universe, std::span<const Vertex> members);

  Vertex universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  std::vector<Vertex> members() const;
  std::span<const Word> words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Vertex universe_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Witness tie-break order: smaller sets first, then lexicographic on the
/// ascending member lists ({0,1} < {0,2} < {1,2}).
bool size_lex_less(const VertexSet& a, const VertexSet& b);

struct GraphOptions {
  /// Bitset rows are materialized when n <= bitset_cap; above it only
  /// adjacency lists are stored.
  Vertex bitset_cap = 4096;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is kept both as sorted neighbor lists and, for n <= bitset_cap,
/// as one bitset row per vertex so that a set's boundary costs O(n/64) per
/// member.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n, GraphOptions options = {});

  /// Throws DomainError on self-loops, out-of-range endpoints and duplicates.
  static Graph from_edges(Vertex n, std::span<const Edge> edges, GraphOptions options = {});
  static Graph from_edges(Vertex n, std::initializer_list<Edge> edges, GraphOptions options = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), options);
  }

  /// Copy of this graph with one more edge. The edge must be absent.
  Graph with_edge(Edge e) const;

  Vertex num_vertices() const noexcept { return n_; }
  std::uint64_t num_edges() const noexcept { return m_; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  bool has_bitsets() const noexcept { return !rows_.empty(); }
  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * row_words_, row_words_};
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;
  const GraphOptions& options() const noexcept { return options_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void build_rows();

  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  GraphOptions options_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t row_words_ = 0;
  std::vector<Word> rows_;
};

/// |{(u,v) in E : u in s, v not in s}|. Throws DomainError if s is empty or
/// its universe differs from the graph's vertex count.
std::uint64_t boundary_size(const Graph& g, const VertexSet& s);

/// Number of edges with both endpoints in s.
std::uint64_t induced_edge_count(const Graph& g, const VertexSet& s);

/// 0 for edgeless graphs.
std::uint32_t min_degree(const Graph& g);
std::uint32_t max_degree(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
std::size_t component_count(const Graph& g);
inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// Common fixtures.
Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex n);  // center 0

}  // namespace isolab
