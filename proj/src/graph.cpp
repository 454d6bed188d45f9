#include "isolab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isolab/error.hpp"

namespace isolab {

VertexSet::VertexSet(Vertex universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(Vertex universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw DomainError("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  }
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  Word& w = words_[v / kWordBits];
  const Word bit = Word{1} << (v % kWordBits);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (const std::size_t tail = universe_ % kWordBits; tail != 0 && !out.words_.empty()) {
    out.words_.back() &= (Word{1} << tail) - 1;
  }
  out.size_ = universe_ - size_;
  return out;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Graph::Graph(Vertex n, GraphOptions options) : n_(n), options_(options), adj_(n) {
  if (n == 0) throw DomainError("a graph needs at least one vertex");
  build_rows();
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, GraphOptions options) {
  Graph g(n, options);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw DomainError("edge endpoint " + std::to_string(e.v) + " out of range for n = " +
                        std::to_string(n));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw DomainError("duplicate edge");
    }
  }
  g.m_ = edges.size();
  g.build_rows();
  return g;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u == e.v || e.v >= n_) throw DomainError("invalid edge");
  if (has_edge(e.u, e.v)) throw DomainError("edge already present");
  Graph g = *this;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(g.adj_[e.u], e.v);
  insert_sorted(g.adj_[e.v], e.u);
  ++g.m_;
  if (g.has_bitsets()) {
    g.rows_[e.u * row_words_ + e.v / kWordBits] |= Word{1} << (e.v % kWordBits);
    g.rows_[e.v * row_words_ + e.u / kWordBits] |= Word{1} << (e.u % kWordBits);
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  if (has_bitsets()) return ((row(a)[b / kWordBits] >> (b % kWordBits)) & 1U) != 0;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::build_rows() {
  rows_.clear();
  row_words_ = 0;
  if (n_ == 0 || n_ > options_.bitset_cap) return;
  row_words_ = words_for(n_);
  rows_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) rows_[u * row_words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }
}

namespace {

void require_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    throw DomainError("vertex set universe " + std::to_string(s.universe()) +
                      " does not match graph order " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

std::uint64_t boundary_size(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("boundary of the empty set is undefined here");
  require_same_universe(g, s);
  std::uint64_t total = 0;
  if (g.has_bitsets()) {
    const auto sw = s.words();
    s.for_each([&](Vertex u) {
      const auto r = g.row(u);
      for (std::size_t i = 0; i < r.size(); ++i) total += std::popcount(r[i] & ~sw[i]);
    });
  } else {
    s.for_each([&](Vertex u) {
      for (Vertex v : g.neighbors(u)) total += s.contains(v) ? 0 : 1;
    });
  }
  return total;
}

std::uint64_t induced_edge_count(const Graph& g, const VertexSet& s) {
  if (s.empty()) return 0;
  require_same_universe(g, s);
  std::uint64_t twice = 0;
  if (g.has_bitsets()) {
    const auto sw = s.words();
    s.for_each([&](Vertex u) {
      const auto r = g.row(u);
      for (std::size_t i = 0; i < r.size(); ++i) twice += std::popcount(r[i] & sw[i]);
    });
  } else {
    s.for_each([&](Vertex u) {
      for (Vertex v : g.neighbors(u)) twice += s.contains(v) ? 1 : 0;
    });
  }
  return twice / 2;
}

std::uint32_t min_degree(const Graph& g) {
  std::uint32_t best = g.num_vertices() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.num_vertices(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::uint32_t max_degree(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_independent(const Graph& g, const VertexSet& s) { return induced_edge_count(g, s) == 0; }

std::size_t component_count(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const Vertex a = find(u);
      const Vertex b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph star_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

}  // namespace isolab
