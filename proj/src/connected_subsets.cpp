#include "isolab/connected_subsets.hpp"

#include <vector>

namespace isolab {

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, std::uint32_t max_size, std::uint64_t max_visits,
             const std::function<Visit(const SubsetView&)>& visit)
      : g_(g), max_size_(max_size), max_visits_(max_visits), visit_(visit),
        inside_count_(g.num_vertices(), 0), in_subset_(g.num_vertices(), 0) {}

  EnumerationStats run() {
    if (max_size_ == 0) return stats_;
    for (Vertex root = 0; root < g_.num_vertices() && !halted(); ++root) {
      root_ = root;
      add(root);
      std::vector<Vertex> extension;
      for (Vertex u : g_.neighbors(root))
        if (u > root) extension.push_back(u);
      extend(std::move(extension));
      remove(root);
    }
    return stats_;
  }

 private:
  bool halted() const { return stats_.stopped || stats_.budget_exhausted; }

  void add(Vertex w) {
    boundary_ = boundary_ + g_.degree(w) - 2ULL * inside_count_[w];
    induced_ += inside_count_[w];
    members_.push_back(w);
    in_subset_[w] = 1;
    for (Vertex u : g_.neighbors(w)) ++inside_count_[u];
  }

  void remove(Vertex w) {
    for (Vertex u : g_.neighbors(w)) --inside_count_[u];
    in_subset_[w] = 0;
    members_.pop_back();
    induced_ -= inside_count_[w];
    boundary_ = boundary_ + 2ULL * inside_count_[w] - g_.degree(w);
  }

  void extend(std::vector<Vertex> extension) {
    if (++stats_.visits > max_visits_) {
      stats_.budget_exhausted = true;
      return;
    }
    const Visit action = visit_(SubsetView{members_, boundary_, induced_, inside_count_});
    if (action == Visit::Stop) {
      stats_.stopped = true;
      return;
    }
    if (action == Visit::Prune || members_.size() == max_size_) return;

    while (!extension.empty() && !halted()) {
      const Vertex w = extension.back();
      extension.pop_back();
      std::vector<Vertex> next = extension;
      // Exclusive neighbors of w: not in the subset and not adjacent to it.
      for (Vertex u : g_.neighbors(w)) {
        if (u > root_ && in_subset_[u] == 0 && inside_count_[u] == 0) next.push_back(u);
      }
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const Graph& g_;
  const std::uint32_t max_size_;
  const std::uint64_t max_visits_;
  const std::function<Visit(const SubsetView&)>& visit_;

  Vertex root_ = 0;
  std::vector<Vertex> members_;
  std::vector<std::uint32_t> inside_count_;
  std::vector<std::uint8_t> in_subset_;
  std::uint64_t boundary_ = 0;
  std::uint64_t induced_ = 0;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats for_each_connected_subset(const Graph& g, std::uint32_t max_size,
                                           std::uint64_t max_visits,
                                           const std::function<Visit(const SubsetView&)>& visit) {
  return Enumerator(g, max_size, max_visits, visit).run();
}

}  // namespace isolab
