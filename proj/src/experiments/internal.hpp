#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "isolab/experiments.hpp"
#include "isolab/graph.hpp"
#include "isolab/ratio.hpp"

namespace isolab::detail {

inline nlohmann::ordered_json members_json(const VertexSet& s) {
  auto arr = nlohmann::ordered_json::array();
  s.for_each([&](Vertex v) { arr.push_back(v); });
  return arr;
}

inline Frequency count_frequency(std::string name, const std::vector<bool>& outcomes) {
  Frequency f{std::move(name), 0, outcomes.size()};
  for (bool ok : outcomes) f.successes += ok ? 1 : 0;
  return f;
}

/// Accumulates values in insertion (trial) order so results are independent of
/// worker scheduling.
class SummaryBuilder {
 public:
  explicit SummaryBuilder(std::string name) { s_.name = std::move(name); }
  void add(double x) {
    if (s_.count == 0) {
      s_.min = s_.max = x;
    } else {
      s_.min = std::min(s_.min, x);
      s_.max = std::max(s_.max, x);
    }
    ++s_.count;
    sum_ += x;
  }
  Summary build() const {
    Summary out = s_;
    out.mean = s_.count == 0 ? 0.0 : sum_ / static_cast<double>(s_.count);
    return out;
  }

 private:
  Summary s_;
  double sum_ = 0.0;
};

std::string format_double(double x);

ExperimentResult make_result(const ExperimentConfig& cfg);

}  // namespace isolab::detail
