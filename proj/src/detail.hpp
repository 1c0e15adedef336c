// Internal helpers shared by the estimators. Not installed.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"
#include "stdiam/sampling.hpp"

namespace stdiam::detail {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Counts every search it runs; multi-source searches count once.
class SearchEngine {
 public:
  explicit SearchEngine(const Graph& g) : g_(g) {}

  DistanceArray forward(Vertex s) {
    ++count_;
    return sssp(g_, s);
  }
  DistanceArray backward(Vertex t) {
    ++count_;
    return sssp_reverse(g_, t);
  }
  DistanceArray from_set(std::span<const Vertex> sources) {
    ++count_;
    return multi_source_sssp(g_, sources);
  }
  DistanceArray to_set(std::span<const Vertex> targets) {
    ++count_;
    return multi_source_sssp_reverse(g_, targets);
  }

  const Graph& graph() const noexcept { return g_; }
  std::size_t count() const noexcept { return count_; }

 private:
  const Graph& g_;
  std::size_t count_ = 0;
};

inline Dist max_over(const DistanceArray& d, std::span<const Vertex> set) {
  Dist best = 0;
  for (Vertex v : set) best = std::max(best, d[v]);
  return best;
}

/// Pool member with the smallest (dist, id); kNoVertex when none reachable.
inline Vertex nearest(const DistanceArray& d, std::span<const Vertex> pool) {
  Vertex best = kNoVertex;
  for (Vertex v : pool) {
    if (d[v] == kUnreachable) continue;
    if (best == kNoVertex || d[v] < d[best] || (d[v] == d[best] && v < best)) {
      best = v;
    }
  }
  return best;
}

/// Pool member with the largest value, smallest id on ties.
template <typename Value>
Vertex argmax(std::span<const Vertex> pool, Value value) {
  Vertex best = kNoVertex;
  for (Vertex v : pool) {
    if (best == kNoVertex || value(v) > value(best) ||
        (value(v) == value(best) && v < best)) {
      best = v;
    }
  }
  return best;
}

/// Pool member with the smallest value, smallest id on ties.
template <typename Value>
Vertex argmin(std::span<const Vertex> pool, Value value) {
  Vertex best = kNoVertex;
  for (Vertex v : pool) {
    if (best == kNoVertex || value(v) < value(best) ||
        (value(v) == value(best) && v < best)) {
      best = v;
    }
  }
  return best;
}

inline std::size_t sqrt_cap(std::size_t x) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(x))));
}

inline void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// What one undirected search from v tells us about S and T.
struct Summary {
  Dist ecc_t = 0;  // max over T of d(v, .)
  Dist ecc_s = 0;  // max over S of d(., v)
  Vertex near_t = kNoVertex;  // v itself when v in T
  Vertex near_s = kNoVertex;  // v itself when v in S
  Vertex far_t = kNoVertex;   // argmax over T, smallest id
};

/// Memoized per-source summaries on an undirected graph.
class SummaryCache {
 public:
  SummaryCache(SearchEngine& engine, const PartitionSpec& p)
      : engine_(engine), p_(p) {}

  /// `visit` sees the full array when a new search runs.
  const Summary& get(Vertex v,
                     const std::function<void(const DistanceArray&)>& visit = {}) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    const DistanceArray d = engine_.forward(v);
    if (visit) visit(d);
    Summary s;
    s.ecc_t = max_over(d, p_.t());
    s.ecc_s = max_over(d, p_.s());
    s.near_t = p_.in_t(v) ? v : nearest(d, p_.t());
    s.near_s = p_.in_s(v) ? v : nearest(d, p_.s());
    s.far_t = argmax(p_.t(), [&d](Vertex x) { return d[x]; });
    return memo_.emplace(v, s).first->second;
  }

  bool contains(Vertex v) const { return memo_.count(v) != 0; }

 private:
  SearchEngine& engine_;
  const PartitionSpec& p_;
  std::unordered_map<Vertex, Summary> memo_;
};

/// Running max of candidate values, kept in the trace.
class MaxFold {
 public:
  explicit MaxFold(Trace& trace) : trace_(trace) {}
  void add(const std::string& name, Dist value) {
    trace_.candidate(name, value);
    best_ = best_ ? std::max(*best_, value) : value;
  }
  Dist value() const { return best_.value_or(kUnreachable); }

 private:
  Trace& trace_;
  std::optional<Dist> best_;
};

/// Running min of (eccentricity, vertex) candidates.
class MinFold {
 public:
  explicit MinFold(Trace& trace) : trace_(trace) {}
  void add(const std::string& name, Dist value, Vertex who) {
    trace_.candidate(name, value);
    if (who_ == kNoVertex || value < best_ || (value == best_ && who < who_)) {
      best_ = value;
      who_ = who;
    }
  }
  Dist value() const { return best_; }
  Vertex who() const { return who_; }

 private:
  Trace& trace_;
  Dist best_ = kUnreachable;
  Vertex who_ = kNoVertex;
};

/// Graph restricted to the connected component holding T, for undirected
/// estimators that assume connectivity.
struct Focus {
  enum class Status {
    whole,       // graph is connected: use it as is
    restricted,  // T in one component; run on that component
    none,        // T spans components or S misses T's component
  };
  Status status = Status::whole;
  bool all_s_inside = true;
  std::optional<Graph> graph;
  std::optional<PartitionSpec> part;
  std::vector<Vertex> global;  // local id -> original id
};

Focus focus_on_targets(const Graph& g, const PartitionSpec& p);

/// Runs `fn(graph, part)` on the focused instance, mapping witnesses back.
/// Diameter-like quantities need every S vertex inside the component.
Estimate run_focused(const Graph& g, const PartitionSpec& p, Quantity quantity,
                     const std::function<Estimate(const Graph&,
                                                  const PartitionSpec&)>& fn);

EccentricityEstimates run_focused_ecc(
    const Graph& g, const PartitionSpec& p,
    const std::function<EccentricityEstimates(const Graph&,
                                              const PartitionSpec&)>& fn);

Estimate unreachable_estimate(Quantity quantity);

void require_undirected(const Graph& g, const char* algo);
void require_directed(const Graph& g, const char* algo);
void require_unweighted(const Graph& g, const char* algo);
void require_mode(const PartitionSpec& p, PartitionMode mode, const char* algo);

}  // namespace stdiam::detail
