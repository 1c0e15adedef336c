// Immutable graph representation and the shortest-path kernels every
// estimator is built from.
//
// Vertices are dense 0-based ids. Distances are unsigned 64-bit integers with
// kUnreachable as a sentinel that compares greater than every finite value, so
// max/min folds over distance arrays need no special casing.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace stdiam {

using Vertex = std::uint32_t;
using Weight = std::uint32_t;
using Dist = std::uint64_t;

inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

/// Adds two distances, saturating at kUnreachable.
constexpr Dist add_dist(Dist a, Dist b) noexcept {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return a + b;
}

struct Arc {
  Vertex target;
  Weight weight;
};

/// An input edge as listed in the source file. For undirected graphs the
/// orientation (u, v) carries no meaning.
struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Builds the compressed adjacency. Throws std::invalid_argument when an
  /// endpoint is out of range or an unweighted graph carries a weight != 1.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed,
        bool weighted);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Number of input edges (an undirected edge counts once).
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }

  std::span<const Arc> out_arcs(Vertex v) const noexcept {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  /// Incoming arcs, stored with `target` naming the arc's tail. Identical to
  /// out_arcs for undirected graphs.
  std::span<const Arc> in_arcs(Vertex v) const noexcept {
    if (!directed_) return out_arcs(v);
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }

  /// Neighbor ids of out_arcs(v) (or in_arcs(v) when `reverse`) without
  /// weights. Only populated for unweighted graphs; keeps BFS scans compact.
  std::span<const Vertex> targets(Vertex v, bool reverse) const noexcept {
    const auto& ids = reverse && directed_ ? in_targets_ : out_targets_;
    const auto& offsets = reverse && directed_ ? in_offsets_ : out_offsets_;
    return {ids.data() + offsets[v], ids.data() + offsets[v + 1]};
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  Weight max_weight() const noexcept { return max_weight_; }

 private:
  std::size_t vertex_count_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  Weight max_weight_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_;
  std::vector<Vertex> out_targets_;
  std::vector<Vertex> in_targets_;
};

enum class PartitionMode { bichromatic, st, subset };

const char* to_string(PartitionMode mode) noexcept;

/// The (S, T) pair an ST parameter is defined over.
class PartitionSpec {
 public:
  /// T is the complement of S; both must be nonempty.
  static PartitionSpec bichromatic(std::size_t vertex_count,
                                   std::vector<Vertex> s);
  static PartitionSpec st(std::size_t vertex_count, std::vector<Vertex> s,
                          std::vector<Vertex> t);
  /// S = T.
  static PartitionSpec subset(std::size_t vertex_count, std::vector<Vertex> s);

  PartitionMode mode() const noexcept { return mode_; }
  std::size_t vertex_count() const noexcept { return in_s_.size(); }
  /// Sorted, duplicate-free.
  std::span<const Vertex> s() const noexcept { return s_; }
  std::span<const Vertex> t() const noexcept { return t_; }
  bool in_s(Vertex v) const noexcept { return in_s_[v] != 0; }
  bool in_t(Vertex v) const noexcept { return in_t_[v] != 0; }

  /// Same sets, relabelled as a general ST instance.
  PartitionSpec as_st() const;

 private:
  PartitionSpec(PartitionMode mode, std::size_t vertex_count,
                std::vector<Vertex> s, std::vector<Vertex> t);

  PartitionMode mode_ = PartitionMode::st;
  std::vector<Vertex> s_;
  std::vector<Vertex> t_;
  std::vector<char> in_s_;
  std::vector<char> in_t_;
};

/// Result of one (possibly multi-source) search. `dist[v]` is the distance
/// from the source set to v, or to the source set from v for reverse searches.
struct DistanceArray {
  std::vector<Vertex> sources;
  std::vector<Dist> dist;

  Dist operator[](Vertex v) const noexcept { return dist[v]; }
  std::size_t size() const noexcept { return dist.size(); }
};

/// BFS on unweighted graphs, binary-heap Dijkstra otherwise. Throws
/// std::out_of_range for a bad source.
DistanceArray sssp(const Graph& g, Vertex source);
/// Distances *to* `target`: dist[v] = d(v, target).
DistanceArray sssp_reverse(const Graph& g, Vertex target);
/// dist[v] = min over s in sources of d(s, v). Throws std::invalid_argument
/// for an empty source set.
DistanceArray multi_source_sssp(const Graph& g, std::span<const Vertex> sources);
/// dist[v] = min over x in targets of d(v, x).
DistanceArray multi_source_sssp_reverse(const Graph& g,
                                        std::span<const Vertex> targets);

/// Component id per vertex, ignoring edge direction. Ids are dense and
/// assigned in order of the smallest vertex of each component.
std::vector<std::uint32_t> weak_components(const Graph& g);

/// Strongly connected component id per vertex (iterative Tarjan). Ids are
/// in reverse topological order of the condensation: an arc between distinct
/// components always goes from a larger id to a smaller one.
std::vector<std::uint32_t> strong_components(const Graph& g);

/// Subgraph induced by `keep` (sorted, duplicate-free), relabelled densely in
/// the order given. Edges with an endpoint outside `keep` are dropped.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace stdiam
