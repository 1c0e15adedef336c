// Seeded sampling and closest-k selection.
//
// Generator: std::mt19937_64 seeded through splitmix64. Sub-streams are
// derived from (seed, tag) so unrelated sampling steps never share a stream.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "stdiam/graph.hpp"

namespace stdiam {

inline constexpr std::string_view kRngName = "mt19937_64+splitmix64";

struct SampleConfig {
  std::uint64_t seed = 0;
  double constant_c = 2.0;

  /// Independent stream for one named sampling step.
  SampleConfig derive(std::string_view tag) const;
  std::mt19937_64 engine() const;
};

/// min(pool, ceil(c * sqrt(scale) * ln(max(n, 2)))).
std::size_t sample_size(const SampleConfig& cfg, std::size_t pool,
                        double scale, std::size_t n);

/// Uniform without replacement; result sorted ascending.
std::vector<Vertex> sample_vertices(std::span<const Vertex> pool,
                                    std::size_t count, const SampleConfig& cfg);

enum class EdgeFilter {
  all,
  /// Edges with one endpoint in S and the other in T. For directed graphs
  /// only arcs S -> T. Returned with u in S.
  crossing,
};

class EmptyPoolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edges passing `filter`, in input order.
std::vector<Edge> filtered_edges(const Graph& g, const PartitionSpec* p,
                                 EdgeFilter filter);

/// Uniform without replacement from filtered_edges. Throws EmptyPoolError
/// when the pool is empty and count > 0.
std::vector<Edge> sample_edges(const Graph& g, const PartitionSpec* p,
                               EdgeFilter filter, std::size_t count,
                               const SampleConfig& cfg);

/// Prefix of `pool` sorted by (dist, id). Unreachable vertices sort last.
std::vector<Vertex> closest_k(const DistanceArray& dist,
                              std::span<const Vertex> pool, std::size_t k);

/// One direction of an edge, ranked by the distance of `anchor`.
struct ArcEntry {
  Vertex anchor;
  Vertex other;
};

/// The first k arcs (anchor, other) with keep(anchor) true and anchor
/// reachable, ordered by (dist[anchor], anchor, other).
template <typename Keep>
std::vector<ArcEntry> closest_arcs(const Graph& g, const DistanceArray& dist,
                                   Keep keep, std::size_t k) {
  std::vector<Vertex> anchors;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] != kUnreachable && keep(v)) anchors.push_back(v);
  }
  std::vector<Vertex> ordered = closest_k(dist, anchors, anchors.size());
  std::vector<ArcEntry> out;
  for (Vertex a : ordered) {
    for (const Arc& arc : g.out_arcs(a)) {
      if (out.size() == k) return out;
      out.push_back({a, arc.target});
    }
  }
  return out;
}

}  // namespace stdiam
