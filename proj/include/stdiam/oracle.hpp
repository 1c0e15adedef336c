// Exact ST parameters by one full search per S vertex. Test-scale ground
// truth; no attempt is made to beat O(|S| m).

#pragma once

#include <optional>
#include <vector>

#include "stdiam/graph.hpp"

namespace stdiam {

struct OracleResult {
  Dist value = kUnreachable;
  /// Diameter: the pair (s*, t*). Radius: the center in `first`.
  /// Eccentricity: v in `first`, its farthest T vertex in `second`.
  /// Empty when the value is UNREACHABLE.
  std::optional<Vertex> first;
  std::optional<Vertex> second;
};

/// One entry per S vertex in ascending order. Directed graphs use forward
/// distances; the farthest witness is the smallest id among ties.
std::vector<OracleResult> exact_st_ecc(const Graph& g, const PartitionSpec& p);

OracleResult exact_diam(const Graph& g, const PartitionSpec& p);
OracleResult exact_radius(const Graph& g, const PartitionSpec& p);

/// Both folds from an already computed eccentricity table.
OracleResult diam_from_ecc(const std::vector<OracleResult>& ecc);
OracleResult radius_from_ecc(const std::vector<OracleResult>& ecc);

}  // namespace stdiam
