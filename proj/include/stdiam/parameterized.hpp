// Bichromatic estimators whose cost is linear in the boundary size.
// Unweighted graphs only. Every estimate is a realized distance or
// eccentricity, so the side of the truth it lands on is unconditional.

#pragma once

#include <vector>

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"

namespace stdiam {

struct BoundarySets {
  std::vector<Vertex> s_prime;  // S vertices with an edge into T
  std::vector<Vertex> t_prime;  // T vertices with an edge from S
  std::vector<Vertex> b;        // smaller of the two, S' on ties
  bool b_in_s = true;
  std::vector<Vertex> b_prime;  // S' u T'
};

/// For directed graphs S' and T' use only arcs S -> T.
BoundarySets boundary(const Graph& g, const PartitionSpec& p);

/// 2D/3 - 1 <= D' <= D. At most 2|B| + 2 searches.
Estimate param_bi_diam(const Graph& g, const PartitionSpec& p);

/// R <= R' <= 3R/2 + 3. At most |B| + 1 searches.
Estimate param_bi_radius(const Graph& g, const PartitionSpec& p);

/// 3e(v)/5 - 1 <= e'(v) <= e(v). At most 3|B| + 2 searches.
EccentricityEstimates param_bi_ecc(const Graph& g, const PartitionSpec& p);

/// Directed. 2D/3 <= D' <= D. Exactly |B'| + 2 searches.
Estimate param_bi_diam_directed(const Graph& g, const PartitionSpec& p);

}  // namespace stdiam
