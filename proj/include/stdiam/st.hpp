// ST eccentricities for arbitrary S, T (undirected) and the radius obtained
// from them. Every per-vertex estimate is at most the true eccentricity.

#pragma once

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"
#include "stdiam/sampling.hpp"

namespace stdiam {

/// Two searches. e(v)/3 <= e'(v) <= e(v).
EccentricityEstimates st_ecc_linear(const Graph& g, const PartitionSpec& p);

/// Unweighted only. e(v)/2 - 5/2 <= e'(v) <= e(v).
EccentricityEstimates st_ecc_sqrtn(const Graph& g, const PartitionSpec& p,
                                   const SampleConfig& cfg);

/// e(v)/2 <= e'(v) <= e(v).
EccentricityEstimates st_ecc_m32(const Graph& g, const PartitionSpec& p,
                                 const SampleConfig& cfg);

EccentricityEstimates st_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                             const SampleConfig& cfg);

/// Exact eccentricity of the vertex with the smallest estimate.
/// R <= R' <= 3R (linear), 2R + 5 (sqrtn), 2R (m32).
Estimate st_radius_from_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                            const SampleConfig& cfg);

}  // namespace stdiam
