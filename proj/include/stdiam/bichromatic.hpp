// Bichromatic (T = V \ S) diameter and radius estimators.
//
// Undirected estimators assume connectivity. On a disconnected input they
// run on the component holding T; a diameter is UNREACHABLE unless S also
// lies in that component, and S vertices outside it have eccentricity
// UNREACHABLE.
//
// Every diameter candidate is a realized S-T distance and every radius
// candidate is the exact eccentricity of some S vertex.

#pragma once

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"
#include "stdiam/sampling.hpp"

namespace stdiam {

/// Searches from both ends of the lightest S-T edge.
/// Guarantee D/2 - W/2 <= D' <= D, W the weight of that edge.
Estimate bi_diam_linear(const Graph& g, const PartitionSpec& p);

/// Unweighted only. 3D/5 - 6/5 <= D' <= D.
Estimate bi_diam_sqrtn(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg);

/// Edge-sampled variant for integer weights. 3D/5 <= D' <= D.
Estimate bi_diam_m32(const Graph& g, const PartitionSpec& p,
                     const SampleConfig& cfg);

/// Eccentricity of the S end of the lightest S-T edge.
/// R <= R' <= 2R + w(s,t).
Estimate bi_radius_linear(const Graph& g, const PartitionSpec& p);

/// Unweighted only. R <= R' <= 5R/3 + 5/3.
Estimate bi_radius_sqrtn(const Graph& g, const PartitionSpec& p,
                         const SampleConfig& cfg);

/// R <= R' <= 5R/3.
Estimate bi_radius_m32(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg);

/// The ST eccentricity estimator of the given tier with T = V \ S.
EccentricityEstimates bi_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                             const SampleConfig& cfg);

/// Directed, integer weights. D/2 <= D' <= D.
Estimate bi_diam_directed_m32(const Graph& g, const PartitionSpec& p,
                              const SampleConfig& cfg);

}  // namespace stdiam
