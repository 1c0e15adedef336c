// Subset (S = T) estimators. The directed ones accept undirected graphs too.

#pragma once

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"
#include "stdiam/sampling.hpp"

namespace stdiam {

/// Forward and backward search from the smallest S vertex.
/// D_S/2 <= D' <= D_S.
Estimate subset_diam_directed(const Graph& g, const PartitionSpec& p);

/// Undirected. Eccentricity of the smallest S vertex: R_S <= R' <= 2 R_S.
Estimate subset_radius_undirected(const Graph& g, const PartitionSpec& p);

/// Phase loop with threshold D and active set U, for 0 < tau < 1.
/// (1-tau)/2 e(v) <= e'(v) <= e(v). Vertices that cannot reach all of S
/// get UNREACHABLE.
///
/// Trace: "phase<k>.U" and "phase<k>.D" per phase, "phase<k>.case" is 1 or 2.
EccentricityEstimates subset_ecc_directed(const Graph& g, const PartitionSpec& p,
                                          Rational tau, const SampleConfig& cfg);

/// Exact eccentricity of the vertex with the smallest phase-loop estimate.
/// R_S <= R' <= 2/(1-tau) R_S.
Estimate subset_radius_directed(const Graph& g, const PartitionSpec& p,
                                Rational tau, const SampleConfig& cfg);

/// Hard cap on phases: log2(n) + 1 + ln(D0)/tau + 2.
std::size_t subset_phase_cap(std::size_t n, Dist d0, Rational tau);

}  // namespace stdiam
