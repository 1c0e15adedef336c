// Static algorithm catalog: name -> requirements, guarantee and entry point.
// `verify` takes its interval check from here.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stdiam/estimate.hpp"
#include "stdiam/graph.hpp"
#include "stdiam/oracle.hpp"
#include "stdiam/sampling.hpp"

namespace stdiam {

struct RunOptions {
  SampleConfig sample;
  Rational tau{1, 10};
  Tier tier = Tier::m32;
};

/// Exactly one of `scalar` and `ecc` is set.
struct Outcome {
  Quantity quantity = Quantity::diameter;
  std::optional<Estimate> scalar;
  std::optional<EccentricityEstimates> ecc;

  const Guarantee& guarantee() const;
  const Trace& trace() const;
  std::size_t searches() const;
};

enum class ModeRule { bichromatic, subset, any };
enum class DirectionRule { undirected, directed, any };
enum class WeightRule {
  unweighted,
  integer,
  /// Unweighted only for the sqrtn tier.
  by_tier,
};

struct AlgoInfo {
  std::string_view name;
  ModeRule mode;
  DirectionRule direction;
  WeightRule weights;
  Quantity quantity;
  bool uses_seed;
  bool uses_tier;
  bool uses_tau;
  Guarantee (*guarantee)(const Graph&, const PartitionSpec&, const RunOptions&);
  Outcome (*run)(const Graph&, const PartitionSpec&, const RunOptions&);
  /// Upper bound on searches for the boundary-parameterized algorithms.
  std::optional<std::size_t> (*search_budget)(const Graph&, const PartitionSpec&);
};

const std::vector<AlgoInfo>& registry();
/// nullptr for an unknown name.
const AlgoInfo* find_algorithm(std::string_view name);

/// Throws PreconditionError naming the first unmet requirement.
void check_compatible(const AlgoInfo& algo, const Graph& g, const PartitionSpec& p,
                      const RunOptions& opts);

/// Oracle values for the algorithm's quantity and the interval verdict.
struct OracleCheck {
  OracleResult scalar;
  std::vector<OracleResult> ecc;
  bool pass = true;
  /// Vertices (eccentricities) or 0/1 (scalar) outside the interval.
  std::size_t violations = 0;
};

OracleCheck check_against_oracle(const Outcome& outcome, const Guarantee& guarantee,
                                 const Graph& g, const PartitionSpec& p);

}  // namespace stdiam
