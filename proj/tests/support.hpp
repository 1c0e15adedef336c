// Test-only helpers: an all-pairs oracle that shares no code with the
// library's search kernels, and a seeded corpus of random instances.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stdiam/graph.hpp"
#include "stdiam/instance_gen.hpp"
#include "stdiam/registry.hpp"

namespace stdiam::test {

using Matrix = std::vector<std::vector<Dist>>;

/// Floyd-Warshall over the edge list. O(n^3).
Matrix all_pairs(const Graph& g);

/// max over t in T of d(s, t), per s in S ascending.
std::vector<Dist> pairwise_ecc(const Matrix& d, const PartitionSpec& p);
Dist pairwise_diam(const Matrix& d, const PartitionSpec& p);
Dist pairwise_radius(const Matrix& d, const PartitionSpec& p);

struct CorpusSpec {
  std::size_t count = 200;
  std::size_t max_n = 200;
  std::size_t max_m = 2000;
  Weight weight_max = 1;
  bool directed = false;
  PartitionMode mode = PartitionMode::bichromatic;
  std::uint64_t seed = 1;
};

struct CorpusItem {
  Graph graph;
  PartitionSpec partition;
  std::string label;
};

/// Sizes, densities and S fractions vary per item; all derived from `seed`.
std::vector<CorpusItem> random_corpus(const CorpusSpec& spec);

/// Line graph 0-1-...-(n-1).
Graph path_graph(std::size_t n);

struct Truth {
  std::vector<Dist> ecc;  // per S vertex, ascending
  Dist diam = kUnreachable;
  Dist radius = kUnreachable;
  /// Weight of the lightest S-T edge, 1 when there is none.
  Weight lightest = 1;
};

Truth truth_pairwise(const Graph& g, const PartitionSpec& p);
Truth truth_oracle(const Graph& g, const PartitionSpec& p);

/// Closed interval [lo, hi] for a truth value and the lightest crossing
/// weight. Written out per algorithm, independent of the registry.
using IntervalFn = std::pair<Dist, Dist> (*)(Dist truth, Weight lightest);

/// Interval for a registry name (tier-suffixed for tiered entries, e.g.
/// "st-radius/linear"). Throws for an unknown name.
IntervalFn theorem_interval(const std::string& key);

/// The gadget's expected measure, evaluated by the exact oracle.
Dist measure_gadget(const GeneratedInstance& inst);

struct SuiteResult {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::string first_failure;
};

/// Runs `algo` over the corpus and seeds and checks every value against the
/// interval. `key` selects the interval; `opts.sample.seed` is overwritten.
SuiteResult check_suite(const AlgoInfo& algo, const std::string& key,
                        const std::vector<CorpusItem>& corpus,
                        const std::vector<Truth>& truths,
                        const std::vector<std::uint64_t>& seeds, RunOptions opts);

}  // namespace stdiam::test
