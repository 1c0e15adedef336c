// Gadget graphs built from OV, Hitting Set and k-OV instances, and random
// partitioned instances. Every gadget carries the distance gap it is
// expected to exhibit so the oracle can check it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stdiam/graph.hpp"

namespace stdiam {

using BitVector = std::vector<std::uint8_t>;

/// Two vector families of dimension d. Read as OV (is there an orthogonal
/// pair?) or as Hitting Set (is some u non-orthogonal to every v?).
struct OVInstance {
  std::vector<BitVector> u;
  std::vector<BitVector> v;
  std::size_t d = 0;
};

/// k families W_0..W_{k-1} of equal size.
struct KOVInstance {
  std::vector<std::vector<BitVector>> sets;
  std::size_t d = 0;
};

std::optional<std::pair<std::size_t, std::size_t>> find_orthogonal(
    const OVInstance& inst);
std::optional<std::size_t> find_hitting(const OVInstance& inst);
std::optional<std::vector<std::size_t>> find_k_orthogonal(const KOVInstance& inst);

/// Every coordinate is set in some u and in some v. No-solution instances
/// are drawn by rejection sampling; a solution is planted by overwriting one
/// pair. Needs n >= 2 and d >= 2.
OVInstance random_ov(std::size_t n, std::size_t d, bool solution,
                     std::uint64_t seed);
/// Every coordinate is set in some v.
OVInstance random_hs(std::size_t n, std::size_t d, bool solution,
                     std::uint64_t seed);
KOVInstance random_kov(std::size_t k, std::size_t n, std::size_t d,
                       bool solution, std::uint64_t seed);

enum class Family {
  ov_graph,
  kov_graph,
  bi_diam_kov,
  bi_ecc_kov,
  bi_rad_hs,
  dir_bi_diam,
  dir_bi_ecc,
  dir_bi_rad,
  dir_st_diam,
  st_rad_hs,
  subset_diam,
  subset_rad,
  param_diam,
  param_ecc,
  param_rad,
  param_dir_diam,
  random,
};

const char* to_string(Family f) noexcept;
/// Accepts the upper-case names, e.g. "PARAM_DIAM". Throws invalid_argument.
Family parse_family(const std::string& name);
bool uses_hs(Family f) noexcept;
bool uses_kov(Family f) noexcept;
std::vector<Family> gadget_families();

enum class Measure { st_diameter, st_radius, max_ecc_over_focus };
enum class Cmp { eq, le, ge };

const char* to_string(Measure m) noexcept;
const char* to_string(Cmp c) noexcept;

struct Bound {
  Cmp cmp = Cmp::eq;
  Dist value = 0;  // kUnreachable stands for infinity
  bool holds(Dist x) const noexcept;
};

/// "Solution" refers to the source problem (OV, HS or k-OV).
struct Expectation {
  Measure measure = Measure::st_diameter;
  Bound no_solution;
  Bound solution;
  bool has_solution = false;
  /// Eccentricity families only; empty means all of S.
  std::vector<Vertex> focus;
  /// Vertices that realize the gap when known: (s, t) for diameters, the
  /// center in `first` for radius.
  std::optional<std::pair<Vertex, Vertex>> witness;

  const Bound& active() const noexcept {
    return has_solution ? solution : no_solution;
  }
};

struct Role {
  std::string name;
  std::vector<Vertex> vertices;
};

struct GeneratedInstance {
  Graph graph;
  PartitionSpec partition;
  Family family = Family::random;
  /// Generator parameters plus, for k-OV families, the explicit size bounds
  /// "vertex_bound" and "edge_bound".
  std::vector<std::pair<std::string, std::uint64_t>> params;
  /// Absent for random instances.
  std::optional<Expectation> expected;
  std::vector<Role> roles;

  const Role* role(const std::string& name) const;
};

/// U-C-V with an edge x-c iff x[c] = 1. S = U, T = V (st mode).
GeneratedInstance gen_ov_graph(const OVInstance& inst);

/// Layers L_0..L_k. |L_0| = |L_k| = n^{k-1}; middle vertices without a
/// neighbor in both adjacent layers are pruned. S = L_0, T = L_k (st mode).
GeneratedInstance gen_kov_graph(const KOVInstance& inst);

struct GadgetParams {
  std::size_t k = 2;
  std::size_t ell = 1;
};

/// OV and HS families.
GeneratedInstance gen_lowerbound(Family family, const OVInstance& inst,
                                 GadgetParams params);
/// k-OV families.
GeneratedInstance gen_lowerbound(Family family, const KOVInstance& inst,
                                 GadgetParams params);

struct GadgetSpec {
  Family family = Family::ov_graph;
  std::size_t n = 4;
  std::size_t d = 4;
  std::size_t k = 2;
  std::size_t ell = 1;
  bool solution = false;
  std::uint64_t seed = 0;
};

/// Random source instance of the right kind, then gen_lowerbound.
GeneratedInstance gen_gadget(const GadgetSpec& spec);

/// Connected (strongly connected when directed) graph with m distinct edges
/// and weights in [1, weight_max]; weighted iff weight_max > 1. Undirected
/// graphs get a random spanning tree, directed ones a random Hamiltonian
/// cycle, then extra edges. |S| = ceil(split * n) clamped to [1, n - 1].
GeneratedInstance gen_random_partitioned(std::size_t n, std::size_t m,
                                         Weight weight_max, bool directed,
                                         PartitionMode mode, double split,
                                         std::uint64_t seed);

}  // namespace stdiam
