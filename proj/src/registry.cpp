#include "stdiam/registry.hpp"

#include <algorithm>

#include "stdiam/bichromatic.hpp"
#include "stdiam/parameterized.hpp"
#include "stdiam/st.hpp"
#include "stdiam/subset.hpp"

namespace stdiam {

namespace {

Outcome scalar(Estimate e) {
  Outcome o;
  o.quantity = e.quantity;
  o.scalar = std::move(e);
  return o;
}

Outcome ecc(EccentricityEstimates e) {
  Outcome o;
  o.quantity = Quantity::eccentricities;
  o.ecc = std::move(e);
  return o;
}

Weight lightest_crossing_weight(const Graph& g, const PartitionSpec& p) {
  Weight w = 1;
  bool any = false;
  for (const Edge& e : filtered_edges(g, &p, EdgeFilter::crossing)) {
    w = any ? std::min(w, e.w) : e.w;
    any = true;
  }
  return w;
}

Guarantee fixed(Side side, Rational f, Rational a = Rational(0)) {
  return {side, f, a};
}

Guarantee ecc_tier(Tier tier) {
  switch (tier) {
    case Tier::linear: return fixed(Side::lower, Rational(1, 3));
    case Tier::sqrtn: return fixed(Side::lower, Rational(1, 2), Rational(5, 2));
    case Tier::m32: return fixed(Side::lower, Rational(1, 2));
  }
  return {};
}

Guarantee radius_tier(Tier tier) {
  switch (tier) {
    case Tier::linear: return fixed(Side::upper, Rational(3));
    case Tier::sqrtn: return fixed(Side::upper, Rational(2), Rational(5));
    case Tier::m32: return fixed(Side::upper, Rational(2));
  }
  return {};
}

std::size_t boundary_size(const Graph& g, const PartitionSpec& p) {
  return boundary(g, p).b.size();
}

using G = const Graph&;
using P = const PartitionSpec&;
using O = const RunOptions&;

const std::vector<AlgoInfo> kRegistry = {
    {"bi-diam-linear", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::integer, Quantity::diameter, false, false, false,
     [](G g, P p, O) {
       return fixed(Side::lower, Rational(1, 2),
                    Rational(lightest_crossing_weight(g, p), 2));
     },
     [](G g, P p, O) { return scalar(bi_diam_linear(g, p)); }, nullptr},
    {"bi-diam-sqrtn", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::unweighted, Quantity::diameter, true, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(3, 5), Rational(6, 5)); },
     [](G g, P p, O o) { return scalar(bi_diam_sqrtn(g, p, o.sample)); }, nullptr},
    {"bi-diam-m32", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::integer, Quantity::diameter, true, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(3, 5)); },
     [](G g, P p, O o) { return scalar(bi_diam_m32(g, p, o.sample)); }, nullptr},
    {"bi-radius-linear", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::integer, Quantity::radius, false, false, false,
     [](G g, P p, O) {
       return fixed(Side::upper, Rational(2), Rational(lightest_crossing_weight(g, p)));
     },
     [](G g, P p, O) { return scalar(bi_radius_linear(g, p)); }, nullptr},
    {"bi-radius-sqrtn", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::unweighted, Quantity::radius, true, false, false,
     [](G, P, O) { return fixed(Side::upper, Rational(5, 3), Rational(5, 3)); },
     [](G g, P p, O o) { return scalar(bi_radius_sqrtn(g, p, o.sample)); }, nullptr},
    {"bi-radius-m32", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::integer, Quantity::radius, true, false, false,
     [](G, P, O) { return fixed(Side::upper, Rational(5, 3)); },
     [](G g, P p, O o) { return scalar(bi_radius_m32(g, p, o.sample)); }, nullptr},
    {"bi-ecc", ModeRule::bichromatic, DirectionRule::undirected, WeightRule::by_tier,
     Quantity::eccentricities, true, true, false,
     [](G, P, O o) { return ecc_tier(o.tier); },
     [](G g, P p, O o) { return ecc(bi_ecc(g, p, o.tier, o.sample)); }, nullptr},
    {"bi-diam-dir-m32", ModeRule::bichromatic, DirectionRule::directed,
     WeightRule::integer, Quantity::diameter, true, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(1, 2)); },
     [](G g, P p, O o) { return scalar(bi_diam_directed_m32(g, p, o.sample)); },
     nullptr},
    {"st-ecc-linear", ModeRule::any, DirectionRule::undirected, WeightRule::integer,
     Quantity::eccentricities, false, false, false,
     [](G, P, O) { return ecc_tier(Tier::linear); },
     [](G g, P p, O) { return ecc(st_ecc_linear(g, p)); }, nullptr},
    {"st-ecc-sqrtn", ModeRule::any, DirectionRule::undirected, WeightRule::unweighted,
     Quantity::eccentricities, true, false, false,
     [](G, P, O) { return ecc_tier(Tier::sqrtn); },
     [](G g, P p, O o) { return ecc(st_ecc_sqrtn(g, p, o.sample)); }, nullptr},
    {"st-ecc-m32", ModeRule::any, DirectionRule::undirected, WeightRule::integer,
     Quantity::eccentricities, true, false, false,
     [](G, P, O) { return ecc_tier(Tier::m32); },
     [](G g, P p, O o) { return ecc(st_ecc_m32(g, p, o.sample)); }, nullptr},
    {"st-radius", ModeRule::any, DirectionRule::undirected, WeightRule::by_tier,
     Quantity::radius, true, true, false,
     [](G, P, O o) { return radius_tier(o.tier); },
     [](G g, P p, O o) { return scalar(st_radius_from_ecc(g, p, o.tier, o.sample)); },
     nullptr},
    {"subset-diam-dir", ModeRule::subset, DirectionRule::any, WeightRule::integer,
     Quantity::diameter, false, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(1, 2)); },
     [](G g, P p, O) { return scalar(subset_diam_directed(g, p)); }, nullptr},
    {"subset-radius", ModeRule::subset, DirectionRule::undirected, WeightRule::integer,
     Quantity::radius, false, false, false,
     [](G, P, O) { return fixed(Side::upper, Rational(2)); },
     [](G g, P p, O) { return scalar(subset_radius_undirected(g, p)); }, nullptr},
    {"subset-ecc-dir", ModeRule::subset, DirectionRule::any, WeightRule::integer,
     Quantity::eccentricities, true, false, true,
     [](G, P, O o) {
       return fixed(Side::lower,
                    Rational(o.tau.den() - o.tau.num(), 2 * o.tau.den()));
     },
     [](G g, P p, O o) { return ecc(subset_ecc_directed(g, p, o.tau, o.sample)); },
     nullptr},
    {"subset-radius-dir", ModeRule::subset, DirectionRule::any, WeightRule::integer,
     Quantity::radius, true, false, true,
     [](G, P, O o) {
       return fixed(Side::upper,
                    Rational(2 * o.tau.den(), o.tau.den() - o.tau.num()));
     },
     [](G g, P p, O o) { return scalar(subset_radius_directed(g, p, o.tau, o.sample)); },
     nullptr},
    {"param-bi-diam", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::unweighted, Quantity::diameter, false, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(2, 3), Rational(1)); },
     [](G g, P p, O) { return scalar(param_bi_diam(g, p)); },
     [](G g, P p) -> std::optional<std::size_t> { return 2 * boundary_size(g, p) + 2; }},
    {"param-bi-radius", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::unweighted, Quantity::radius, false, false, false,
     [](G, P, O) { return fixed(Side::upper, Rational(3, 2), Rational(3)); },
     [](G g, P p, O) { return scalar(param_bi_radius(g, p)); },
     [](G g, P p) -> std::optional<std::size_t> { return boundary_size(g, p) + 1; }},
    {"param-bi-ecc", ModeRule::bichromatic, DirectionRule::undirected,
     WeightRule::unweighted, Quantity::eccentricities, false, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(3, 5), Rational(1)); },
     [](G g, P p, O) { return ecc(param_bi_ecc(g, p)); },
     [](G g, P p) -> std::optional<std::size_t> { return 3 * boundary_size(g, p) + 2; }},
    {"param-bi-diam-dir", ModeRule::bichromatic, DirectionRule::directed,
     WeightRule::unweighted, Quantity::diameter, false, false, false,
     [](G, P, O) { return fixed(Side::lower, Rational(2, 3)); },
     [](G g, P p, O) { return scalar(param_bi_diam_directed(g, p)); },
     [](G g, P p) -> std::optional<std::size_t> {
       return boundary(g, p).b_prime.size() + 2;
     }},
};

}  // namespace

const Guarantee& Outcome::guarantee() const {
  return scalar ? scalar->guarantee : ecc->guarantee;
}

const Trace& Outcome::trace() const { return scalar ? scalar->trace : ecc->trace; }

std::size_t Outcome::searches() const {
  return scalar ? scalar->searches : ecc->searches;
}

const std::vector<AlgoInfo>& registry() { return kRegistry; }

const AlgoInfo* find_algorithm(std::string_view name) {
  for (const AlgoInfo& a : kRegistry) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

void check_compatible(const AlgoInfo& algo, const Graph& g, const PartitionSpec& p,
                      const RunOptions& opts) {
  const std::string name(algo.name);
  if ((algo.mode == ModeRule::bichromatic && p.mode() != PartitionMode::bichromatic) ||
      (algo.mode == ModeRule::subset && p.mode() != PartitionMode::subset)) {
    throw PreconditionError(Mismatch::mode, name + " does not accept a " +
                                                to_string(p.mode()) + " partition");
  }
  if ((algo.direction == DirectionRule::undirected && g.directed()) ||
      (algo.direction == DirectionRule::directed && !g.directed())) {
    throw PreconditionError(Mismatch::direction,
                            name + (g.directed() ? " needs an undirected graph"
                                                 : " needs a directed graph"));
  }
  const bool unweighted_only =
      algo.weights == WeightRule::unweighted ||
      (algo.weights == WeightRule::by_tier && opts.tier == Tier::sqrtn);
  if (unweighted_only && g.weighted()) {
    throw PreconditionError(Mismatch::weight, name + " needs an unweighted graph");
  }
}

OracleCheck check_against_oracle(const Outcome& outcome, const Guarantee& guarantee,
                                 const Graph& g, const PartitionSpec& p) {
  OracleCheck out;
  out.ecc = exact_st_ecc(g, p);
  switch (outcome.quantity) {
    case Quantity::diameter:
      out.scalar = diam_from_ecc(out.ecc);
      break;
    case Quantity::radius:
      out.scalar = radius_from_ecc(out.ecc);
      break;
    case Quantity::eccentricities:
      for (std::size_t i = 0; i < out.ecc.size(); ++i) {
        if (!guarantee.admits(out.ecc[i].value, outcome.ecc->values[i])) ++out.violations;
      }
      out.pass = out.violations == 0;
      return out;
  }
  out.pass = guarantee.admits(out.scalar.value, outcome.scalar->value);
  out.violations = out.pass ? 0 : 1;
  return out;
}

}  // namespace stdiam
