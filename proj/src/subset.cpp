#include "stdiam/subset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace stdiam {

using namespace detail;

namespace {

__extension__ typedef __int128 i128;

constexpr std::size_t kTerminalSize = 4;
constexpr int kResampleLimit = 8;

void check_tau(Rational tau) {
  if (tau.num() <= 0 || tau.num() >= tau.den()) {
    throw std::invalid_argument("tau must lie strictly between 0 and 1");
  }
}

/// S vertices whose eccentricity within S is finite.
std::vector<Vertex> vertices_reaching_s(SearchEngine& engine,
                                        const PartitionSpec& p) {
  const auto comp = strong_components(engine.graph());
  // Arcs between components go from larger to smaller ids, so only the S
  // component with the largest id can reach every other S vertex.
  std::uint32_t top = 0;
  for (Vertex s : p.s()) top = std::max(top, comp[s]);
  std::vector<Vertex> out;
  for (Vertex s : p.s()) {
    if (comp[s] == top) out.push_back(s);
  }
  if (max_over(engine.forward(out.front()), p.s()) == kUnreachable) out.clear();
  return out;
}

}  // namespace

std::size_t subset_phase_cap(std::size_t n, Dist d0, Rational tau) {
  const double halvings = std::log2(static_cast<double>(std::max<std::size_t>(n, 2))) + 1;
  const double shrinks = std::log(static_cast<double>(d0)) / tau.to_double();
  return static_cast<std::size_t>(std::ceil(halvings + shrinks)) + 2;
}

Estimate subset_diam_directed(const Graph& g, const PartitionSpec& p) {
  require_mode(p, PartitionMode::subset, "subset-diam-dir");
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(1, 2), Rational(0)};
  SearchEngine engine(g);
  MaxFold fold(est.trace);
  const Vertex s = p.s().front();
  fold.add("D1", max_over(engine.forward(s), p.s()));
  fold.add("D2", max_over(engine.backward(s), p.s()));
  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

Estimate subset_radius_undirected(const Graph& g, const PartitionSpec& p) {
  require_undirected(g, "subset-radius");
  require_mode(p, PartitionMode::subset, "subset-radius");
  Estimate est;
  est.quantity = Quantity::radius;
  est.guarantee = {Side::upper, Rational(2), Rational(0)};
  SearchEngine engine(g);
  const Vertex s = p.s().front();
  est.value = max_over(engine.forward(s), p.s());
  est.trace.candidate("R'", est.value);
  if (est.value != kUnreachable) est.witness = s;
  est.searches = engine.count();
  return est;
}

EccentricityEstimates subset_ecc_directed(const Graph& g, const PartitionSpec& p,
                                          Rational tau, const SampleConfig& cfg) {
  require_mode(p, PartitionMode::subset, "subset-ecc-dir");
  check_tau(tau);
  const std::size_t n = g.vertex_count();
  const std::int64_t tq = tau.den();
  const std::int64_t keep = tau.den() - tau.num();  // (1 - tau) * q

  EccentricityEstimates out;
  out.vertices.assign(p.s().begin(), p.s().end());
  out.values.assign(out.vertices.size(), kUnreachable);
  out.guarantee = {Side::lower, Rational(keep, 2 * tq), Rational(0)};
  out.seed = cfg.seed;
  SearchEngine engine(g);
  auto slot = [&out](Vertex v) -> Dist& {
    auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), v);
    return out.values[static_cast<std::size_t>(it - out.vertices.begin())];
  };

  std::vector<Vertex> u = vertices_reaching_s(engine, p);
  out.trace.note("reaching", u.size());
  if (u.empty()) {
    out.searches = engine.count();
    return out;
  }

  const Dist d0 = static_cast<Dist>(n) * std::max<Weight>(g.max_weight(), 1) + 1;
  Dist d = d0;
  const std::size_t cap = subset_phase_cap(n, d0, tau);
  const std::size_t a_size = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(
             cfg.constant_c * std::log(static_cast<double>(std::max<std::size_t>(n, 2))))));
  // ceil((1-tau) D / 2), exact in integers.
  auto assigned = [&](Dist dd) {
    const i128 num = static_cast<i128>(keep) * dd;
    const i128 den = 2 * static_cast<i128>(tq);
    return static_cast<Dist>((num + den - 1) / den);
  };

  std::size_t phase = 0;
  bool exact_fallback = false;
  while (u.size() > kTerminalSize) {
    if (++phase > cap) throw std::logic_error("subset-ecc phase cap exceeded");
    const std::string tag = "phase" + std::to_string(phase);
    out.trace.note(tag + ".U", u.size());
    out.trace.note(tag + ".D", d);

    std::vector<Vertex> a;
    Vertex w = kNoVertex;
    std::vector<Vertex> uw;
    std::vector<Vertex> rest;
    DistanceArray to_w;
    bool hit = false;
    for (int attempt = 0; attempt <= kResampleLimit && !hit; ++attempt) {
      const auto acfg = cfg.derive(tag + ".A" + std::to_string(attempt));
      a = sample_vertices(u, std::min(a_size, u.size()), acfg);
      const DistanceArray from_a = engine.from_set(a);
      w = argmax(p.s(), [&from_a](Vertex s) { return from_a[s]; });
      to_w = engine.backward(w);
      auto ordered = closest_k(to_w, u, u.size());
      const std::size_t half = u.size() / 2;
      uw.assign(ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(half));
      rest.assign(ordered.begin() + static_cast<std::ptrdiff_t>(half), ordered.end());
      std::sort(uw.begin(), uw.end());
      for (Vertex x : a) hit = hit || std::binary_search(uw.begin(), uw.end(), x);
      if (!hit) out.trace.note(tag + ".resample", attempt + 1);
    }
    if (!hit) {
      exact_fallback = true;
      break;
    }
    out.trace.note(tag + ".w", w);

    Dist dmin = kUnreachable;
    for (Vertex x : rest) dmin = std::min(dmin, to_w[x]);
    const i128 lhs = 2 * static_cast<i128>(tq) * dmin;
    const i128 rhs = static_cast<i128>(keep) * d;
    if (dmin == kUnreachable || lhs >= rhs) {
      out.trace.note(tag + ".case", 1);
      for (Vertex x : rest) slot(x) = assigned(d);
      u = std::move(uw);
      continue;
    }

    out.trace.note(tag + ".case", 2);
    std::vector<Dist> r(n, 0);
    for (Vertex x : a) {
      const DistanceArray to_x = engine.backward(x);
      for (Vertex v : u) r[v] = std::max(r[v], to_x[v]);
    }
    std::vector<Vertex> kept;
    for (Vertex v : u) {
      if (2 * static_cast<i128>(tq) * r[v] >= rhs) {
        slot(v) = assigned(d);
      } else {
        kept.push_back(v);
      }
    }
    u = std::move(kept);
    d = static_cast<Dist>(rhs / tq);
  }
  out.trace.note("phases", phase);
  if (exact_fallback) out.trace.note("exact_fallback", u.size());

  for (Vertex v : u) slot(v) = max_over(engine.forward(v), p.s());
  out.searches = engine.count();
  return out;
}

Estimate subset_radius_directed(const Graph& g, const PartitionSpec& p,
                                Rational tau, const SampleConfig& cfg) {
  const EccentricityEstimates ecc = subset_ecc_directed(g, p, tau, cfg);
  Estimate est;
  est.quantity = Quantity::radius;
  est.seed = cfg.seed;
  est.guarantee = {Side::upper, Rational(2 * tau.den(), tau.den() - tau.num()),
                   Rational(0)};
  const Vertex v =
      argmin(ecc.vertices, [&ecc](Vertex s) { return ecc.at(s); });
  est.trace.note("v", v);
  est.trace.note("estimated_ecc", ecc.at(v));
  est.searches = ecc.searches;
  if (ecc.at(v) == kUnreachable) {
    est.trace.candidate("R'", kUnreachable);
    return est;
  }
  SearchEngine engine(g);
  est.value = max_over(engine.forward(v), p.s());
  est.trace.candidate("R'", est.value);
  est.witness = v;
  est.searches += engine.count();
  return est;
}

}  // namespace stdiam
