#include "detail.hpp"

#include <string>

namespace stdiam::detail {

Focus focus_on_targets(const Graph& g, const PartitionSpec& p) {
  Focus f;
  const auto comp = weak_components(g);
  const std::uint32_t c = comp[p.t().front()];
  bool connected = true;
  for (std::uint32_t x : comp) connected = connected && x == c;
  if (connected) return f;

  for (Vertex t : p.t()) {
    if (comp[t] != c) {
      f.status = Focus::Status::none;
      return f;
    }
  }
  std::vector<Vertex> s_local;
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] == c) {
      local[v] = static_cast<Vertex>(f.global.size());
      f.global.push_back(v);
    }
  }
  for (Vertex s : p.s()) {
    if (local[s] == kNoVertex) {
      f.all_s_inside = false;
    } else {
      s_local.push_back(local[s]);
    }
  }
  if (s_local.empty()) {
    f.status = Focus::Status::none;
    return f;
  }
  f.status = Focus::Status::restricted;
  f.graph = induced_subgraph(g, f.global);
  const std::size_t n = f.global.size();
  switch (p.mode()) {
    case PartitionMode::bichromatic:
      f.part = PartitionSpec::bichromatic(n, std::move(s_local));
      break;
    case PartitionMode::subset:
      f.part = PartitionSpec::subset(n, std::move(s_local));
      break;
    case PartitionMode::st: {
      std::vector<Vertex> t_local;
      for (Vertex t : p.t()) t_local.push_back(local[t]);
      f.part = PartitionSpec::st(n, std::move(s_local), std::move(t_local));
      break;
    }
  }
  return f;
}

Estimate unreachable_estimate(Quantity quantity) {
  Estimate e;
  e.value = kUnreachable;
  e.quantity = quantity;
  e.trace.note("disconnected", 1);
  return e;
}

Estimate run_focused(const Graph& g, const PartitionSpec& p, Quantity quantity,
                     const std::function<Estimate(const Graph&,
                                                  const PartitionSpec&)>& fn) {
  Focus f = focus_on_targets(g, p);
  if (f.status == Focus::Status::whole) return fn(g, p);
  if (f.status == Focus::Status::none ||
      (quantity == Quantity::diameter && !f.all_s_inside)) {
    return unreachable_estimate(quantity);
  }
  Estimate e = fn(*f.graph, *f.part);
  if (e.witness) e.witness = f.global[*e.witness];
  if (e.witness_partner) e.witness_partner = f.global[*e.witness_partner];
  e.trace.note("component_size", f.global.size());
  return e;
}

EccentricityEstimates run_focused_ecc(
    const Graph& g, const PartitionSpec& p,
    const std::function<EccentricityEstimates(const Graph&,
                                              const PartitionSpec&)>& fn) {
  Focus f = focus_on_targets(g, p);
  if (f.status == Focus::Status::whole) return fn(g, p);
  EccentricityEstimates out;
  out.vertices.assign(p.s().begin(), p.s().end());
  out.values.assign(out.vertices.size(), kUnreachable);
  out.trace.note("disconnected", 1);
  if (f.status == Focus::Status::none) return out;
  EccentricityEstimates local = fn(*f.graph, *f.part);
  out.guarantee = local.guarantee;
  out.seed = local.seed;
  out.searches = local.searches;
  for (const auto& e : local.trace.entries) out.trace.entries.push_back(e);
  out.trace.note("component_size", f.global.size());
  for (std::size_t i = 0; i < local.vertices.size(); ++i) {
    const Vertex v = f.global[local.vertices[i]];
    auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), v);
    out.values[static_cast<std::size_t>(it - out.vertices.begin())] =
        local.values[i];
  }
  return out;
}

void require_undirected(const Graph& g, const char* algo) {
  if (g.directed()) {
    throw PreconditionError(Mismatch::direction,
                            std::string(algo) + " requires an undirected graph");
  }
}

void require_directed(const Graph& g, const char* algo) {
  if (!g.directed()) {
    throw PreconditionError(Mismatch::direction,
                            std::string(algo) + " requires a directed graph");
  }
}

void require_unweighted(const Graph& g, const char* algo) {
  if (g.weighted()) {
    throw PreconditionError(Mismatch::weight,
                            std::string(algo) + " requires an unweighted graph");
  }
}

void require_mode(const PartitionSpec& p, PartitionMode mode,
                  const char* algo) {
  if (p.mode() != mode) {
    throw PreconditionError(Mismatch::mode,
                            std::string(algo) + " requires " +
                                to_string(mode) + " sets, got " +
                                to_string(p.mode()));
  }
}

}  // namespace stdiam::detail
