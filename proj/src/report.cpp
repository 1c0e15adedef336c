#include "stdiam/report.hpp"

namespace stdiam {

namespace {

Json witness_json(const std::optional<Vertex>& a, const std::optional<Vertex>& b) {
  if (!a) return nullptr;
  if (!b) return *a;
  return Json::array({*a, *b});
}

Json bound_json(const Bound& b) {
  return Json{{"cmp", to_string(b.cmp)}, {"value", dist_json(b.value)}};
}

}  // namespace

Json dist_json(Dist d) {
  if (d == kUnreachable) return "UNREACHABLE";
  return d;
}

Json guarantee_json(const Guarantee& g) {
  return Json{{"side", to_string(g.side)},
              {"factor", g.factor.str()},
              {"additive", g.additive.str()}};
}

Json graph_summary_json(const Graph& g, const PartitionSpec& p) {
  return Json{{"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"directed", g.directed()},
              {"weighted", g.weighted()},
              {"mode", to_string(p.mode())},
              {"s_size", p.s().size()},
              {"t_size", p.t().size()}};
}

Json outcome_json(const Outcome& outcome) {
  Json j;
  j["quantity"] = to_string(outcome.quantity);
  if (outcome.scalar) {
    const Estimate& e = *outcome.scalar;
    j["value"] = dist_json(e.value);
    j["witness"] = witness_json(e.witness, e.witness_partner);
  } else {
    Json values = Json::array();
    const auto& ecc = *outcome.ecc;
    for (std::size_t i = 0; i < ecc.vertices.size(); ++i) {
      values.push_back(Json::array({ecc.vertices[i], dist_json(ecc.values[i])}));
    }
    j["values"] = std::move(values);
  }
  j["searches"] = outcome.searches();
  Json trace = Json::array();
  for (const TraceEntry& t : outcome.trace().entries) {
    trace.push_back(Json{{"name", t.name}, {"value", dist_json(t.value)},
                         {"candidate", t.candidate}});
  }
  j["trace"] = std::move(trace);
  return j;
}

Json oracle_json(const OracleCheck& check, const Outcome& outcome,
                 const Guarantee& guarantee) {
  Json j;
  if (outcome.quantity == Quantity::eccentricities) {
    Json values = Json::array();
    for (const OracleResult& r : check.ecc) {
      values.push_back(Json::array({*r.first, dist_json(r.value)}));
    }
    j["values"] = std::move(values);
  } else {
    j["value"] = dist_json(check.scalar.value);
    j["witness"] = witness_json(check.scalar.first, check.scalar.second);
    const auto [lo, hi] = guarantee.interval(check.scalar.value);
    j["interval"] = Json::array({dist_json(lo), dist_json(hi)});
  }
  j["violations"] = check.violations;
  j["pass"] = check.pass;
  return j;
}

Json exact_json(Quantity q, const std::vector<OracleResult>& ecc) {
  Json j;
  j["quantity"] = to_string(q);
  if (q == Quantity::eccentricities) {
    Json values = Json::array();
    for (const OracleResult& r : ecc) {
      values.push_back(Json::array({*r.first, dist_json(r.value),
                                    r.second ? Json(*r.second) : Json(nullptr)}));
    }
    j["values"] = std::move(values);
    return j;
  }
  const OracleResult r = q == Quantity::diameter ? diam_from_ecc(ecc) : radius_from_ecc(ecc);
  j["value"] = dist_json(r.value);
  j["witness"] = witness_json(r.first, r.second);
  return j;
}

Json instance_json(const GeneratedInstance& inst) {
  Json j;
  j["family"] = to_string(inst.family);
  Json params = Json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  j["params"] = std::move(params);
  j["graph"] = graph_summary_json(inst.graph, inst.partition);
  if (inst.expected) {
    const Expectation& e = *inst.expected;
    Json x;
    x["measure"] = to_string(e.measure);
    x["has_solution"] = e.has_solution;
    x["no_solution"] = bound_json(e.no_solution);
    x["solution"] = bound_json(e.solution);
    x["focus"] = e.focus;
    if (e.witness) {
      x["witness"] = Json::array({e.witness->first, e.witness->second});
    } else {
      x["witness"] = nullptr;
    }
    j["expected"] = std::move(x);
  } else {
    j["expected"] = nullptr;
  }
  Json roles = Json::object();
  for (const Role& r : inst.roles) roles[r.name] = r.vertices;
  j["roles"] = std::move(roles);
  return j;
}

}  // namespace stdiam
