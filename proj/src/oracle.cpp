#include "stdiam/oracle.hpp"

namespace stdiam {

std::vector<OracleResult> exact_st_ecc(const Graph& g, const PartitionSpec& p) {
  std::vector<OracleResult> out;
  out.reserve(p.s().size());
  for (Vertex s : p.s()) {
    const DistanceArray d = sssp(g, s);
    OracleResult r;
    r.value = 0;
    for (Vertex t : p.t()) {
      if (!r.second || d[t] > r.value) {
        r.value = d[t];
        r.second = t;
      }
    }
    r.first = s;
    if (r.value == kUnreachable) r.second.reset();
    out.push_back(r);
  }
  return out;
}

OracleResult diam_from_ecc(const std::vector<OracleResult>& ecc) {
  OracleResult best;
  best.value = 0;
  bool any = false;
  for (const OracleResult& r : ecc) {
    if (!any || r.value > best.value) {
      best = r;
      any = true;
    }
  }
  if (!any || best.value == kUnreachable) return {};
  return best;
}

OracleResult radius_from_ecc(const std::vector<OracleResult>& ecc) {
  OracleResult best;
  bool any = false;
  for (const OracleResult& r : ecc) {
    if (!any || r.value < best.value) {
      best = r;
      any = true;
    }
  }
  if (!any || best.value == kUnreachable) return {};
  best.second.reset();
  return best;
}

OracleResult exact_diam(const Graph& g, const PartitionSpec& p) {
  return diam_from_ecc(exact_st_ecc(g, p));
}

OracleResult exact_radius(const Graph& g, const PartitionSpec& p) {
  return radius_from_ecc(exact_st_ecc(g, p));
}

}  // namespace stdiam
