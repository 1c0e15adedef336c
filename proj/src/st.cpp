#include "stdiam/st.hpp"

#include <algorithm>
#include <cstdint>

#include "detail.hpp"

namespace stdiam {

using namespace detail;

namespace {

/// Per-S-vertex running maxima, one slot per candidate family.
class EccTable {
 public:
  EccTable(const PartitionSpec& p, std::size_t families)
      : p_(p), values_(families, std::vector<Dist>(p.s().size(), 0)),
        seen_(families, false) {}

  /// Candidate d(v, x) for every v in S.
  void add_distance(std::size_t family, const DistanceArray& d) {
    seen_[family] = true;
    auto& row = values_[family];
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = std::max(row[i], d[p_.s()[i]]);
    }
  }

  /// Candidate e(y) - d(v, y), skipped where d(v, y) is unreachable or the
  /// difference is negative.
  void add_offset(std::size_t family, Dist ey, const DistanceArray& d) {
    seen_[family] = true;
    auto& row = values_[family];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Dist dv = d[p_.s()[i]];
      if (dv == kUnreachable || ey == kUnreachable || ey < dv) continue;
      row[i] = std::max(row[i], ey - dv);
    }
  }

  EccentricityEstimates finish(Guarantee guarantee, Trace trace,
                               std::uint64_t seed, std::size_t searches) const {
    EccentricityEstimates out;
    out.vertices.assign(p_.s().begin(), p_.s().end());
    out.values.assign(out.vertices.size(), 0);
    for (std::size_t f = 0; f < values_.size(); ++f) {
      if (!seen_[f]) continue;
      for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = std::max(out.values[i], values_[f][i]);
      }
    }
    out.guarantee = guarantee;
    out.trace = std::move(trace);
    out.seed = seed;
    out.searches = searches;
    return out;
  }

 private:
  const PartitionSpec& p_;
  std::vector<std::vector<Dist>> values_;
  std::vector<bool> seen_;
};

std::vector<Vertex> complement_of_t(const Graph& g, const PartitionSpec& p) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!p.in_t(v)) out.push_back(v);
  }
  return out;
}

/// For each y: one search, e(y) = max over T, then offsets into `family`.
void offset_family(SearchEngine& engine, EccTable& table, std::size_t family,
                   const std::vector<Vertex>& ys, const PartitionSpec& p) {
  for (Vertex y : ys) {
    const DistanceArray d = engine.forward(y);
    table.add_offset(family, max_over(d, p.t()), d);
  }
}

/// Shared tail of both sampled estimators: given the T sentinel set, fill
/// families 0 and 1 and return the search from w.
DistanceArray sentinel_families(SearchEngine& engine, EccTable& table,
                                const PartitionSpec& p,
                                const std::vector<Vertex>& sentinels,
                                Trace& trace) {
  for (Vertex t : sentinels) table.add_distance(0, engine.forward(t));
  const DistanceArray to_sent = engine.from_set(sentinels);
  const Vertex w = argmax(p.t(), [&to_sent](Vertex t) { return to_sent[t]; });
  trace.note("w", w);
  DistanceArray dw = engine.forward(w);
  table.add_distance(1, dw);
  return dw;
}

EccentricityEstimates linear_impl(const Graph& g, const PartitionSpec& p) {
  SearchEngine engine(g);
  EccTable table(p, 2);
  Trace trace;
  const Vertex t = p.t().front();
  const DistanceArray dt = engine.forward(t);
  const Vertex t2 = argmax(p.t(), [&dt](Vertex x) { return dt[x]; });
  trace.note("t", t);
  trace.note("t'", t2);
  table.add_distance(0, dt);
  table.add_distance(1, engine.forward(t2));
  return table.finish({Side::lower, Rational(1, 3), Rational(0)},
                      std::move(trace), 0, engine.count());
}

EccentricityEstimates sqrtn_impl(const Graph& g, const PartitionSpec& p,
                                 const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  SearchEngine engine(g);
  EccTable table(p, 4);
  Trace trace;

  // Step 1.
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  const auto xcfg = cfg.derive("X");
  const auto x = sample_vertices(all, sample_size(xcfg, n, n, n), xcfg);
  std::vector<Vertex> tx;
  for (Vertex v : x) {
    const Vertex t = p.in_t(v) ? v : nearest(engine.forward(v), p.t());
    if (t != kNoVertex) tx.push_back(t);
  }
  sort_unique(tx);
  trace.note("|T_X|", tx.size());
  const DistanceArray dw = sentinel_families(engine, table, p, tx, trace);

  // Steps 2 and 3 need V \ T to be nonempty.
  const auto rest = complement_of_t(g, p);
  if (!rest.empty()) {
    const auto y = closest_k(dw, rest, sqrt_cap(n));
    offset_family(engine, table, 2, y, p);
    std::vector<Vertex> yt;
    for (Vertex t : closest_k(dw, p.t(), sqrt_cap(n))) {
      const Vertex yy = nearest(engine.forward(t), rest);
      if (yy != kNoVertex) yt.push_back(yy);
    }
    sort_unique(yt);
    offset_family(engine, table, 3, yt, p);
    trace.note("|Y|", y.size());
    trace.note("|y(T_w)|", yt.size());
  }
  return table.finish({Side::lower, Rational(1, 2), Rational(5, 2)},
                      std::move(trace), cfg.seed, engine.count());
}

EccentricityEstimates m32_impl(const Graph& g, const PartitionSpec& p,
                               const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  SearchEngine engine(g);
  EccTable table(p, 4);
  Trace trace;

  // Step 1.
  const auto ecfg = cfg.derive("E'");
  const auto sampled =
      sample_edges(g, nullptr, EdgeFilter::all, sample_size(ecfg, m, m, n), ecfg);
  std::vector<Vertex> ends;
  for (const Edge& e : sampled) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  sort_unique(ends);
  std::vector<Vertex> te;
  for (Vertex v : ends) {
    const Vertex t = p.in_t(v) ? v : nearest(engine.forward(v), p.t());
    if (t != kNoVertex) te.push_back(t);
  }
  sort_unique(te);
  trace.note("|E'|", sampled.size());
  trace.note("|T_E'|", te.size());
  if (te.empty()) te.push_back(p.t().front());
  const DistanceArray dw = sentinel_families(engine, table, p, te, trace);

  const auto rest = complement_of_t(g, p);
  if (!rest.empty()) {
    const std::size_t cap = sqrt_cap(m);
    // Step 2.
    std::vector<Vertex> y;
    for (const ArcEntry& a :
         closest_arcs(g, dw, [](Vertex) { return true; }, cap)) {
      for (Vertex v : {a.anchor, a.other}) {
        if (!p.in_t(v)) y.push_back(v);
      }
    }
    sort_unique(y);
    offset_family(engine, table, 2, y, p);
    // Step 3.
    std::vector<Vertex> et_ends;
    for (const ArcEntry& a :
         closest_arcs(g, dw, [&p](Vertex v) { return p.in_t(v); }, cap)) {
      et_ends.push_back(a.anchor);
      et_ends.push_back(a.other);
    }
    sort_unique(et_ends);
    std::vector<Vertex> yx;
    for (Vertex v : et_ends) {
      const Vertex yy = !p.in_t(v) ? v : nearest(engine.forward(v), rest);
      if (yy != kNoVertex) yx.push_back(yy);
    }
    sort_unique(yx);
    offset_family(engine, table, 3, yx, p);
    trace.note("|Y|", y.size());
    trace.note("|y(V(E^T))|", yx.size());
  }
  return table.finish({Side::lower, Rational(1, 2), Rational(0)},
                      std::move(trace), cfg.seed, engine.count());
}

void check_st(const Graph& g, const char* algo) { require_undirected(g, algo); }

}  // namespace

EccentricityEstimates st_ecc_linear(const Graph& g, const PartitionSpec& p) {
  check_st(g, "st-ecc-linear");
  return run_focused_ecc(g, p, [](const Graph& h, const PartitionSpec& q) {
    return linear_impl(h, q);
  });
}

EccentricityEstimates st_ecc_sqrtn(const Graph& g, const PartitionSpec& p,
                                   const SampleConfig& cfg) {
  check_st(g, "st-ecc-sqrtn");
  require_unweighted(g, "st-ecc-sqrtn");
  return run_focused_ecc(g, p, [&cfg](const Graph& h, const PartitionSpec& q) {
    return sqrtn_impl(h, q, cfg);
  });
}

EccentricityEstimates st_ecc_m32(const Graph& g, const PartitionSpec& p,
                                 const SampleConfig& cfg) {
  check_st(g, "st-ecc-m32");
  return run_focused_ecc(g, p, [&cfg](const Graph& h, const PartitionSpec& q) {
    return m32_impl(h, q, cfg);
  });
}

EccentricityEstimates st_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                             const SampleConfig& cfg) {
  switch (tier) {
    case Tier::linear:
      return st_ecc_linear(g, p);
    case Tier::sqrtn:
      return st_ecc_sqrtn(g, p, cfg);
    case Tier::m32:
      return st_ecc_m32(g, p, cfg);
  }
  throw std::invalid_argument("bad tier");
}

Estimate st_radius_from_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                            const SampleConfig& cfg) {
  const EccentricityEstimates ecc = st_ecc(g, p, tier, cfg);
  Estimate est;
  est.quantity = Quantity::radius;
  est.seed = cfg.seed;
  switch (tier) {
    case Tier::linear:
      est.guarantee = {Side::upper, Rational(3), Rational(0)};
      break;
    case Tier::sqrtn:
      est.guarantee = {Side::upper, Rational(2), Rational(5)};
      break;
    case Tier::m32:
      est.guarantee = {Side::upper, Rational(2), Rational(0)};
      break;
  }
  const Vertex v =
      argmin(ecc.vertices, [&ecc](Vertex s) { return ecc.at(s); });
  est.trace.note("v", v);
  est.trace.note("estimated_ecc", ecc.at(v));
  est.searches = ecc.searches;
  if (ecc.at(v) == kUnreachable) {
    est.trace.candidate("R'", kUnreachable);
    est.value = kUnreachable;
    return est;
  }
  SearchEngine engine(g);
  est.value = max_over(engine.forward(v), p.t());
  est.trace.candidate("R'", est.value);
  est.witness = v;
  est.searches += engine.count();
  return est;
}

}  // namespace stdiam
