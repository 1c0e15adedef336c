#include "stdiam/bichromatic.hpp"

#include <algorithm>
#include <cstdint>

#include "detail.hpp"
#include "stdiam/st.hpp"

namespace stdiam {

using namespace detail;

namespace {

/// Lightest S-T edge, ties broken by (s, t). Oriented with u in S.
std::optional<Edge> lightest_crossing(const Graph& g, const PartitionSpec& p) {
  std::optional<Edge> best;
  for (const Edge& e : filtered_edges(g, &p, EdgeFilter::crossing)) {
    if (!best || std::tie(e.w, e.u, e.v) < std::tie(best->w, best->u, best->v)) {
      best = e;
    }
  }
  return best;
}

void check_undirected_bichromatic(const Graph& g, const PartitionSpec& p,
                                  const char* algo) {
  require_undirected(g, algo);
  require_mode(p, PartitionMode::bichromatic, algo);
}

std::vector<Vertex> endpoints_in(const std::vector<Edge>& edges,
                                 const PartitionSpec& p, bool side_s) {
  std::vector<Vertex> out;
  for (const Edge& e : edges) {
    for (Vertex x : {e.u, e.v}) {
      if (side_s ? p.in_s(x) : p.in_t(x)) out.push_back(x);
    }
  }
  sort_unique(out);
  return out;
}

// Largest integer D with 5 d(s,X) > D and 5 d(s,Z) > 2D; unreachable is
// +infinity.
std::int64_t threshold(Dist dx, Dist dz) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const std::int64_t a =
      dx == kUnreachable ? kInf : 5 * static_cast<std::int64_t>(dx) - 1;
  const std::int64_t b =
      dz == kUnreachable
          ? kInf
          : (5 * static_cast<std::int64_t>(dz) + 1) / 2 - 1;
  return std::min(a, b);
}

struct Threshold {
  Vertex w = kNoVertex;
  std::int64_t d_prime = -1;
};

// Step 3 shared by both diameter estimators.
Threshold pick_far_vertex(SearchEngine& engine, const PartitionSpec& p,
                          const std::vector<Vertex>& z,
                          const std::vector<Vertex>& x) {
  const std::size_t n = engine.graph().vertex_count();
  DistanceArray dz{{}, std::vector<Dist>(n, kUnreachable)};
  DistanceArray dx{{}, std::vector<Dist>(n, kUnreachable)};
  if (!z.empty()) dz = engine.from_set(z);
  if (!x.empty()) dx = engine.from_set(x);
  Threshold th;
  th.w = argmax(p.s(), [&](Vertex s) { return threshold(dx[s], dz[s]); });
  th.d_prime = threshold(dx[th.w], dz[th.w]);
  return th;
}

Estimate diam_sqrtn_impl(const Graph& g, const PartitionSpec& p,
                         const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(3, 5), Rational(6, 5)};
  est.seed = cfg.seed;
  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MaxFold fold(est.trace);

  // Step 1.
  const auto zcfg = cfg.derive("Z");
  const auto z = sample_vertices(p.s(), sample_size(zcfg, p.s().size(), n, n), zcfg);
  Dist d1 = 0;
  for (Vertex s : z) d1 = std::max(d1, cache.get(s).ecc_t);
  if (!z.empty()) fold.add("D1", d1);

  // Step 2.
  const auto xcfg = cfg.derive("X");
  const auto x = sample_vertices(p.t(), sample_size(xcfg, p.t().size(), n, n), xcfg);
  Dist d2 = 0;
  for (Vertex t : x) {
    const Vertex s = cache.get(t).near_s;
    if (s != kNoVertex) d2 = std::max(d2, cache.get(s).ecc_t);
  }
  if (!x.empty()) fold.add("D2", d2);

  // Step 3.
  const Threshold th = pick_far_vertex(engine, p, z, x);
  est.trace.note("w", th.w);
  est.trace.note("threshold", static_cast<Dist>(std::max<std::int64_t>(th.d_prime, 0)));

  // Step 4.
  const DistanceArray dw = engine.forward(th.w);
  fold.add("Dw", max_over(dw, p.t()));
  Dist d3 = 0;
  Dist d4 = 0;
  std::size_t sw = 0;
  for (Vertex s : p.s()) {
    if (dw[s] == kUnreachable ||
        5 * static_cast<std::int64_t>(dw[s]) > 2 * th.d_prime) {
      continue;
    }
    ++sw;
    const Summary& sum = cache.get(s);
    d3 = std::max(d3, sum.ecc_t);
    if (sum.near_t != kNoVertex) d4 = std::max(d4, cache.get(sum.near_t).ecc_s);
  }
  est.trace.note("|S_w|", sw);
  if (sw > 0) {
    fold.add("D3", d3);
    fold.add("D4", d4);
  }

  // Step 5.
  Dist d5 = 0;
  std::size_t tw = 0;
  for (Vertex t : p.t()) {
    if (dw[t] == kUnreachable ||
        5 * static_cast<std::int64_t>(dw[t]) > th.d_prime) {
      continue;
    }
    ++tw;
    d5 = std::max(d5, cache.get(t).ecc_s);
  }
  est.trace.note("|T_w|", tw);
  if (tw > 0) fold.add("D5", d5);

  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

Estimate diam_m32_impl(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(3, 5), Rational(0)};
  est.seed = cfg.seed;
  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MaxFold fold(est.trace);

  // Modified steps 1 and 2.
  const auto ecfg = cfg.derive("E'");
  const auto sampled = sample_edges(g, &p, EdgeFilter::all,
                                    sample_size(ecfg, m, m, n), ecfg);
  const auto z = endpoints_in(sampled, p, true);
  const auto x = endpoints_in(sampled, p, false);
  est.trace.note("|E'|", sampled.size());
  Dist d1 = 0;
  for (Vertex s : z) d1 = std::max(d1, cache.get(s).ecc_t);
  if (!z.empty()) fold.add("D1", d1);
  Dist d2 = 0;
  for (Vertex t : x) {
    const Vertex s = cache.get(t).near_s;
    if (s != kNoVertex) d2 = std::max(d2, cache.get(s).ecc_t);
  }
  if (!x.empty()) fold.add("D2", d2);

  // Step 3, unmodified.
  const Threshold th = pick_far_vertex(engine, p, z, x);
  est.trace.note("w", th.w);
  est.trace.note("threshold", static_cast<Dist>(std::max<std::int64_t>(th.d_prime, 0)));

  // Modified step 4. max over T of d(w, .) stands in for d(w, t*).
  const DistanceArray dw = engine.forward(th.w);
  fold.add("Dw", max_over(dw, p.t()));
  auto within = [&dw](Vertex v, std::int64_t num) {
    return dw[v] != kUnreachable && 5 * static_cast<std::int64_t>(dw[v]) <= num;
  };
  std::vector<Vertex> s_side;
  std::vector<Vertex> t_side;
  std::size_t es = 0;
  for (Vertex s : p.s()) {
    if (!within(s, 2 * th.d_prime)) continue;
    for (const Arc& a : g.out_arcs(s)) {
      ++es;
      s_side.push_back(s);
      (p.in_s(a.target) ? s_side : t_side).push_back(a.target);
    }
  }
  sort_unique(s_side);
  sort_unique(t_side);
  est.trace.note("|E_S|", es);
  if (!t_side.empty()) {
    Dist d3 = 0;
    for (Vertex t : t_side) d3 = std::max(d3, cache.get(t).ecc_s);
    fold.add("D3", d3);
  }
  if (!s_side.empty()) {
    Dist d4 = 0;
    for (Vertex s : s_side) {
      const Vertex t = cache.get(s).near_t;
      if (t != kNoVertex) d4 = std::max(d4, cache.get(t).ecc_s);
    }
    fold.add("D4", d4);
  }

  // Modified step 5.
  std::vector<Vertex> tw;
  std::size_t et = 0;
  for (Vertex t : p.t()) {
    if (!within(t, th.d_prime)) continue;
    for (const Arc& a : g.out_arcs(t)) {
      ++et;
      tw.push_back(t);
      if (p.in_t(a.target)) tw.push_back(a.target);
    }
  }
  sort_unique(tw);
  est.trace.note("|E_T|", et);
  if (!tw.empty()) {
    Dist d5 = 0;
    for (Vertex t : tw) d5 = std::max(d5, cache.get(t).ecc_s);
    fold.add("D5", d5);
  }

  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

/// s0 from sentinel sets, then the farthest T vertex w from them.
struct Sentinels {
  Vertex s0 = kNoVertex;
  Vertex w = kNoVertex;
};

Sentinels sentinel_center(SearchEngine& engine, SummaryCache& cache,
                          const PartitionSpec& p,
                          const std::vector<Vertex>& s1,
                          const std::vector<Vertex>& t1, Trace& trace) {
  const std::size_t n = engine.graph().vertex_count();
  std::vector<Dist> far(n, 0);
  auto fold_far = [&](const DistanceArray& d) {
    for (Vertex s : p.s()) far[s] = std::max(far[s], d[s]);
  };
  std::vector<Vertex> t12;
  for (Vertex s : s1) {
    const Vertex t = cache.get(s).near_t;
    if (t != kNoVertex) t12.push_back(t);
  }
  std::size_t s2 = 0;
  for (Vertex t : t1) {
    // Searching from t yields s(t); the set S2 itself is not used further.
    if (cache.get(t, fold_far).near_s != kNoVertex) ++s2;
  }
  trace.note("|S2|", s2);
  std::vector<Vertex> t2_only;
  for (Vertex t : t12) {
    if (!std::binary_search(t1.begin(), t1.end(), t)) t2_only.push_back(t);
  }
  sort_unique(t2_only);
  for (Vertex t : t2_only) {
    if (cache.contains(t)) {
      // Already searched from as some s(.) sentinel; search again for the array.
      fold_far(engine.forward(t));
    } else {
      cache.get(t, fold_far);
    }
  }
  t12.insert(t12.end(), t1.begin(), t1.end());
  sort_unique(t12);
  Sentinels out;
  out.s0 = argmin(p.s(), [&far](Vertex s) { return far[s]; });
  const DistanceArray d12 = engine.from_set(t12);
  out.w = argmax(p.t(), [&d12](Vertex t) { return d12[t]; });
  return out;
}

Estimate radius_sqrtn_impl(const Graph& g, const PartitionSpec& p,
                           const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  Estimate est;
  est.quantity = Quantity::radius;
  est.guarantee = {Side::upper, Rational(5, 3), Rational(5, 3)};
  est.seed = cfg.seed;
  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MinFold fold(est.trace);

  // Step 1.
  const auto scfg = cfg.derive("S1");
  const auto s1 = sample_vertices(p.s(), sample_size(scfg, p.s().size(), n, n), scfg);
  const auto tcfg = cfg.derive("T1");
  const auto t1 = sample_vertices(p.t(), sample_size(tcfg, p.t().size(), n, n), tcfg);
  const Sentinels sen = sentinel_center(engine, cache, p, s1, t1, est.trace);
  fold.add("R1", cache.get(sen.s0).ecc_t, sen.s0);
  est.trace.note("w", sen.w);

  // Step 2.
  const DistanceArray dw = engine.forward(sen.w);
  const auto tw = closest_k(dw, p.t(), sqrt_cap(n));
  Dist r2 = kUnreachable;
  Vertex r2_who = kNoVertex;
  for (Vertex t : tw) {
    const Vertex s = cache.get(t).near_s;
    if (s == kNoVertex) continue;
    const Dist e = cache.get(s).ecc_t;
    if (r2_who == kNoVertex || e < r2 || (e == r2 && s < r2_who)) {
      r2 = e;
      r2_who = s;
    }
  }
  if (r2_who != kNoVertex) fold.add("R2", r2, r2_who);

  // Step 3.
  const auto sw = closest_k(dw, p.s(), sqrt_cap(n));
  const Vertex r3_who =
      argmin(sw, [&cache](Vertex s) { return cache.get(s).ecc_t; });
  if (r3_who != kNoVertex) fold.add("R3", cache.get(r3_who).ecc_t, r3_who);

  est.value = fold.value();
  est.witness = fold.who();
  est.searches = engine.count();
  return est;
}

Estimate radius_m32_impl(const Graph& g, const PartitionSpec& p,
                         const SampleConfig& cfg) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  Estimate est;
  est.quantity = Quantity::radius;
  est.guarantee = {Side::upper, Rational(5, 3), Rational(0)};
  est.seed = cfg.seed;
  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MinFold fold(est.trace);

  // Step 1.
  const auto ecfg = cfg.derive("E'");
  const auto sampled = sample_edges(g, &p, EdgeFilter::all,
                                    sample_size(ecfg, m, m, n), ecfg);
  est.trace.note("|E'|", sampled.size());
  const auto s1 = endpoints_in(sampled, p, true);
  const auto t1 = endpoints_in(sampled, p, false);
  const Sentinels sen = sentinel_center(engine, cache, p, s1, t1, est.trace);
  fold.add("R1", cache.get(sen.s0).ecc_t, sen.s0);
  est.trace.note("w", sen.w);

  const DistanceArray dw = engine.forward(sen.w);
  const std::size_t cap = sqrt_cap(m);
  auto min_ecc = [&](const std::vector<Vertex>& sources, const char* name) {
    const Vertex who =
        argmin(sources, [&cache](Vertex s) { return cache.get(s).ecc_t; });
    if (who != kNoVertex) fold.add(name, cache.get(who).ecc_t, who);
  };

  // Step 2.
  std::vector<Vertex> tw;
  std::vector<Vertex> sw1;
  for (const ArcEntry& a :
       closest_arcs(g, dw, [&p](Vertex v) { return p.in_t(v); }, cap)) {
    for (Vertex x : {a.anchor, a.other}) (p.in_t(x) ? tw : sw1).push_back(x);
  }
  sort_unique(tw);
  sort_unique(sw1);
  min_ecc(sw1, "R2");
  // The sentinel of a T endpoint is its closest S vertex.
  std::vector<Vertex> st;
  for (Vertex t : tw) {
    const Vertex s = cache.get(t).near_s;
    if (s != kNoVertex) st.push_back(s);
  }
  sort_unique(st);
  min_ecc(st, "R3");

  // Step 3.
  std::vector<Vertex> sw2;
  for (const ArcEntry& a :
       closest_arcs(g, dw, [&p](Vertex v) { return p.in_s(v); }, cap)) {
    for (Vertex x : {a.anchor, a.other}) {
      if (p.in_s(x)) sw2.push_back(x);
    }
  }
  sort_unique(sw2);
  min_ecc(sw2, "R4");

  est.value = fold.value();
  est.witness = fold.who();
  est.searches = engine.count();
  return est;
}

Estimate directed_impl(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg) {
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(1, 2), Rational(0)};
  est.seed = cfg.seed;
  SearchEngine engine(g);
  MaxFold fold(est.trace);

  const auto crossing = filtered_edges(g, &p, EdgeFilter::crossing);
  if (crossing.empty()) return unreachable_estimate(Quantity::diameter);
  const std::size_t mc = crossing.size();

  // Step 1: the log factor is ln m here.
  const auto ecfg = cfg.derive("E'");
  const auto sampled =
      sample_edges(g, &p, EdgeFilter::crossing,
                   sample_size(ecfg, mc, static_cast<double>(g.edge_count()),
                               g.edge_count()),
                   ecfg);
  std::vector<Vertex> r;
  for (const Edge& e : sampled) r.push_back(e.u);
  sort_unique(r);
  Dist d1 = 0;
  for (Vertex u : r) d1 = std::max(d1, max_over(engine.forward(u), p.t()));
  fold.add("D1", d1);

  // Step 2.
  const DistanceArray to_r = engine.to_set(r);
  const Vertex w = argmax(p.s(), [&to_r](Vertex s) { return to_r[s]; });
  est.trace.note("w", w);
  const DistanceArray dw = engine.forward(w);
  fold.add("D3", max_over(dw, p.t()));

  // Crossing arcs ranked by the distance from w to their S end.
  std::vector<Edge> ranked = crossing;
  std::sort(ranked.begin(), ranked.end(), [&dw](const Edge& a, const Edge& b) {
    return std::tie(dw.dist[a.u], a.u, a.v) < std::tie(dw.dist[b.u], b.u, b.v);
  });
  ranked.resize(std::min(ranked.size(), sqrt_cap(g.edge_count())));
  std::vector<Vertex> pset;
  for (const Edge& e : ranked) pset.push_back(e.v);
  sort_unique(pset);
  Dist d2 = 0;
  for (Vertex v : pset) d2 = std::max(d2, max_over(engine.backward(v), p.s()));
  fold.add("D2", d2);
  est.trace.note("|P|", pset.size());

  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

}  // namespace

Estimate bi_diam_linear(const Graph& g, const PartitionSpec& p) {
  check_undirected_bichromatic(g, p, "bi-diam-linear");
  return run_focused(g, p, Quantity::diameter,
                     [](const Graph& h, const PartitionSpec& q) {
    Estimate est;
    est.quantity = Quantity::diameter;
    const auto edge = lightest_crossing(h, q);
    if (!edge) return unreachable_estimate(Quantity::diameter);
    est.guarantee = {Side::lower, Rational(1, 2), Rational(edge->w, 2)};
    SearchEngine engine(h);
    MaxFold fold(est.trace);
    est.trace.note("s", edge->u);
    est.trace.note("t", edge->v);
    fold.add("from_s", max_over(engine.forward(edge->u), q.t()));
    fold.add("to_t", max_over(engine.forward(edge->v), q.s()));
    est.value = fold.value();
    est.searches = engine.count();
    return est;
  });
}

Estimate bi_diam_sqrtn(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg) {
  check_undirected_bichromatic(g, p, "bi-diam-sqrtn");
  require_unweighted(g, "bi-diam-sqrtn");
  return run_focused(g, p, Quantity::diameter,
                     [&cfg](const Graph& h, const PartitionSpec& q) {
                       return diam_sqrtn_impl(h, q, cfg);
                     });
}

Estimate bi_diam_m32(const Graph& g, const PartitionSpec& p,
                     const SampleConfig& cfg) {
  check_undirected_bichromatic(g, p, "bi-diam-m32");
  return run_focused(g, p, Quantity::diameter,
                     [&cfg](const Graph& h, const PartitionSpec& q) {
                       return diam_m32_impl(h, q, cfg);
                     });
}

Estimate bi_radius_linear(const Graph& g, const PartitionSpec& p) {
  check_undirected_bichromatic(g, p, "bi-radius-linear");
  return run_focused(g, p, Quantity::radius,
                     [](const Graph& h, const PartitionSpec& q) {
    Estimate est;
    est.quantity = Quantity::radius;
    const auto edge = lightest_crossing(h, q);
    if (!edge) return unreachable_estimate(Quantity::radius);
    est.guarantee = {Side::upper, Rational(2), Rational(edge->w)};
    SearchEngine engine(h);
    MinFold fold(est.trace);
    fold.add("R1", max_over(engine.forward(edge->u), q.t()), edge->u);
    est.value = fold.value();
    est.witness = fold.who();
    est.searches = engine.count();
    return est;
  });
}

Estimate bi_radius_sqrtn(const Graph& g, const PartitionSpec& p,
                         const SampleConfig& cfg) {
  check_undirected_bichromatic(g, p, "bi-radius-sqrtn");
  require_unweighted(g, "bi-radius-sqrtn");
  return run_focused(g, p, Quantity::radius,
                     [&cfg](const Graph& h, const PartitionSpec& q) {
                       return radius_sqrtn_impl(h, q, cfg);
                     });
}

Estimate bi_radius_m32(const Graph& g, const PartitionSpec& p,
                       const SampleConfig& cfg) {
  check_undirected_bichromatic(g, p, "bi-radius-m32");
  return run_focused(g, p, Quantity::radius,
                     [&cfg](const Graph& h, const PartitionSpec& q) {
                       return radius_m32_impl(h, q, cfg);
                     });
}

EccentricityEstimates bi_ecc(const Graph& g, const PartitionSpec& p, Tier tier,
                             const SampleConfig& cfg) {
  check_undirected_bichromatic(g, p, "bi-ecc");
  return st_ecc(g, p.as_st(), tier, cfg);
}

Estimate bi_diam_directed_m32(const Graph& g, const PartitionSpec& p,
                              const SampleConfig& cfg) {
  require_directed(g, "bi-diam-dir-m32");
  require_mode(p, PartitionMode::bichromatic, "bi-diam-dir-m32");
  return directed_impl(g, p, cfg);
}

}  // namespace stdiam
