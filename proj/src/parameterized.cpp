#include "stdiam/parameterized.hpp"

#include <algorithm>

#include "detail.hpp"

namespace stdiam {

using namespace detail;

namespace {

/// Smallest-id neighbor on the requested side.
Vertex cross_neighbor(const Graph& g, const PartitionSpec& p, Vertex v,
                      bool want_t) {
  for (const Arc& a : g.out_arcs(v)) {
    if (want_t ? p.in_t(a.target) : p.in_s(a.target)) return a.target;
  }
  return kNoVertex;
}

void check_param(const Graph& g, const PartitionSpec& p, const char* algo) {
  require_undirected(g, algo);
  require_unweighted(g, algo);
  require_mode(p, PartitionMode::bichromatic, algo);
}

void note_boundary(Trace& trace, const BoundarySets& b) {
  trace.note("|S'|", b.s_prime.size());
  trace.note("|T'|", b.t_prime.size());
  trace.note("|B|", b.b.size());
}

Estimate diam_impl(const Graph& g, const PartitionSpec& p) {
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(2, 3), Rational(1)};
  const BoundarySets bs = boundary(g, p);
  note_boundary(est.trace, bs);
  if (bs.b.empty()) return unreachable_estimate(Quantity::diameter);

  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MaxFold fold(est.trace);
  // The problem is symmetric in S and T, so B in T swaps the roles.
  const bool in_s = bs.b_in_s;
  auto ecc_far = [&](Vertex v, bool v_in_s) {
    const Summary& s = cache.get(v);
    return v_in_s ? s.ecc_t : s.ecc_s;
  };
  Dist d1 = 0;
  for (Vertex v : bs.b) {
    d1 = std::max(d1, ecc_far(v, in_s));
    const Vertex other = cross_neighbor(g, p, v, in_s);
    d1 = std::max(d1, ecc_far(other, !in_s));
  }
  fold.add("D1", d1);

  const DistanceArray to_b = engine.from_set(bs.b);
  const auto side = in_s ? p.s() : p.t();
  const Vertex far = argmax(side, [&to_b](Vertex v) { return to_b[v]; });
  est.trace.note("far", far);
  fold.add("D2", ecc_far(far, in_s));

  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

Estimate radius_impl(const Graph& g, const PartitionSpec& p) {
  Estimate est;
  est.quantity = Quantity::radius;
  est.guarantee = {Side::upper, Rational(3, 2), Rational(3)};
  const BoundarySets bs = boundary(g, p);
  note_boundary(est.trace, bs);
  if (bs.b.empty()) return unreachable_estimate(Quantity::radius);

  SearchEngine engine(g);
  SummaryCache cache(engine, p);
  MinFold fold(est.trace);
  std::vector<Vertex> sources;
  for (Vertex v : bs.b) {
    sources.push_back(bs.b_in_s ? v : cross_neighbor(g, p, v, false));
  }
  sort_unique(sources);

  std::vector<Dist> far(g.vertex_count(), 0);
  auto fold_far = [&](const DistanceArray& d) {
    for (Vertex s : p.s()) far[s] = std::max(far[s], d[s]);
  };
  const Vertex r1 = argmin(sources, [&](Vertex s) {
    return cache.get(s, fold_far).ecc_t;
  });
  fold.add("R1", cache.get(r1).ecc_t, r1);

  const Vertex s = argmin(p.s(), [&far](Vertex v) { return far[v]; });
  est.trace.note("s", s);
  fold.add("R2", cache.get(s).ecc_t, s);

  est.value = fold.value();
  est.witness = fold.who();
  est.searches = engine.count();
  return est;
}

EccentricityEstimates ecc_impl(const Graph& g, const PartitionSpec& p) {
  EccentricityEstimates out;
  out.vertices.assign(p.s().begin(), p.s().end());
  out.values.assign(out.vertices.size(), 0);
  out.guarantee = {Side::lower, Rational(3, 5), Rational(1)};
  const BoundarySets bs = boundary(g, p);
  note_boundary(out.trace, bs);
  if (bs.b.empty()) {
    std::fill(out.values.begin(), out.values.end(), kUnreachable);
    return out;
  }

  SearchEngine engine(g);
  auto fold = [&](const DistanceArray& d) {
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
      out.values[i] = std::max(out.values[i], d[out.vertices[i]]);
    }
  };
  std::vector<Vertex> folded;  // T'' members already applied
  std::vector<Vertex> wanted;  // T'' members still to search
  for (Vertex u : bs.b) {
    const DistanceArray du = engine.forward(u);
    wanted.push_back(argmax(p.t(), [&du](Vertex t) { return du[t]; }));
    if (bs.b_in_s) {
      wanted.push_back(cross_neighbor(g, p, u, true));
    } else {
      fold(du);
      folded.push_back(u);
    }
  }
  const DistanceArray from_b = engine.from_set(bs.b);
  const Vertex t = argmax(p.t(), [&from_b](Vertex x) { return from_b[x]; });
  out.trace.note("t", t);
  wanted.push_back(t);
  sort_unique(wanted);
  sort_unique(folded);
  for (Vertex x : wanted) {
    if (!std::binary_search(folded.begin(), folded.end(), x)) {
      fold(engine.forward(x));
    }
  }
  std::vector<Vertex> all = folded;
  all.insert(all.end(), wanted.begin(), wanted.end());
  sort_unique(all);
  out.trace.note("|T''|", all.size());
  out.searches = engine.count();
  return out;
}

}  // namespace

BoundarySets boundary(const Graph& g, const PartitionSpec& p) {
  BoundarySets out;
  for (const Edge& e : g.edges()) {
    if (p.in_s(e.u) && p.in_t(e.v)) {
      out.s_prime.push_back(e.u);
      out.t_prime.push_back(e.v);
    } else if (!g.directed() && p.in_s(e.v) && p.in_t(e.u)) {
      out.s_prime.push_back(e.v);
      out.t_prime.push_back(e.u);
    }
  }
  sort_unique(out.s_prime);
  sort_unique(out.t_prime);
  out.b_in_s = out.s_prime.size() <= out.t_prime.size();
  out.b = out.b_in_s ? out.s_prime : out.t_prime;
  out.b_prime = out.s_prime;
  out.b_prime.insert(out.b_prime.end(), out.t_prime.begin(), out.t_prime.end());
  sort_unique(out.b_prime);
  return out;
}

Estimate param_bi_diam(const Graph& g, const PartitionSpec& p) {
  check_param(g, p, "param-bi-diam");
  return run_focused(g, p, Quantity::diameter, diam_impl);
}

Estimate param_bi_radius(const Graph& g, const PartitionSpec& p) {
  check_param(g, p, "param-bi-radius");
  return run_focused(g, p, Quantity::radius, radius_impl);
}

EccentricityEstimates param_bi_ecc(const Graph& g, const PartitionSpec& p) {
  check_param(g, p, "param-bi-ecc");
  return run_focused_ecc(g, p, ecc_impl);
}

Estimate param_bi_diam_directed(const Graph& g, const PartitionSpec& p) {
  require_directed(g, "param-bi-diam-dir");
  require_unweighted(g, "param-bi-diam-dir");
  require_mode(p, PartitionMode::bichromatic, "param-bi-diam-dir");
  Estimate est;
  est.quantity = Quantity::diameter;
  est.guarantee = {Side::lower, Rational(2, 3), Rational(0)};
  const BoundarySets bs = boundary(g, p);
  note_boundary(est.trace, bs);
  est.trace.note("|B'|", bs.b_prime.size());
  if (bs.b_prime.empty()) return unreachable_estimate(Quantity::diameter);

  SearchEngine engine(g);
  MaxFold fold(est.trace);
  Dist d1 = 0;
  for (Vertex s : bs.s_prime) d1 = std::max(d1, max_over(engine.forward(s), p.t()));
  for (Vertex t : bs.t_prime) d1 = std::max(d1, max_over(engine.backward(t), p.s()));
  fold.add("D1", d1);
  const DistanceArray to_b = engine.to_set(bs.b_prime);
  const Vertex s = argmax(p.s(), [&to_b](Vertex v) { return to_b[v]; });
  est.trace.note("s", s);
  fold.add("D2", max_over(engine.forward(s), p.t()));
  est.value = fold.value();
  est.searches = engine.count();
  return est;
}

}  // namespace stdiam
