#include "support.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "stdiam/oracle.hpp"

namespace stdiam::test {

Matrix all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix d(n, std::vector<Dist>(n, kUnreachable));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min<Dist>(d[e.u][e.v], e.w);
    if (!g.directed()) d[e.v][e.u] = std::min<Dist>(d[e.v][e.u], e.w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kUnreachable) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::vector<Dist> pairwise_ecc(const Matrix& d, const PartitionSpec& p) {
  std::vector<Dist> out;
  for (Vertex s : p.s()) {
    Dist e = 0;
    for (Vertex t : p.t()) e = std::max(e, d[s][t]);
    out.push_back(e);
  }
  return out;
}

Dist pairwise_diam(const Matrix& d, const PartitionSpec& p) {
  const auto ecc = pairwise_ecc(d, p);
  return *std::max_element(ecc.begin(), ecc.end());
}

Dist pairwise_radius(const Matrix& d, const PartitionSpec& p) {
  const auto ecc = pairwise_ecc(d, p);
  return *std::min_element(ecc.begin(), ecc.end());
}

std::vector<CorpusItem> random_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusItem> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, spec.max_n)(rng);
    const std::size_t backbone = n - (spec.directed ? 0 : 1);
    const std::size_t pairs = spec.directed ? n * (n - 1) : n * (n - 1) / 2;
    const std::size_t hi = std::min(pairs, std::max(backbone, spec.max_m));
    // Bias toward sparse graphs so distances stay interesting.
    const std::size_t sparse_hi = std::min(hi, backbone + 3 * n);
    const bool sparse = std::bernoulli_distribution(0.7)(rng);
    const std::size_t m =
        std::uniform_int_distribution<std::size_t>(backbone, sparse ? sparse_hi : hi)(rng);
    const double split = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const std::uint64_t seed = rng();
    GeneratedInstance inst = gen_random_partitioned(n, m, spec.weight_max, spec.directed,
                                                    spec.mode, split, seed);
    out.push_back({std::move(inst.graph), std::move(inst.partition),
                   "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       " seed=" + std::to_string(seed)});
  }
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return Graph(n, std::move(edges), false, false);
}

namespace {

Weight lightest_crossing(const Graph& g, const PartitionSpec& p) {
  Weight w = 0;
  for (const Edge& e : g.edges()) {
    const bool fwd = p.in_s(e.u) && p.in_t(e.v);
    const bool back = !g.directed() && p.in_s(e.v) && p.in_t(e.u);
    if ((fwd || back) && (w == 0 || e.w < w)) w = e.w;
  }
  return w == 0 ? 1 : w;
}

using I = std::int64_t;

// Ceiling and floor of a / b for b > 0, any sign of a.
I ceil_div(I a, I b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
I floor_div(I a, I b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::pair<Dist, Dist> lower(Dist truth, I lo) {
  return {static_cast<Dist>(std::max<I>(0, lo)), truth};
}

std::pair<Dist, Dist> upper(Dist truth, I hi) { return {truth, static_cast<Dist>(hi)}; }

const std::map<std::string, IntervalFn>& intervals() {
  static const std::map<std::string, IntervalFn> table = {
      {"bi-diam-linear",
       [](Dist d, Weight w) { return lower(d, ceil_div(I(d) - I(w), 2)); }},
      {"bi-diam-sqrtn", [](Dist d, Weight) { return lower(d, ceil_div(3 * I(d) - 6, 5)); }},
      {"bi-diam-m32", [](Dist d, Weight) { return lower(d, ceil_div(3 * I(d), 5)); }},
      {"bi-radius-linear", [](Dist r, Weight w) { return upper(r, 2 * I(r) + I(w)); }},
      {"bi-radius-sqrtn",
       [](Dist r, Weight) { return upper(r, floor_div(5 * I(r) + 5, 3)); }},
      {"bi-radius-m32", [](Dist r, Weight) { return upper(r, floor_div(5 * I(r), 3)); }},
      {"bi-diam-dir-m32", [](Dist d, Weight) { return lower(d, ceil_div(I(d), 2)); }},
      {"st-ecc-linear", [](Dist e, Weight) { return lower(e, ceil_div(I(e), 3)); }},
      {"st-ecc-sqrtn", [](Dist e, Weight) { return lower(e, ceil_div(I(e) - 5, 2)); }},
      {"st-ecc-m32", [](Dist e, Weight) { return lower(e, ceil_div(I(e), 2)); }},
      {"bi-ecc/linear", [](Dist e, Weight) { return lower(e, ceil_div(I(e), 3)); }},
      {"bi-ecc/sqrtn", [](Dist e, Weight) { return lower(e, ceil_div(I(e) - 5, 2)); }},
      {"bi-ecc/m32", [](Dist e, Weight) { return lower(e, ceil_div(I(e), 2)); }},
      {"st-radius/linear", [](Dist r, Weight) { return upper(r, 3 * I(r)); }},
      {"st-radius/sqrtn", [](Dist r, Weight) { return upper(r, 2 * I(r) + 5); }},
      {"st-radius/m32", [](Dist r, Weight) { return upper(r, 2 * I(r)); }},
      {"subset-diam-dir", [](Dist d, Weight) { return lower(d, ceil_div(I(d), 2)); }},
      {"subset-radius", [](Dist r, Weight) { return upper(r, 2 * I(r)); }},
      // tau = 1/10: (1 - tau)/2 = 9/20 and 2/(1 - tau) = 20/9.
      {"subset-ecc-dir", [](Dist e, Weight) { return lower(e, ceil_div(9 * I(e), 20)); }},
      {"subset-radius-dir",
       [](Dist r, Weight) { return upper(r, floor_div(20 * I(r), 9)); }},
      {"param-bi-diam", [](Dist d, Weight) { return lower(d, ceil_div(2 * I(d), 3) - 1); }},
      {"param-bi-radius",
       [](Dist r, Weight) { return upper(r, floor_div(3 * I(r), 2) + 3); }},
      {"param-bi-ecc", [](Dist e, Weight) { return lower(e, ceil_div(3 * I(e), 5) - 1); }},
      {"param-bi-diam-dir", [](Dist d, Weight) { return lower(d, ceil_div(2 * I(d), 3)); }},
  };
  return table;
}

bool inside(IntervalFn fn, Dist truth, Weight w, Dist value) {
  if (truth == kUnreachable || value == kUnreachable) return truth == value;
  const auto [lo, hi] = fn(truth, w);
  return lo <= value && value <= hi;
}

}  // namespace

Truth truth_pairwise(const Graph& g, const PartitionSpec& p) {
  const Matrix d = all_pairs(g);
  Truth t;
  t.ecc = pairwise_ecc(d, p);
  t.diam = pairwise_diam(d, p);
  t.radius = pairwise_radius(d, p);
  t.lightest = lightest_crossing(g, p);
  return t;
}

Truth truth_oracle(const Graph& g, const PartitionSpec& p) {
  Truth t;
  for (const OracleResult& r : exact_st_ecc(g, p)) t.ecc.push_back(r.value);
  t.diam = *std::max_element(t.ecc.begin(), t.ecc.end());
  t.radius = *std::min_element(t.ecc.begin(), t.ecc.end());
  t.lightest = lightest_crossing(g, p);
  return t;
}

Dist measure_gadget(const GeneratedInstance& inst) {
  const Expectation& ex = *inst.expected;
  const auto ecc = exact_st_ecc(inst.graph, inst.partition);
  switch (ex.measure) {
    case Measure::st_diameter: return diam_from_ecc(ecc).value;
    case Measure::st_radius: return radius_from_ecc(ecc).value;
    case Measure::max_ecc_over_focus: {
      const auto s = inst.partition.s();
      Dist out = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (ex.focus.empty() || std::find(ex.focus.begin(), ex.focus.end(), s[i]) != ex.focus.end()) {
          out = std::max(out, ecc[i].value);
        }
      }
      return out;
    }
  }
  return kUnreachable;
}

IntervalFn theorem_interval(const std::string& key) {
  const auto it = intervals().find(key);
  if (it == intervals().end()) throw std::invalid_argument("no interval for " + key);
  return it->second;
}

SuiteResult check_suite(const AlgoInfo& algo, const std::string& key,
                        const std::vector<CorpusItem>& corpus,
                        const std::vector<Truth>& truths,
                        const std::vector<std::uint64_t>& seeds, RunOptions opts) {
  const IntervalFn fn = theorem_interval(key);
  SuiteResult res;
  auto fail = [&](const CorpusItem& item, std::uint64_t seed, Dist truth, Dist value) {
    ++res.violations;
    if (res.first_failure.empty()) {
      res.first_failure = std::string(algo.name) + " " + item.label +
                          " seed=" + std::to_string(seed) + " truth=" +
                          std::to_string(truth) + " value=" + std::to_string(value);
    }
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusItem& item = corpus[i];
    const Truth& truth = truths[i];
    for (std::uint64_t seed : seeds) {
      opts.sample.seed = seed;
      const Outcome out = algo.run(item.graph, item.partition, opts);
      ++res.runs;
      if (out.scalar) {
        const Dist t = algo.quantity == Quantity::diameter ? truth.diam : truth.radius;
        if (!inside(fn, t, truth.lightest, out.scalar->value)) {
          fail(item, seed, t, out.scalar->value);
        }
      } else {
        for (std::size_t k = 0; k < truth.ecc.size(); ++k) {
          if (!inside(fn, truth.ecc[k], truth.lightest, out.ecc->values[k])) {
            fail(item, seed, truth.ecc[k], out.ecc->values[k]);
          }
        }
      }
    }
  }
  return res;
}

}  // namespace stdiam::test
