#include "stdiam/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "stdiam/sampling.hpp"

namespace stdiam {

namespace {

constexpr int kRejectionAttempts = 1000;

bool dot_nonzero(const BitVector& x, const BitVector& y) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] && y[c]) return true;
  }
  return false;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

std::vector<BitVector> random_vectors(std::mt19937_64& rng, std::size_t n,
                                      std::size_t d, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<BitVector> out(n, BitVector(d, 0));
  for (auto& x : out) {
    for (auto& b : x) b = bit(rng) ? 1 : 0;
  }
  return out;
}

/// Sets coordinate c in some member other than `skip` wherever no member has it.
void cover(std::vector<BitVector>& xs, std::size_t d, std::mt19937_64& rng,
           std::optional<std::size_t> skip = std::nullopt) {
  std::vector<std::size_t> choices;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != skip) choices.push_back(i);
  }
  if (choices.empty()) return;
  for (std::size_t c = 0; c < d; ++c) {
    bool hit = false;
    for (const auto& x : xs) hit = hit || x[c];
    if (!hit) xs[choices[pick(rng, choices.size())]][c] = 1;
  }
}

void ensure_nonzero(std::vector<BitVector>& xs, std::size_t d,
                    std::mt19937_64& rng) {
  for (auto& x : xs) {
    if (std::find(x.begin(), x.end(), 1) == x.end()) x[pick(rng, d)] = 1;
  }
}

void check_ov(const OVInstance& inst) {
  if (inst.d == 0) throw std::invalid_argument("zero-dimension vectors");
  if (inst.u.empty() || inst.v.empty()) {
    throw std::invalid_argument("U and V must be nonempty");
  }
  for (const auto* side : {&inst.u, &inst.v}) {
    for (const auto& x : *side) {
      if (x.size() != inst.d) throw std::invalid_argument("vector length != d");
    }
  }
}

class Builder {
 public:
  Vertex add() { return static_cast<Vertex>(n_++); }
  std::vector<Vertex> add_many(std::size_t count) {
    std::vector<Vertex> out(count);
    for (auto& v : out) v = add();
    return out;
  }
  void edge(Vertex u, Vertex v) { edges_.push_back({u, v, 1}); }
  /// Path of `len` edges from u to v; returns the interior vertices.
  std::vector<Vertex> path(Vertex u, Vertex v, std::size_t len) {
    std::vector<Vertex> inner = add_many(len - 1);
    Vertex prev = u;
    for (Vertex x : inner) {
      edge(prev, x);
      prev = x;
    }
    edge(prev, v);
    return inner;
  }
  std::size_t size() const { return n_; }
  Graph build(bool directed) const {
    if (!directed) return Graph(n_, edges_, false, false);
    return Graph(n_, edges_, true, false);
  }
  /// Both arcs per edge: an undirected construction posed as a directed graph.
  Graph build_symmetric() const {
    std::vector<Edge> both;
    for (const Edge& e : edges_) {
      both.push_back(e);
      both.push_back({e.v, e.u, e.w});
    }
    return Graph(n_, std::move(both), true, false);
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct OVCore {
  std::vector<Vertex> u, c, v;
};

/// x-c edges; with `directed` the arcs run U -> C -> V.
OVCore ov_core(Builder& b, const OVInstance& inst) {
  OVCore core;
  core.u = b.add_many(inst.u.size());
  core.c = b.add_many(inst.d);
  core.v = b.add_many(inst.v.size());
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    for (std::size_t c = 0; c < inst.d; ++c) {
      if (inst.u[i][c]) b.edge(core.u[i], core.c[c]);
    }
  }
  for (std::size_t i = 0; i < inst.v.size(); ++i) {
    for (std::size_t c = 0; c < inst.d; ++c) {
      if (inst.v[i][c]) b.edge(core.c[c], core.v[i]);
    }
  }
  return core;
}

std::vector<Vertex> concat(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<Vertex> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

Expectation expect(Measure m, Bound none, Bound sol, bool has_solution) {
  Expectation e;
  e.measure = m;
  e.no_solution = none;
  e.solution = sol;
  e.has_solution = has_solution;
  return e;
}

constexpr Bound eq(Dist v) { return {Cmp::eq, v}; }
constexpr Bound le(Dist v) { return {Cmp::le, v}; }
constexpr Bound ge(Dist v) { return {Cmp::ge, v}; }

GeneratedInstance make(Graph g, PartitionSpec p, Family f,
                       std::vector<std::pair<std::string, std::uint64_t>> params,
                       Expectation e, std::vector<Role> roles) {
  return GeneratedInstance{std::move(g), std::move(p), f, std::move(params),
                           std::move(e), std::move(roles)};
}

// ---------------------------------------------------------------------------
// k-OV layered graph.
//
// Layer i holds vectors a_r (r <= k-2-i) and b_r (r >= k-i+1); middle
// layers also hold coordinates x_1..x_{k-1}. Coordinate x_j certifies the
// k-tuple (a_0..a_{j-1}, b_j..b_{k-1}), so a held a_r needs a 1 at x_j for
// every j > r and a held b_r needs a 1 at x_j for every j <= r. Adjacent
// layers are joined when they agree on what both hold and the merged
// assignment satisfies every check.

struct Slot {
  std::vector<int> a;  // index r in [0, k-2]
  std::vector<int> b;  // index r in [1, k-1]
  std::vector<int> x;  // index j in [1, k-1]
};

class KovBuilder {
 public:
  explicit KovBuilder(const KOVInstance& inst)
      : w_(inst.sets), k_(inst.sets.size()), n_(inst.sets[0].size()), d_(inst.d) {}

  bool holds_a(std::size_t layer, std::size_t r) const {
    return r + 2 + layer <= k_;
  }
  bool holds_b(std::size_t layer, std::size_t r) const {
    return r >= 1 && r + layer >= k_ + 1;
  }
  bool holds_x(std::size_t layer) const { return layer >= 1 && layer < k_; }

  bool valid(const Slot& s) const {
    for (std::size_t r = 0; r + 1 < k_; ++r) {
      if (s.a[r] < 0) continue;
      for (std::size_t j = r + 1; j < k_; ++j) {
        if (s.x[j] >= 0 && !w_[r][static_cast<std::size_t>(s.a[r])][static_cast<std::size_t>(s.x[j])]) return false;
      }
    }
    for (std::size_t r = 1; r < k_; ++r) {
      if (s.b[r] < 0) continue;
      for (std::size_t j = 1; j <= r; ++j) {
        if (s.x[j] >= 0 && !w_[r][static_cast<std::size_t>(s.b[r])][static_cast<std::size_t>(s.x[j])]) return false;
      }
    }
    return true;
  }

  /// All valid slots of a layer, first held item most significant.
  std::vector<Slot> enumerate(std::size_t layer) const {
    Slot s{std::vector<int>(k_, -1), std::vector<int>(k_, -1), std::vector<int>(k_, -1)};
    std::vector<std::pair<char, std::size_t>> plan;
    for (std::size_t r = 0; r + 1 < k_; ++r) {
      if (holds_a(layer, r)) plan.push_back({'a', r});
    }
    for (std::size_t r = 1; r < k_; ++r) {
      if (holds_b(layer, r)) plan.push_back({'b', r});
    }
    if (holds_x(layer)) {
      for (std::size_t j = 1; j < k_; ++j) plan.push_back({'x', j});
    }
    std::vector<Slot> out;
    std::vector<std::size_t> value(plan.size(), 0);
    auto radix = [&](std::size_t i) { return plan[i].first == 'x' ? d_ : n_; };
    while (true) {
      for (std::size_t i = 0; i < plan.size(); ++i) {
        auto& vec = plan[i].first == 'a' ? s.a : plan[i].first == 'b' ? s.b : s.x;
        vec[plan[i].second] = static_cast<int>(value[i]);
      }
      if (valid(s)) out.push_back(s);
      std::size_t i = plan.size();
      while (i > 0) {
        --i;
        if (++value[i] < radix(i)) break;
        value[i] = 0;
        if (i == 0) return out;
      }
      if (plan.empty()) return out;
    }
  }

  std::vector<int> common_key(const Slot& s, std::size_t lower) const {
    const std::size_t upper = lower + 1;
    std::vector<int> key;
    for (std::size_t r = 0; r + 1 < k_; ++r) {
      if (holds_a(upper, r)) key.push_back(s.a[r]);
    }
    for (std::size_t r = 1; r < k_; ++r) {
      if (holds_b(lower, r)) key.push_back(s.b[r]);
    }
    if (holds_x(lower) && holds_x(upper)) {
      for (std::size_t j = 1; j < k_; ++j) key.push_back(s.x[j]);
    }
    return key;
  }

  Slot merge(const Slot& p, const Slot& q) const {
    Slot m = p;
    for (std::size_t i = 0; i < k_; ++i) {
      if (m.a[i] < 0) m.a[i] = q.a[i];
      if (m.b[i] < 0) m.b[i] = q.b[i];
      if (m.x[i] < 0) m.x[i] = q.x[i];
    }
    return m;
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

 private:
  const std::vector<std::vector<BitVector>>& w_;
  std::size_t k_, n_, d_;
};

struct KovCore {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> layers;  // L_0..L_k
};

KovCore kov_core(const KOVInstance& inst) {
  KovBuilder kb(inst);
  const std::size_t k = kb.k();
  std::vector<std::vector<Slot>> slots(k + 1);
  for (std::size_t i = 0; i <= k; ++i) slots[i] = kb.enumerate(i);

  std::vector<std::size_t> offset(k + 2, 0);
  for (std::size_t i = 0; i <= k; ++i) offset[i + 1] = offset[i] + slots[i].size();
  const std::size_t total = offset[k + 1];
  std::vector<std::vector<Vertex>> adj(total);
  for (std::size_t i = 1; i <= k; ++i) {
    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    for (std::size_t p = 0; p < slots[i - 1].size(); ++p) {
      groups[kb.common_key(slots[i - 1][p], i - 1)].push_back(p);
    }
    for (std::size_t q = 0; q < slots[i].size(); ++q) {
      auto it = groups.find(kb.common_key(slots[i][q], i - 1));
      if (it == groups.end()) continue;
      for (std::size_t p : it->second) {
        if (!kb.valid(kb.merge(slots[i - 1][p], slots[i][q]))) continue;
        const auto pv = static_cast<Vertex>(offset[i - 1] + p);
        const auto qv = static_cast<Vertex>(offset[i] + q);
        adj[pv].push_back(qv);
        adj[qv].push_back(pv);
      }
    }
  }

  std::vector<std::size_t> layer_of(total);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t v = offset[i]; v < offset[i + 1]; ++v) layer_of[v] = i;
  }
  // Prune middle vertices lacking a neighbor in an adjacent layer.
  std::vector<char> alive(total, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = offset[1]; v < offset[k]; ++v) {
      if (!alive[v]) continue;
      bool down = false;
      bool up = false;
      for (Vertex x : adj[v]) {
        if (!alive[x]) continue;
        down = down || layer_of[x] + 1 == layer_of[v];
        up = up || layer_of[x] == layer_of[v] + 1;
      }
      if (!down || !up) {
        alive[v] = 0;
        changed = true;
      }
    }
  }

  KovCore core;
  std::vector<Vertex> id(total, 0);
  core.layers.resize(k + 1);
  for (std::size_t v = 0; v < total; ++v) {
    if (!alive[v]) continue;
    id[v] = static_cast<Vertex>(core.vertex_count++);
    core.layers[layer_of[v]].push_back(id[v]);
  }
  for (std::size_t v = 0; v < total; ++v) {
    if (!alive[v]) continue;
    for (Vertex x : adj[v]) {
      if (alive[x] && v < x) core.edges.push_back({id[v], id[x], 1});
    }
  }
  return core;
}

/// Position of a tuple of indices in lexicographic order, first most significant.
std::size_t tuple_index(const std::vector<std::size_t>& tuple, std::size_t n) {
  std::size_t out = 0;
  for (std::size_t t : tuple) out = out * n + t;
  return out;
}

void check_kov(const KOVInstance& inst) {
  if (inst.sets.size() < 2) throw std::invalid_argument("k must be at least 2");
  if (inst.d == 0) throw std::invalid_argument("zero-dimension vectors");
  const std::size_t n = inst.sets[0].size();
  if (n == 0) throw std::invalid_argument("k-OV sets must be nonempty");
  for (const auto& set : inst.sets) {
    if (set.size() != n) throw std::invalid_argument("k-OV sets differ in size");
    for (const auto& x : set) {
      if (x.size() != inst.d) throw std::invalid_argument("vector length != d");
    }
  }
}

std::vector<std::pair<std::string, std::uint64_t>> kov_params(
    const KOVInstance& inst, std::size_t extra_layers) {
  const std::size_t k = inst.sets.size();
  const std::uint64_t n = inst.sets[0].size();
  const std::uint64_t d = inst.d;
  const std::uint64_t outer = ipow(n, k - 1);
  const std::uint64_t middle = ipow(n, k - 2) * ipow(d, k - 1);
  return {{"k", k},
          {"n", n},
          {"d", d},
          {"vertex_bound", (2 + extra_layers) * outer + (k - 1) * middle},
          {"edge_bound", k * outer * ipow(d, k - 1) + extra_layers * outer}};
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::pair<std::size_t, std::size_t>> find_orthogonal(
    const OVInstance& inst) {
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    for (std::size_t j = 0; j < inst.v.size(); ++j) {
      if (!dot_nonzero(inst.u[i], inst.v[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> find_hitting(const OVInstance& inst) {
  for (std::size_t i = 0; i < inst.u.size(); ++i) {
    bool all = true;
    for (const auto& v : inst.v) all = all && dot_nonzero(inst.u[i], v);
    if (all) return i;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_k_orthogonal(const KOVInstance& inst) {
  const std::size_t k = inst.sets.size();
  const std::size_t n = inst.sets.empty() ? 0 : inst.sets[0].size();
  if (k == 0 || n == 0) return std::nullopt;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    bool orthogonal = true;
    for (std::size_t c = 0; c < inst.d && orthogonal; ++c) {
      bool all = true;
      for (std::size_t t = 0; t < k; ++t) all = all && inst.sets[t][idx[t]][c];
      orthogonal = !all;
    }
    if (orthogonal) return idx;
    std::size_t t = k;
    while (t > 0) {
      --t;
      if (++idx[t] < n) break;
      idx[t] = 0;
      if (t == 0) return std::nullopt;
    }
  }
}

OVInstance random_ov(std::size_t n, std::size_t d, bool solution,
                     std::uint64_t seed) {
  if (n < 2 || d < 2) throw std::invalid_argument("random_ov needs n >= 2, d >= 2");
  auto rng = SampleConfig{seed}.derive("ov").engine();
  OVInstance inst{{}, {}, d};
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    inst.u = random_vectors(rng, n, d, 0.6);
    inst.v = random_vectors(rng, n, d, 0.6);
    cover(inst.u, d, rng);
    cover(inst.v, d, rng);
    if (!find_orthogonal(inst)) break;
  }
  // Rejection budget exhausted: add shared coordinates until none is left.
  while (auto pair = find_orthogonal(inst)) {
    const std::size_t c = pick(rng, d);
    inst.u[pair->first][c] = 1;
    inst.v[pair->second][c] = 1;
  }
  if (solution) {
    const std::size_t i = pick(rng, n);
    const std::size_t j = pick(rng, n);
    std::bernoulli_distribution side(0.5);
    for (std::size_t c = 0; c < d; ++c) {
      const bool to_u = side(rng);
      inst.u[i][c] = to_u ? 1 : 0;
      inst.v[j][c] = to_u ? 0 : 1;
    }
    if (std::find(inst.u[i].begin(), inst.u[i].end(), 1) == inst.u[i].end()) {
      const std::size_t c = pick(rng, d);
      inst.u[i][c] = 1;
      inst.v[j][c] = 0;
    }
    if (std::find(inst.v[j].begin(), inst.v[j].end(), 1) == inst.v[j].end()) {
      std::size_t c = pick(rng, d);
      if (inst.u[i][c] && std::count(inst.u[i].begin(), inst.u[i].end(), 1) == 1) {
        c = (c + 1) % d;
      }
      inst.u[i][c] = 0;
      inst.v[j][c] = 1;
    }
    cover(inst.u, d, rng, i);
    cover(inst.v, d, rng, j);
  }
  return inst;
}

OVInstance random_hs(std::size_t n, std::size_t d, bool solution,
                     std::uint64_t seed) {
  if (n == 0 || d == 0) throw std::invalid_argument("random_hs needs n, d >= 1");
  auto rng = SampleConfig{seed}.derive("hs").engine();
  OVInstance inst{random_vectors(rng, n, d, 0.5), random_vectors(rng, n, d, 0.5), d};
  cover(inst.v, d, rng);
  ensure_nonzero(inst.v, d, rng);
  if (solution) {
    const std::size_t i = pick(rng, n);
    for (const auto& v : inst.v) {
      if (dot_nonzero(inst.u[i], v)) continue;
      std::vector<std::size_t> ones;
      for (std::size_t c = 0; c < d; ++c) {
        if (v[c]) ones.push_back(c);
      }
      inst.u[i][ones[pick(rng, ones.size())]] = 1;
    }
  } else {
    for (auto& u : inst.u) {
      bool hits_all = true;
      for (const auto& v : inst.v) hits_all = hits_all && dot_nonzero(u, v);
      if (!hits_all) continue;
      const auto& v = inst.v[pick(rng, n)];
      for (std::size_t c = 0; c < d; ++c) {
        if (v[c]) u[c] = 0;
      }
    }
  }
  return inst;
}

KOVInstance random_kov(std::size_t k, std::size_t n, std::size_t d, bool solution,
                       std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n == 0 || d == 0) throw std::invalid_argument("random_kov needs n, d >= 1");
  auto rng = SampleConfig{seed}.derive("kov").engine();
  KOVInstance inst{{}, d};
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    inst.sets.clear();
    for (std::size_t t = 0; t < k; ++t) inst.sets.push_back(random_vectors(rng, n, d, 0.8));
    if (!find_k_orthogonal(inst)) break;
  }
  while (auto tuple = find_k_orthogonal(inst)) {
    const std::size_t c = pick(rng, d);
    for (std::size_t t = 0; t < k; ++t) inst.sets[t][(*tuple)[t]][c] = 1;
  }
  if (solution) {
    std::vector<std::size_t> idx(k);
    for (auto& i : idx) i = pick(rng, n);
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t t = pick(rng, k);
      inst.sets[t][idx[t]][c] = 0;
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::ov_graph: return "OV_GRAPH";
    case Family::kov_graph: return "KOV_GRAPH";
    case Family::bi_diam_kov: return "BI_DIAM_KOV";
    case Family::bi_ecc_kov: return "BI_ECC_KOV";
    case Family::bi_rad_hs: return "BI_RAD_HS";
    case Family::dir_bi_diam: return "DIR_BI_DIAM";
    case Family::dir_bi_ecc: return "DIR_BI_ECC";
    case Family::dir_bi_rad: return "DIR_BI_RAD";
    case Family::dir_st_diam: return "DIR_ST_DIAM";
    case Family::st_rad_hs: return "ST_RAD_HS";
    case Family::subset_diam: return "SUBSET_DIAM";
    case Family::subset_rad: return "SUBSET_RAD";
    case Family::param_diam: return "PARAM_DIAM";
    case Family::param_ecc: return "PARAM_ECC";
    case Family::param_rad: return "PARAM_RAD";
    case Family::param_dir_diam: return "PARAM_DIR_DIAM";
    case Family::random: return "RANDOM";
  }
  return "?";
}

std::vector<Family> gadget_families() {
  return {Family::ov_graph,    Family::kov_graph,   Family::bi_diam_kov,
          Family::bi_ecc_kov,  Family::bi_rad_hs,   Family::dir_bi_diam,
          Family::dir_bi_ecc,  Family::dir_bi_rad,  Family::dir_st_diam,
          Family::st_rad_hs,   Family::subset_diam, Family::subset_rad,
          Family::param_diam,  Family::param_ecc,   Family::param_rad,
          Family::param_dir_diam};
}

Family parse_family(const std::string& name) {
  for (Family f : gadget_families()) {
    if (name == to_string(f)) return f;
  }
  if (name == "RANDOM") return Family::random;
  throw std::invalid_argument("unknown family: " + name);
}

bool uses_hs(Family f) noexcept {
  return f == Family::bi_rad_hs || f == Family::dir_bi_rad ||
         f == Family::st_rad_hs || f == Family::subset_rad ||
         f == Family::param_rad;
}

bool uses_kov(Family f) noexcept {
  return f == Family::kov_graph || f == Family::bi_diam_kov ||
         f == Family::bi_ecc_kov;
}

const char* to_string(Measure m) noexcept {
  switch (m) {
    case Measure::st_diameter: return "st_diameter";
    case Measure::st_radius: return "st_radius";
    case Measure::max_ecc_over_focus: return "max_ecc_over_focus";
  }
  return "?";
}

const char* to_string(Cmp c) noexcept {
  switch (c) {
    case Cmp::eq: return "eq";
    case Cmp::le: return "le";
    case Cmp::ge: return "ge";
  }
  return "?";
}

bool Bound::holds(Dist x) const noexcept {
  switch (cmp) {
    case Cmp::eq: return x == value;
    case Cmp::le: return x <= value;
    case Cmp::ge: return x >= value;
  }
  return false;
}

const Role* GeneratedInstance::role(const std::string& name) const {
  for (const Role& r : roles) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

GeneratedInstance gen_ov_graph(const OVInstance& inst) {
  check_ov(inst);
  Builder b;
  const OVCore core = ov_core(b, inst);
  const auto orth = find_orthogonal(inst);
  Expectation e = expect(Measure::st_diameter, eq(2), ge(4), orth.has_value());
  if (orth) e.witness = std::pair{core.u[orth->first], core.v[orth->second]};
  const std::size_t n = b.size();
  return make(b.build(false), PartitionSpec::st(n, core.u, core.v),
              Family::ov_graph, {{"n", inst.u.size()}, {"d", inst.d}}, e,
              {{"U", core.u}, {"C", core.c}, {"V", core.v}});
}

GeneratedInstance gen_kov_graph(const KOVInstance& inst) {
  return gen_lowerbound(Family::kov_graph, inst, {inst.sets.size(), 1});
}

GeneratedInstance gen_lowerbound(Family family, const KOVInstance& inst,
                                 GadgetParams params) {
  check_kov(inst);
  const std::size_t k = inst.sets.size();
  if (params.k != k) throw std::invalid_argument("k does not match the instance");
  const std::size_t n = inst.sets[0].size();
  KovCore core = kov_core(inst);
  const auto sol = find_k_orthogonal(inst);
  std::optional<std::pair<Vertex, Vertex>> witness;
  if (sol) {
    const std::vector<std::size_t> alpha(sol->begin(), sol->end() - 1);
    const std::vector<std::size_t> beta(sol->begin() + 1, sol->end());
    witness = std::pair{core.layers[0][tuple_index(alpha, n)],
                        core.layers[k][tuple_index(beta, n)]};
  }
  std::vector<Role> roles;
  for (std::size_t i = 0; i <= k; ++i) {
    roles.push_back({"L" + std::to_string(i), core.layers[i]});
  }
  const Dist kk = k;

  switch (family) {
    case Family::kov_graph: {
      Expectation e = expect(Measure::st_diameter, eq(kk), ge(3 * kk - 2), sol.has_value());
      e.witness = witness;
      Graph g(core.vertex_count, core.edges, false, false);
      return make(std::move(g),
                  PartitionSpec::st(core.vertex_count, core.layers[0], core.layers[k]),
                  family, kov_params(inst, 0), e, std::move(roles));
    }
    case Family::bi_diam_kov: {
      std::size_t count = core.vertex_count;
      std::vector<Vertex> prev = core.layers[k];
      for (std::size_t i = k + 1; i <= 2 * k - 1; ++i) {
        std::vector<Vertex> next(prev.size());
        for (std::size_t j = 0; j < prev.size(); ++j) {
          next[j] = static_cast<Vertex>(count++);
          core.edges.push_back({prev[j], next[j], 1});
        }
        roles.push_back({"L" + std::to_string(i), next});
        prev = std::move(next);
      }
      Expectation e = expect(Measure::st_diameter, le(2 * kk - 1), ge(4 * kk - 3),
                             sol.has_value());
      if (witness) {
        // Layers past L_k copy L_k in order.
        const auto& lk = core.layers[k];
        const auto pos = static_cast<std::size_t>(
            std::find(lk.begin(), lk.end(), witness->second) - lk.begin());
        e.witness = std::pair{witness->first, prev[pos]};
      }
      Graph g(count, core.edges, false, false);
      return make(std::move(g), PartitionSpec::bichromatic(count, core.layers[0]),
                  family, kov_params(inst, k - 1), e, std::move(roles));
    }
    case Family::bi_ecc_kov: {
      Expectation e = expect(Measure::max_ecc_over_focus, le(kk), ge(3 * kk - 2),
                             sol.has_value());
      e.focus = core.layers[0];
      e.witness = witness;
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < k; ++i) {
        s.insert(s.end(), core.layers[i].begin(), core.layers[i].end());
      }
      Graph g(core.vertex_count, core.edges, false, false);
      return make(std::move(g), PartitionSpec::bichromatic(core.vertex_count, s),
                  family, kov_params(inst, 0), e, std::move(roles));
    }
    default:
      throw std::invalid_argument(std::string("not a k-OV family: ") + to_string(family));
  }
}

GeneratedInstance gen_lowerbound(Family family, const OVInstance& inst,
                                 GadgetParams params) {
  check_ov(inst);
  if (params.ell == 0) throw std::invalid_argument("ell must be at least 1");
  const Dist l = params.ell;
  const auto orth = find_orthogonal(inst);
  const auto hit = find_hitting(inst);
  const bool has_solution = uses_hs(family) ? hit.has_value() : orth.has_value();
  std::vector<std::pair<std::string, std::uint64_t>> info{
      {"n", inst.u.size()}, {"d", inst.d}};
  Builder b;

  switch (family) {
    case Family::ov_graph:
      return gen_ov_graph(inst);

    case Family::bi_rad_hs: {
      const OVCore core = ov_core(b, inst);
      const auto v2 = b.add_many(inst.v.size());
      for (std::size_t i = 0; i < v2.size(); ++i) b.edge(core.v[i], v2[i]);
      Expectation e = expect(Measure::st_radius, ge(5), le(3), has_solution);
      if (hit) e.witness = std::pair{core.u[*hit], core.u[*hit]};
      const std::size_t n = b.size();
      return make(b.build(false), PartitionSpec::bichromatic(n, core.u), family, info, e,
                  {{"U", core.u}, {"C", core.c}, {"V1", core.v}, {"V2", v2}});
    }

    case Family::dir_bi_diam: {
      if (params.ell < 2) throw std::invalid_argument("DIR_BI_DIAM needs ell >= 2");
      const OVCore core = ov_core(b, inst);
      std::vector<std::vector<Vertex>> copies{core.v};
      for (std::size_t i = 2; i <= params.ell; ++i) {
        copies.push_back(b.add_many(inst.v.size()));
        for (std::size_t j = 0; j < inst.v.size(); ++j) {
          b.edge(copies[i - 2][j], copies[i - 1][j]);
        }
      }
      const auto p = b.add_many(params.ell - 2);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) b.edge(p[i], p[i + 1]);
      for (Vertex c : core.c) {
        if (p.empty()) {
          // ell = 2: the return path C -> U is a single arc.
          for (Vertex u : core.u) b.edge(c, u);
        } else {
          b.edge(c, p.front());
        }
      }
      if (!p.empty()) {
        for (Vertex u : core.u) b.edge(p.back(), u);
      }
      info.push_back({"ell", params.ell});
      Expectation e = expect(Measure::st_diameter, le(l + 1), ge(2 * l + 1), has_solution);
      if (orth) e.witness = std::pair{core.u[orth->first], copies.back()[orth->second]};
      std::vector<Role> roles{{"U", core.u}, {"C", core.c}, {"P", p}};
      for (std::size_t i = 0; i < copies.size(); ++i) {
        roles.push_back({"V" + std::to_string(i + 1), copies[i]});
      }
      const std::size_t n = b.size();
      return make(b.build(true), PartitionSpec::bichromatic(n, core.u), family, info, e,
                  std::move(roles));
    }

    case Family::dir_bi_ecc: {
      const OVCore core = ov_core(b, inst);
      Expectation e = expect(Measure::max_ecc_over_focus, eq(2), eq(kUnreachable),
                             has_solution);
      e.focus = core.u;
      const std::size_t n = b.size();
      return make(b.build(true), PartitionSpec::bichromatic(n, concat({&core.u, &core.c})),
                  family, info, e, {{"U", core.u}, {"C", core.c}, {"V", core.v}});
    }

    case Family::dir_bi_rad: {
      const OVCore core = ov_core(b, inst);
      const Vertex z = b.add();
      for (Vertex u : core.u) b.edge(u, z);
      Expectation e = expect(Measure::st_radius, eq(kUnreachable), eq(2), has_solution);
      if (hit) e.witness = std::pair{core.u[*hit], core.u[*hit]};
      const std::size_t n = b.size();
      return make(b.build(true), PartitionSpec::bichromatic(n, concat({&core.u, &core.c})),
                  family, info, e,
                  {{"U", core.u}, {"C", core.c}, {"V", core.v}, {"z", {z}}});
    }

    case Family::dir_st_diam: {
      const OVCore core = ov_core(b, inst);
      Expectation e = expect(Measure::st_diameter, eq(2), eq(kUnreachable), has_solution);
      if (orth) e.witness = std::pair{core.u[orth->first], core.v[orth->second]};
      const std::size_t n = b.size();
      return make(b.build(true), PartitionSpec::st(n, core.u, core.v), family, info, e,
                  {{"U", core.u}, {"C", core.c}, {"V", core.v}});
    }

    case Family::st_rad_hs: {
      const OVCore core = ov_core(b, inst);
      Expectation e = expect(Measure::st_radius, ge(4), eq(2), has_solution);
      if (hit) e.witness = std::pair{core.u[*hit], core.u[*hit]};
      const std::size_t n = b.size();
      return make(b.build(false), PartitionSpec::st(n, core.u, core.v), family, info, e,
                  {{"U", core.u}, {"C", core.c}, {"V", core.v}});
    }

    case Family::subset_diam: {
      const OVCore core = ov_core(b, inst);
      const Vertex hu = b.add();
      const Vertex hv = b.add();
      for (Vertex u : core.u) b.edge(hu, u);
      for (Vertex v : core.v) b.edge(hv, v);
      Expectation e = expect(Measure::st_diameter, eq(2), eq(4), has_solution);
      if (orth) e.witness = std::pair{core.u[orth->first], core.v[orth->second]};
      const std::size_t n = b.size();
      return make(b.build(false), PartitionSpec::subset(n, concat({&core.u, &core.v})),
                  family, info, e,
                  {{"U", core.u}, {"C", core.c}, {"V", core.v}, {"hub_u", {hu}},
                   {"hub_v", {hv}}});
    }

    case Family::subset_rad: {
      const OVCore core = ov_core(b, inst);
      const Vertex hu = b.add();
      const Vertex hv = b.add();
      for (Vertex u : core.u) b.edge(hu, u);
      b.edge(hu, hv);
      Expectation e = expect(Measure::st_radius, ge(4), eq(2), has_solution);
      if (hit) e.witness = std::pair{core.u[*hit], core.u[*hit]};
      std::vector<Vertex> extra{hv};
      const std::size_t n = b.size();
      return make(b.build(false),
                  PartitionSpec::subset(n, concat({&core.u, &core.v, &extra})), family,
                  info, e,
                  {{"U", core.u}, {"C", core.c}, {"V", core.v}, {"hub_u", {hu}},
                   {"leaf", {hv}}});
    }

    case Family::param_diam:
    case Family::param_dir_diam: {
      const bool split_c = family == Family::param_dir_diam;
      const auto u = b.add_many(inst.u.size());
      const auto u2 = b.add_many(inst.u.size());
      const auto c1 = b.add_many(inst.d);
      const auto c2 = split_c ? b.add_many(inst.d) : c1;
      const auto v = b.add_many(inst.v.size());
      const auto v2 = b.add_many(inst.v.size());
      std::vector<Vertex> s = concat({&u, &u2});
      if (split_c) {
        s.insert(s.end(), c1.begin(), c1.end());
        for (std::size_t c = 0; c < inst.d; ++c) b.edge(c1[c], c2[c]);
      }
      auto add_s = [&s](const std::vector<Vertex>& xs) { s.insert(s.end(), xs.begin(), xs.end()); };
      for (std::size_t i = 0; i < u.size(); ++i) add_s(b.path(u[i], u2[i], params.ell));
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t c = 0; c < inst.d; ++c) {
          if (inst.u[i][c]) add_s(b.path(u[i], c1[c], params.ell));
        }
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t c = 0; c < inst.d; ++c) {
          if (inst.v[i][c]) b.path(c2[c], v[i], params.ell);
        }
      }
      for (std::size_t i = 0; i < v.size(); ++i) b.path(v[i], v2[i], params.ell);
      std::sort(s.begin(), s.end());
      info.push_back({"ell", params.ell});
      const Dist extra = split_c ? 1 : 0;
      Expectation e = expect(Measure::st_diameter, le(4 * l + extra), ge(6 * l + extra),
                             has_solution);
      if (orth) e.witness = std::pair{u2[orth->first], v2[orth->second]};
      std::vector<Role> roles{{"U", u}, {"U'", u2}, {"V", v}, {"V'", v2}};
      if (split_c) {
        roles.push_back({"C1", c1});
        roles.push_back({"C2", c2});
      } else {
        roles.push_back({"C", c1});
      }
      const std::size_t n = b.size();
      Graph g = split_c ? b.build_symmetric() : b.build(false);
      return make(std::move(g), PartitionSpec::bichromatic(n, s), family, info, e,
                  std::move(roles));
    }

    case Family::param_ecc: {
      const auto u = b.add_many(inst.u.size());
      const auto c = b.add_many(inst.d);
      const auto v = b.add_many(inst.v.size());
      const auto v2 = b.add_many(inst.v.size());
      std::vector<Vertex> s = concat({&u, &c});
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t x = 0; x < inst.d; ++x) {
          if (!inst.u[i][x]) continue;
          const auto inner = b.path(u[i], c[x], params.ell);
          s.insert(s.end(), inner.begin(), inner.end());
        }
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t x = 0; x < inst.d; ++x) {
          if (inst.v[i][x]) b.path(c[x], v[i], params.ell);
        }
      }
      for (std::size_t i = 0; i < v.size(); ++i) b.path(v[i], v2[i], params.ell);
      std::sort(s.begin(), s.end());
      info.push_back({"ell", params.ell});
      Expectation e = expect(Measure::max_ecc_over_focus, le(3 * l), ge(5 * l), has_solution);
      e.focus = u;
      if (orth) e.witness = std::pair{u[orth->first], v2[orth->second]};
      const std::size_t n = b.size();
      return make(b.build(false), PartitionSpec::bichromatic(n, s), family, info, e,
                  {{"U", u}, {"C", c}, {"V", v}, {"V'", v2}});
    }

    case Family::param_rad: {
      const auto shared = b.add_many(inst.u.size());
      std::vector<Vertex> s = shared;
      std::vector<Role> roles{{"U'", shared}};
      std::vector<Vertex> first_u;
      for (int copy = 1; copy <= 2; ++copy) {
        const auto u = b.add_many(inst.u.size());
        const auto c = b.add_many(inst.d);
        const auto v = b.add_many(inst.v.size());
        const auto v2 = b.add_many(inst.v.size());
        if (copy == 1) first_u = u;
        s.insert(s.end(), u.begin(), u.end());
        for (std::size_t i = 0; i < u.size(); ++i) {
          const auto inner = b.path(u[i], shared[i], params.ell);
          s.insert(s.end(), inner.begin(), inner.end());
        }
        for (std::size_t i = 0; i < u.size(); ++i) {
          for (std::size_t x = 0; x < inst.d; ++x) {
            if (!inst.u[i][x]) continue;
            const auto inner = b.path(u[i], c[x], params.ell);
            s.insert(s.end(), inner.begin(), inner.end());
          }
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t x = 0; x < inst.d; ++x) {
            if (inst.v[i][x]) b.path(c[x], v[i], params.ell);
          }
        }
        for (std::size_t i = 0; i < v.size(); ++i) b.path(v[i], v2[i], params.ell);
        const std::string tag = std::to_string(copy);
        roles.push_back({"U" + tag, u});
        roles.push_back({"C" + tag, c});
        roles.push_back({"V" + tag, v});
        roles.push_back({"V'" + tag, v2});
      }
      std::sort(s.begin(), s.end());
      info.push_back({"ell", params.ell});
      Expectation e = expect(Measure::st_radius, ge(6 * l), le(4 * l), has_solution);
      if (hit) e.witness = std::pair{shared[*hit], shared[*hit]};
      const std::size_t n = b.size();
      return make(b.build(false), PartitionSpec::bichromatic(n, s), family, info, e,
                  std::move(roles));
    }

    default:
      throw std::invalid_argument(std::string("not an OV or HS family: ") +
                                  to_string(family));
  }
}

GeneratedInstance gen_gadget(const GadgetSpec& spec) {
  const GadgetParams params{spec.k, spec.ell};
  GeneratedInstance out = [&] {
    if (uses_kov(spec.family)) {
      return gen_lowerbound(spec.family,
                            random_kov(spec.k, spec.n, spec.d, spec.solution, spec.seed),
                            params);
    }
    const OVInstance inst = uses_hs(spec.family)
                                ? random_hs(spec.n, spec.d, spec.solution, spec.seed)
                                : random_ov(spec.n, spec.d, spec.solution, spec.seed);
    return gen_lowerbound(spec.family, inst, params);
  }();
  out.params.push_back({"seed", spec.seed});
  return out;
}

GeneratedInstance gen_random_partitioned(std::size_t n, std::size_t m,
                                         Weight weight_max, bool directed,
                                         PartitionMode mode, double split,
                                         std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (!(split > 0.0 && split < 1.0)) {
    throw std::invalid_argument("split fraction must lie in (0, 1)");
  }
  if (weight_max == 0) throw std::invalid_argument("weight_max must be >= 1");
  const std::uint64_t nn = n;
  const std::uint64_t max_edges = directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
  const std::size_t backbone = directed ? n : n - 1;
  if (m < backbone || m > max_edges) {
    throw std::invalid_argument("infeasible (n, m) combination");
  }
  const SampleConfig cfg{seed};
  auto rng = cfg.derive("graph").engine();

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::unordered_set<std::uint64_t> used;
  std::vector<Edge> edges;
  auto key = [&](Vertex u, Vertex v) {
    if (!directed && u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * nn + v;
  };
  auto add = [&](Vertex u, Vertex v) {
    if (u == v || !used.insert(key(u, v)).second) return false;
    edges.push_back({u, v, 1});
    return true;
  };
  for (std::size_t i = 1; i < n; ++i) {
    if (directed) {
      add(perm[i - 1], perm[i]);
    } else {
      add(perm[pick(rng, i)], perm[i]);
    }
  }
  if (directed) add(perm[n - 1], perm[0]);

  const std::uint64_t extra = m - edges.size();
  if (extra * 2 <= max_edges - edges.size()) {
    while (edges.size() < m) {
      add(static_cast<Vertex>(pick(rng, n)), static_cast<Vertex>(pick(rng, n)));
    }
  } else {
    std::vector<std::pair<Vertex, Vertex>> free;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
        if (u != v && !used.count(key(u, v))) free.push_back({u, v});
      }
    }
    std::shuffle(free.begin(), free.end(), rng);
    for (std::size_t i = 0; edges.size() < m; ++i) add(free[i].first, free[i].second);
  }
  std::uniform_int_distribution<Weight> weight(1, weight_max);
  for (Edge& e : edges) e.w = weight(rng);

  auto clamp_size = [n](double x) {
    const auto s = static_cast<std::size_t>(std::ceil(x * static_cast<double>(n)));
    return std::clamp<std::size_t>(s, 1, n - 1);
  };
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  const auto s = sample_vertices(all, clamp_size(split), cfg.derive("S"));
  auto part = [&]() -> PartitionSpec {
    switch (mode) {
      case PartitionMode::bichromatic:
        return PartitionSpec::bichromatic(n, s);
      case PartitionMode::st:
        return PartitionSpec::st(n, s,
                                 sample_vertices(all, clamp_size(1.0 - split),
                                                 cfg.derive("T")));
      case PartitionMode::subset:
        return PartitionSpec::subset(n, s);
    }
    throw std::invalid_argument("bad mode");
  }();
  Graph g(n, std::move(edges), directed, weight_max > 1);
  return GeneratedInstance{std::move(g),
                           std::move(part),
                           Family::random,
                           {{"n", n},
                            {"m", m},
                            {"weight_max", weight_max},
                            {"directed", directed ? 1u : 0u},
                            {"seed", seed}},
                           std::nullopt,
                           {}};
}

}  // namespace stdiam
