#include "stdiam/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace stdiam {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<Vertex, Arc>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<Arc>& out) {
  offsets.assign(n + 1, 0);
  for (const auto& [from, arc] : arcs) ++offsets[from + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  out.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [from, arc] : arcs) out[cursor[from]++] = arc;
  // Stable neighbor order keeps every tie-break independent of input order.
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              out.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Arc& a, const Arc& b) {
                return a.target != b.target ? a.target < b.target
                                            : a.weight < b.weight;
              });
  }
}

std::vector<Vertex> normalize(std::size_t n, std::vector<Vertex> set,
                              const char* name) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!set.empty() && set.back() >= n) {
    throw std::invalid_argument(std::string(name) + " contains vertex " +
                                std::to_string(set.back()) +
                                " out of range");
  }
  return set;
}

template <bool Reverse>
DistanceArray search(const Graph& g, std::span<const Vertex> sources) {
  const std::size_t n = g.vertex_count();
  if (sources.empty()) throw std::invalid_argument("empty source set");
  DistanceArray result;
  result.sources.assign(sources.begin(), sources.end());
  result.dist.assign(n, kUnreachable);
  for (Vertex s : sources) {
    if (s >= n) {
      throw std::out_of_range("source " + std::to_string(s) + " out of range");
    }
    result.dist[s] = 0;
  }
  auto arcs = [&g](Vertex v) {
    if constexpr (Reverse) {
      return g.in_arcs(v);
    } else {
      return g.out_arcs(v);
    }
  };
  auto& dist = result.dist;

  if (!g.weighted()) {
    // 32-bit levels halve the randomly accessed state; widened at the end.
    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> level(n, kNone);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s : sources) {
      if (level[s] == kNone) {
        level[s] = 0;
        queue.push_back(s);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const std::uint32_t next = level[u] + 1;
      for (Vertex t : g.targets(u, Reverse)) {
        if (level[t] == kNone) {
          level[t] = next;
          queue.push_back(t);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (level[v] != kNone) dist[v] = level[v];
    }
    return result;
  }

  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Vertex s : sources) heap.emplace(0, s);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (const Arc& a : arcs(u)) {
      const Dist nd = d + a.weight;
      if (nd < dist[a.target]) {
        dist[a.target] = nd;
        heap.emplace(nd, a.target);
      }
    }
  }
  return result;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed,
             bool weighted)
    : vertex_count_(vertex_count),
      directed_(directed),
      weighted_(weighted),
      edges_(std::move(edges)) {
  if (vertex_count_ > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("too many vertices");
  }
  std::vector<std::pair<Vertex, Arc>> out;
  std::vector<std::pair<Vertex, Arc>> in;
  out.reserve(directed_ ? edges_.size() : 2 * edges_.size());
  if (directed_) in.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!weighted_ && e.w != 1) {
      throw std::invalid_argument("unweighted graph with weight != 1");
    }
    max_weight_ = std::max(max_weight_, e.w);
    out.emplace_back(e.u, Arc{e.v, e.w});
    if (directed_) {
      in.emplace_back(e.v, Arc{e.u, e.w});
    } else {
      out.emplace_back(e.v, Arc{e.u, e.w});
    }
  }
  build_csr(vertex_count_, out, out_offsets_, out_);
  if (directed_) build_csr(vertex_count_, in, in_offsets_, in_);
  if (!weighted_) {
    auto ids = [](const std::vector<Arc>& arcs) {
      std::vector<Vertex> out(arcs.size());
      for (std::size_t i = 0; i < arcs.size(); ++i) out[i] = arcs[i].target;
      return out;
    };
    out_targets_ = ids(out_);
    in_targets_ = ids(in_);
  }
}

const char* to_string(PartitionMode mode) noexcept {
  switch (mode) {
    case PartitionMode::bichromatic:
      return "bichromatic";
    case PartitionMode::st:
      return "st";
    case PartitionMode::subset:
      return "subset";
  }
  return "?";
}

PartitionSpec::PartitionSpec(PartitionMode mode, std::size_t vertex_count,
                             std::vector<Vertex> s, std::vector<Vertex> t)
    : mode_(mode),
      s_(std::move(s)),
      t_(std::move(t)),
      in_s_(vertex_count, 0),
      in_t_(vertex_count, 0) {
  if (s_.empty()) throw std::invalid_argument("S is empty");
  if (t_.empty()) throw std::invalid_argument("T is empty");
  for (Vertex v : s_) in_s_[v] = 1;
  for (Vertex v : t_) in_t_[v] = 1;
}

PartitionSpec PartitionSpec::bichromatic(std::size_t vertex_count,
                                         std::vector<Vertex> s) {
  s = normalize(vertex_count, std::move(s), "S");
  std::vector<Vertex> t;
  std::size_t i = 0;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (i < s.size() && s[i] == v) {
      ++i;
    } else {
      t.push_back(v);
    }
  }
  return PartitionSpec(PartitionMode::bichromatic, vertex_count, std::move(s),
                       std::move(t));
}

PartitionSpec PartitionSpec::st(std::size_t vertex_count, std::vector<Vertex> s,
                                std::vector<Vertex> t) {
  s = normalize(vertex_count, std::move(s), "S");
  t = normalize(vertex_count, std::move(t), "T");
  return PartitionSpec(PartitionMode::st, vertex_count, std::move(s),
                       std::move(t));
}

PartitionSpec PartitionSpec::subset(std::size_t vertex_count,
                                    std::vector<Vertex> s) {
  s = normalize(vertex_count, std::move(s), "S");
  auto t = s;
  return PartitionSpec(PartitionMode::subset, vertex_count, std::move(s),
                       std::move(t));
}

PartitionSpec PartitionSpec::as_st() const {
  PartitionSpec copy = *this;
  copy.mode_ = PartitionMode::st;
  return copy;
}

DistanceArray sssp(const Graph& g, Vertex source) {
  return search<false>(g, std::span<const Vertex>(&source, 1));
}

DistanceArray sssp_reverse(const Graph& g, Vertex target) {
  return search<true>(g, std::span<const Vertex>(&target, 1));
}

DistanceArray multi_source_sssp(const Graph& g,
                                std::span<const Vertex> sources) {
  return search<false>(g, sources);
}

DistanceArray multi_source_sssp_reverse(const Graph& g,
                                        std::span<const Vertex> targets) {
  return search<true>(g, targets);
}

std::vector<std::uint32_t> weak_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(n, kNone);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != kNone) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (auto arcs : {g.out_arcs(u), g.in_arcs(u)}) {
        for (const Arc& a : arcs) {
          if (comp[a.target] == kNone) {
            comp[a.target] = next;
            stack.push_back(a.target);
          }
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::uint32_t> strong_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kNone);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> comp(n, kNone);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  // (vertex, next arc position) frames replace recursion.
  std::vector<std::pair<Vertex, std::size_t>> frames;
  std::uint32_t counter = 0;
  std::uint32_t next_comp = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      const auto arcs = g.out_arcs(u);
      if (pos < arcs.size()) {
        const Vertex w = arcs[pos++].target;
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      const Vertex done = u;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != done);
        ++next_comp;
      }
    }
  }
  return comp;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr auto kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.vertex_count(), kNone);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNone && local[e.v] != kNone) {
      edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  return Graph(keep.size(), std::move(edges), g.directed(), g.weighted());
}

}  // namespace stdiam
