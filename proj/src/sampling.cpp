#include "stdiam/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stdiam {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a; only needs to separate tags, not resist adversaries.
std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Partial Fisher-Yates over index positions.
std::vector<std::size_t> pick_indices(std::size_t pool, std::size_t count,
                                      const SampleConfig& cfg) {
  count = std::min(count, pool);
  std::vector<std::size_t> idx(pool);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto rng = cfg.engine();
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

SampleConfig SampleConfig::derive(std::string_view tag) const {
  std::uint64_t state = seed ^ hash_tag(tag);
  SampleConfig out = *this;
  out.seed = splitmix64(state);
  return out;
}

std::mt19937_64 SampleConfig::engine() const {
  std::uint64_t state = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state))};
  return std::mt19937_64(seq);
}

std::size_t sample_size(const SampleConfig& cfg, std::size_t pool,
                        double scale, std::size_t n) {
  const double logn = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  const double raw = std::ceil(cfg.constant_c * std::sqrt(scale) * logn);
  if (!(raw < static_cast<double>(pool))) return pool;
  return raw < 0 ? 0 : static_cast<std::size_t>(raw);
}

std::vector<Vertex> sample_vertices(std::span<const Vertex> pool,
                                    std::size_t count,
                                    const SampleConfig& cfg) {
  std::vector<Vertex> out;
  for (std::size_t i : pick_indices(pool.size(), count, cfg)) {
    out.push_back(pool[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> filtered_edges(const Graph& g, const PartitionSpec* p,
                                 EdgeFilter filter) {
  if (filter == EdgeFilter::all) {
    return {g.edges().begin(), g.edges().end()};
  }
  if (p == nullptr) throw std::invalid_argument("crossing filter needs sets");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (p->in_s(e.u) && p->in_t(e.v)) {
      out.push_back(e);
    } else if (!g.directed() && p->in_s(e.v) && p->in_t(e.u)) {
      out.push_back({e.v, e.u, e.w});
    }
  }
  return out;
}

std::vector<Edge> sample_edges(const Graph& g, const PartitionSpec* p,
                               EdgeFilter filter, std::size_t count,
                               const SampleConfig& cfg) {
  auto pool = filtered_edges(g, p, filter);
  if (pool.empty() && count > 0) {
    throw EmptyPoolError("edge filter selects no edges");
  }
  std::vector<Edge> out;
  for (std::size_t i : pick_indices(pool.size(), count, cfg)) {
    out.push_back(pool[i]);
  }
  return out;
}

std::vector<Vertex> closest_k(const DistanceArray& dist,
                              std::span<const Vertex> pool, std::size_t k) {
  std::vector<Vertex> order(pool.begin(), pool.end());
  k = std::min(k, order.size());
  auto less = [&dist](Vertex a, Vertex b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), less);
  order.resize(k);
  return order;
}

}  // namespace stdiam
