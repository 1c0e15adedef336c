#include "doctest.h"
#include "stdiam/subset.hpp"
#include "support.hpp"

using namespace stdiam;
using test::path_graph;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, Vertex((v + 1) % n), 1});
  return Graph(n, std::move(edges), true, false);
}

std::vector<test::CorpusItem> corpus(bool directed, std::uint64_t seed) {
  test::CorpusSpec spec;
  spec.count = 40;
  spec.max_n = 60;
  spec.max_m = 400;
  spec.weight_max = 8;
  spec.directed = directed;
  spec.mode = PartitionMode::subset;
  spec.seed = seed;
  return test::random_corpus(spec);
}

void check_property(const std::string& name, bool directed) {
  const auto items = corpus(directed, 300 + directed);
  std::vector<test::Truth> truths;
  for (const auto& item : items) truths.push_back(test::truth_pairwise(item.graph, item.partition));
  const auto res =
      test::check_suite(*find_algorithm(name), name, items, truths, {1, 2, 3, 4, 5}, {});
  INFO(res.first_failure);
  CHECK(res.violations == 0);
}

}  // namespace

TEST_CASE("subset diameter") {
  const auto p = PartitionSpec::subset(4, {0, 2});
  const auto e = subset_diam_directed(cycle(4), p);
  CHECK(e.value == 2);
  CHECK(e.searches == 2);
  CHECK(subset_diam_directed(cycle(4), PartitionSpec::subset(4, {1})).value == 0);
}

TEST_CASE("undirected subset radius") {
  CHECK(subset_radius_undirected(path_graph(6), PartitionSpec::subset(6, {0, 3})).value == 3);
  CHECK(subset_radius_undirected(path_graph(6), PartitionSpec::subset(6, {4})).value == 0);
}

TEST_CASE("directed subset eccentricities") {
  const Graph two(2, {{0, 1, 1}, {1, 0, 1}}, true, false);
  const auto all2 = PartitionSpec::subset(2, {0, 1});
  CHECK(subset_ecc_directed(two, all2, Rational(1, 2), {}).values == std::vector<Dist>{1, 1});
  CHECK(subset_radius_directed(two, all2, Rational(1, 2), {}).value == 1);

  const auto all4 = PartitionSpec::subset(4, {0, 1, 2, 3});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto e = subset_ecc_directed(cycle(4), all4, Rational(1, 10), {seed, 2.0});
    for (Dist v : e.values) CHECK((v >= 2 && v <= 3));
    const Dist r = subset_radius_directed(cycle(4), all4, Rational(1, 10), {seed, 2.0}).value;
    CHECK((r >= 3 && r <= 6));
  }
}

TEST_CASE("tau outside (0, 1) is rejected") {
  const auto all4 = PartitionSpec::subset(4, {0, 1, 2, 3});
  CHECK_THROWS_AS(subset_ecc_directed(cycle(4), all4, Rational(0), {}), std::invalid_argument);
  CHECK_THROWS_AS(subset_ecc_directed(cycle(4), all4, Rational(1), {}), std::invalid_argument);
}

TEST_CASE("vertices that cannot reach all of S are unreachable") {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}}, true, false);
  const auto all = PartitionSpec::subset(3, {0, 1, 2});
  const auto e = subset_ecc_directed(g, all, Rational(1, 10), {});
  CHECK(e.values == std::vector<Dist>{2, kUnreachable, kUnreachable});
}

TEST_CASE("property: phase loop respects its cap and only shrinks") {
  const auto items = corpus(true, 41);
  for (const auto& item : items) {
    for (Rational tau : {Rational(1, 10), Rational(1, 2)}) {
      const auto e = subset_ecc_directed(item.graph, item.partition, tau, {7, 2.0});
      const auto truth = test::truth_pairwise(item.graph, item.partition);
      for (std::size_t i = 0; i < truth.ecc.size(); ++i) {
        CHECK(e.values[i] <= truth.ecc[i]);
        // (1 - tau)/2 * e <= e', cleared of denominators.
        if (truth.ecc[i] != kUnreachable) {
          CHECK(2 * tau.den() * std::int64_t(e.values[i]) >=
                (tau.den() - tau.num()) * std::int64_t(truth.ecc[i]));
        }
      }
      const Dist d0 = item.graph.vertex_count() * std::max<Dist>(1, item.graph.max_weight()) + 1;
      const std::size_t cap = subset_phase_cap(item.graph.vertex_count(), d0, tau);
      std::size_t prev_u = SIZE_MAX;
      Dist prev_d = kUnreachable;
      std::size_t phases = 0;
      for (std::size_t k = 1;; ++k) {
        const auto u = e.trace.find("phase" + std::to_string(k) + ".U");
        const auto d = e.trace.find("phase" + std::to_string(k) + ".D");
        if (!u || !d) break;
        CHECK((*u < prev_u || *d < prev_d));
        prev_u = *u;
        prev_d = *d;
        ++phases;
      }
      CHECK(phases <= cap);
    }
  }
}

TEST_CASE("property: theorem intervals on random subset instances") {
  check_property("subset-diam-dir", true);
  check_property("subset-diam-dir", false);
  check_property("subset-radius", false);
  check_property("subset-ecc-dir", true);
  check_property("subset-radius-dir", true);
}
