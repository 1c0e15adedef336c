#include <algorithm>

#include "doctest.h"
#include "stdiam/st.hpp"
#include "support.hpp"

using namespace stdiam;
using test::path_graph;

namespace {

std::vector<test::CorpusItem> corpus(Weight wmax, PartitionMode mode, std::uint64_t seed) {
  test::CorpusSpec spec;
  spec.count = 40;
  spec.max_n = 60;
  spec.max_m = 400;
  spec.weight_max = wmax;
  spec.mode = mode;
  spec.seed = seed;
  return test::random_corpus(spec);
}

void check_property(const std::string& name, const std::string& key, Weight wmax,
                    RunOptions opts = {}) {
  const auto items = corpus(wmax, PartitionMode::st, 200 + wmax);
  std::vector<test::Truth> truths;
  for (const auto& item : items) truths.push_back(test::truth_pairwise(item.graph, item.partition));
  const auto res = test::check_suite(*find_algorithm(name), key, items, truths,
                                     {1, 2, 3, 4, 5}, opts);
  INFO(res.first_failure);
  CHECK(res.violations == 0);
}

}  // namespace

TEST_CASE("st eccentricities on P6") {
  const auto p = PartitionSpec::st(6, {0, 1, 2}, {3, 4, 5});
  const auto lin = st_ecc_linear(path_graph(6), p);
  CHECK(lin.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(lin.values == std::vector<Dist>{5, 4, 3});
  CHECK(lin.searches == 2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = st_ecc_sqrtn(path_graph(6), p, {seed, 2.0});
    const auto b = st_ecc_m32(path_graph(6), p, {seed, 2.0});
    const std::vector<Dist> truth{5, 4, 3};
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(a.values[i] <= truth[i]);
      CHECK(b.values[i] <= truth[i]);
      CHECK(2 * b.values[i] >= truth[i]);
    }
  }
}

TEST_CASE("singleton T is exact") {
  const Graph g = path_graph(6);
  const auto p = PartitionSpec::st(6, {0, 2, 5}, {3});
  CHECK(st_ecc_linear(g, p).values == std::vector<Dist>{3, 1, 2});
  CHECK(st_ecc_sqrtn(g, p, {}).values == std::vector<Dist>{3, 1, 2});
}

TEST_CASE("T adjacent to all of S") {
  const Graph g(4, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}}, false, false);
  const auto p = PartitionSpec::st(4, {0, 1, 2}, {3});
  CHECK(st_ecc_sqrtn(g, p, {}).values == std::vector<Dist>{1, 1, 1});
}

TEST_CASE("weighted star with T the leaves") {
  const Graph g(4, {{0, 1, 2}, {0, 2, 9}, {0, 3, 4}}, false, true);
  const auto p = PartitionSpec::st(4, {0}, {1, 2, 3});
  CHECK(st_ecc_m32(g, p, {}).values == std::vector<Dist>{9});
}

TEST_CASE("st radius") {
  const Graph g(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, false, false);
  const auto star = PartitionSpec::st(4, {0}, {1, 2, 3});
  CHECK(st_radius_from_ecc(g, star, Tier::linear, {}).value == 1);

  const auto p = PartitionSpec::st(6, {0, 1, 2}, {3, 4, 5});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = st_radius_from_ecc(path_graph(6), p, Tier::m32, {seed, 2.0});
    CHECK((r.value >= 3 && r.value <= 6));
    REQUIRE(r.witness);
    CHECK(r.value == 5 - *r.witness);
  }
}

TEST_CASE("st mode accepts overlapping S and T") {
  const Graph g = path_graph(5);
  const auto p = PartitionSpec::st(5, {0, 1, 2}, {2, 3});
  const auto truth = test::truth_pairwise(g, p);
  CHECK(st_ecc_linear(g, p).values == truth.ecc);
}

TEST_CASE("property: every estimate is a realized distance") {
  const auto items = corpus(7, PartitionMode::st, 31);
  for (const auto& item : items) {
    const auto truth = test::truth_pairwise(item.graph, item.partition);
    for (Tier tier : {Tier::linear, Tier::m32}) {
      const auto e = st_ecc(item.graph, item.partition, tier, {3, 2.0});
      for (std::size_t i = 0; i < truth.ecc.size(); ++i) CHECK(e.values[i] <= truth.ecc[i]);
      const auto r = st_radius_from_ecc(item.graph, item.partition, tier, {3, 2.0});
      REQUIRE(r.witness);
      const auto& s = item.partition.s();
      const auto at = std::lower_bound(s.begin(), s.end(), *r.witness) - s.begin();
      CHECK(truth.ecc[at] == r.value);
    }
  }
}

TEST_CASE("property: theorem intervals on random ST instances") {
  check_property("st-ecc-linear", "st-ecc-linear", 9);
  check_property("st-ecc-sqrtn", "st-ecc-sqrtn", 1);
  check_property("st-ecc-m32", "st-ecc-m32", 9);
  for (Tier tier : {Tier::linear, Tier::sqrtn, Tier::m32}) {
    RunOptions opts;
    opts.tier = tier;
    check_property("st-radius", std::string("st-radius/") + to_string(tier),
                   tier == Tier::sqrtn ? 1 : 9, opts);
  }
}
