// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 when any
// criterion fails. Indented lines carry per-check detail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "stdiam/bichromatic.hpp"
#include "stdiam/cli.hpp"
#include "stdiam/oracle.hpp"
#include "stdiam/parameterized.hpp"
#include "support.hpp"

using namespace stdiam;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

bool report(int number, const std::string& title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
  return pass;
}

void note(const std::string& line) {
  std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Corpus {
  std::vector<test::CorpusItem> items;
  std::vector<test::Truth> truths;
};

Corpus make_corpus(Weight wmax, bool directed, PartitionMode mode, std::uint64_t seed) {
  test::CorpusSpec spec;
  spec.count = 200;
  spec.max_n = 200;
  spec.max_m = 2000;
  spec.weight_max = wmax;
  spec.directed = directed;
  spec.mode = mode;
  spec.seed = seed;
  Corpus c;
  c.items = test::random_corpus(spec);
  for (const auto& item : c.items) c.truths.push_back(test::truth_oracle(item.graph, item.partition));
  return c;
}

const std::vector<std::uint64_t> kSeeds{1, 2, 3, 4, 5};

// ---------------------------------------------------------------------------

bool criterion_intervals() {
  const auto start = Clock::now();
  const Corpus bi_unw = make_corpus(1, false, PartitionMode::bichromatic, 1001);
  const Corpus bi_w = make_corpus(10, false, PartitionMode::bichromatic, 1002);
  const Corpus bi_dir = make_corpus(10, true, PartitionMode::bichromatic, 1003);
  const Corpus st_unw = make_corpus(1, false, PartitionMode::st, 1004);
  const Corpus st_w = make_corpus(10, false, PartitionMode::st, 1005);
  const Corpus sub_dir = make_corpus(10, true, PartitionMode::subset, 1006);
  const Corpus sub_und = make_corpus(10, false, PartitionMode::subset, 1007);

  struct Case {
    std::string algo;
    std::string key;
    const Corpus* corpus;
    Tier tier = Tier::m32;
  };
  const std::vector<Case> cases = {
      {"bi-diam-linear", "bi-diam-linear", &bi_w},
      {"bi-diam-sqrtn", "bi-diam-sqrtn", &bi_unw},
      {"bi-diam-m32", "bi-diam-m32", &bi_w},
      {"bi-radius-linear", "bi-radius-linear", &bi_w},
      {"bi-radius-sqrtn", "bi-radius-sqrtn", &bi_unw},
      {"bi-radius-m32", "bi-radius-m32", &bi_w},
      {"bi-diam-dir-m32", "bi-diam-dir-m32", &bi_dir},
      {"st-ecc-linear", "st-ecc-linear", &st_w},
      {"st-ecc-sqrtn", "st-ecc-sqrtn", &st_unw},
      {"st-ecc-m32", "st-ecc-m32", &st_w},
      {"st-radius", "st-radius/linear", &st_w, Tier::linear},
      {"st-radius", "st-radius/sqrtn", &st_unw, Tier::sqrtn},
      {"st-radius", "st-radius/m32", &st_w, Tier::m32},
      {"subset-diam-dir", "subset-diam-dir", &sub_dir},
      {"subset-radius", "subset-radius", &sub_und},
      {"subset-ecc-dir", "subset-ecc-dir", &sub_dir},
      {"subset-radius-dir", "subset-radius-dir", &sub_dir},
  };
  std::size_t runs = 0, violations = 0;
  for (const Case& c : cases) {
    RunOptions opts;
    opts.tier = c.tier;
    opts.tau = Rational(1, 10);
    const auto res = test::check_suite(*find_algorithm(c.algo), c.key, c.corpus->items,
                                       c.corpus->truths, kSeeds, opts);
    runs += res.runs;
    violations += res.violations;
    note(c.key + ": " + std::to_string(res.runs) + " runs, " +
         std::to_string(res.violations) + " violations" +
         (res.first_failure.empty() ? "" : "; first: " + res.first_failure));
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << runs << " runs, " << violations << " violations, " << secs << " s";
  return report(1, "approximation intervals on 200 instances x 5 seeds",
                violations == 0 && secs <= 600, detail.str());
}

// ---------------------------------------------------------------------------

bool criterion_parameterized() {
  const Corpus und = make_corpus(1, false, PartitionMode::bichromatic, 2001);
  const Corpus dir = make_corpus(1, true, PartitionMode::bichromatic, 2002);

  std::size_t runs = 0, violations = 0, over_budget = 0;
  auto run_all = [&](const std::vector<test::CorpusItem>& items,
                     const std::vector<test::Truth>& truths, bool directed,
                     const std::string& label) {
    for (const AlgoInfo& algo : registry()) {
      if (!algo.search_budget) continue;
      if ((algo.direction == DirectionRule::directed) != directed) continue;
      const auto res = test::check_suite(algo, std::string(algo.name), items, truths, {0}, {});
      std::size_t budget_misses = 0;
      for (const auto& item : items) {
        const Outcome out = algo.run(item.graph, item.partition, {});
        const std::size_t budget = *algo.search_budget(item.graph, item.partition);
        const bool ok = directed ? out.searches() == budget : out.searches() <= budget;
        if (!ok) ++budget_misses;
      }
      runs += res.runs;
      violations += res.violations;
      over_budget += budget_misses;
      note(label + " " + std::string(algo.name) + ": " + std::to_string(res.runs) +
           " runs, " + std::to_string(res.violations) + " violations, " +
           std::to_string(budget_misses) + " budget misses" +
           (res.first_failure.empty() ? "" : "; first: " + res.first_failure));
    }
  };
  run_all(und.items, und.truths, false, "random");
  run_all(dir.items, dir.truths, true, "random");

  std::vector<test::CorpusItem> gadgets_und, gadgets_dir;
  for (Family f : {Family::param_diam, Family::param_ecc, Family::param_rad,
                   Family::param_dir_diam}) {
    for (std::size_t ell : {1u, 2u}) {
      for (bool sol : {false, true}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          GeneratedInstance inst = gen_gadget({f, 4, 6, 2, ell, sol, seed});
          auto& bucket = inst.graph.directed() ? gadgets_dir : gadgets_und;
          bucket.push_back({std::move(inst.graph), std::move(inst.partition),
                            std::string(to_string(f)) + " ell=" + std::to_string(ell) +
                                " sol=" + std::to_string(sol) +
                                " seed=" + std::to_string(seed)});
        }
      }
    }
  }
  std::vector<test::Truth> tu, td;
  for (const auto& g : gadgets_und) tu.push_back(test::truth_oracle(g.graph, g.partition));
  for (const auto& g : gadgets_dir) td.push_back(test::truth_oracle(g.graph, g.partition));
  run_all(gadgets_und, tu, false, "gadgets");
  run_all(gadgets_dir, td, true, "gadgets");

  std::ostringstream detail;
  detail << runs << " runs, " << violations << " violations, " << over_budget
         << " search-budget misses";
  return report(2, "parameterized intervals and |B|-linear search budgets",
                violations == 0 && over_budget == 0, detail.str());
}

// ---------------------------------------------------------------------------

bool criterion_gadgets() {
  struct Gap {
    std::string label;
    Family family;
    std::size_t k;
    std::size_t ell;
    Bound no;
    Bound yes;
  };
  const Dist inf = kUnreachable;
  const std::vector<Gap> gaps = {
      {"OV graph: 2 vs >=4", Family::ov_graph, 2, 1, {Cmp::eq, 2}, {Cmp::ge, 4}},
      {"BI_DIAM_KOV k=2: <=3 vs >=5", Family::bi_diam_kov, 2, 1, {Cmp::le, 3}, {Cmp::ge, 5}},
      {"BI_RAD_HS: >=5 vs <=3", Family::bi_rad_hs, 2, 1, {Cmp::ge, 5}, {Cmp::le, 3}},
      {"DIR_BI_DIAM ell=2: <=3 vs >=5", Family::dir_bi_diam, 2, 2, {Cmp::le, 3}, {Cmp::ge, 5}},
      {"SUBSET_DIAM: 2 vs 4", Family::subset_diam, 2, 1, {Cmp::eq, 2}, {Cmp::eq, 4}},
      {"SUBSET_RAD: >=4 vs 2", Family::subset_rad, 2, 1, {Cmp::ge, 4}, {Cmp::eq, 2}},
      {"PARAM_DIAM ell=1: <=4 vs >=6", Family::param_diam, 2, 1, {Cmp::le, 4}, {Cmp::ge, 6}},
      {"PARAM_ECC ell=1: <=3 vs >=5", Family::param_ecc, 2, 1, {Cmp::le, 3}, {Cmp::ge, 5}},
      {"PARAM_RAD ell=1: >=6 vs <=4", Family::param_rad, 2, 1, {Cmp::ge, 6}, {Cmp::le, 4}},
      {"PARAM_DIR_DIAM ell=1: <=5 vs >=7", Family::param_dir_diam, 2, 1, {Cmp::le, 5},
       {Cmp::ge, 7}},
  };
  (void)inf;
  std::size_t checks = 0, misses = 0;
  for (const Gap& gap : gaps) {
    std::size_t local = 0;
    for (std::size_t n : {8u, 16u}) {
      for (std::size_t d : {4u, 6u, 8u}) {
        for (bool sol : {false, true}) {
          for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto inst = gen_gadget({gap.family, n, d, gap.k, gap.ell, sol, seed});
            const Dist got = test::measure_gadget(inst);
            ++checks;
            bool ok = (sol ? gap.yes : gap.no).holds(got);
            if (gap.family == Family::param_diam) {
              ok = ok && boundary(inst.graph, inst.partition).b.size() == d;
            }
            if (!ok) {
              ++local;
              if (local == 1) {
                note(gap.label + " miss: n=" + std::to_string(n) + " d=" + std::to_string(d) +
                     " sol=" + std::to_string(sol) + " seed=" + std::to_string(seed) +
                     " got=" + std::to_string(got));
              }
            }
          }
        }
      }
    }
    misses += local;
    note(gap.label + ": " + std::to_string(local) + " misses");
  }

  // k-OV graph at k = 3: every L0 x L3 distance is 3 without a solution, and
  // the witness pair is at distance >= 7 with one.
  std::size_t kov_local = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (bool sol : {false, true}) {
      const auto inst = gen_kov_graph(random_kov(3, 4, 4, sol, seed));
      ++checks;
      bool ok = true;
      if (!sol) {
        for (Vertex a : inst.role("L0")->vertices) {
          const auto dist = sssp(inst.graph, a);
          for (Vertex b : inst.role("L3")->vertices) ok = ok && dist[b] == 3;
        }
      } else {
        const auto [a, b] = *inst.expected->witness;
        ok = sssp(inst.graph, a)[b] >= 7;
      }
      if (!ok) ++kov_local;
    }
  }
  misses += kov_local;
  note("k-OV graph k=3: 3 vs >=7: " + std::to_string(kov_local) + " misses");

  return report(3, "gadget gaps by exact oracle (n <= 16 vectors, d <= 8)", misses == 0,
                std::to_string(checks) + " instances, " + std::to_string(misses) + " misses");
}

// ---------------------------------------------------------------------------

bool criterion_oracle() {
  std::size_t instances = 0, mismatches = 0;
  std::uint64_t seed = 4001;
  for (bool directed : {false, true}) {
    for (PartitionMode mode :
         {PartitionMode::bichromatic, PartitionMode::st, PartitionMode::subset}) {
      for (Weight wmax : {Weight(1), Weight(10)}) {
        test::CorpusSpec spec;
        spec.count = instances + 9 <= 100 ? 9 : 100 - instances;
        if (directed && mode == PartitionMode::subset && wmax == 10) spec.count = 100 - instances;
        spec.max_n = 30;
        spec.max_m = 150;
        spec.weight_max = wmax;
        spec.directed = directed;
        spec.mode = mode;
        spec.seed = seed++;
        for (const auto& item : test::random_corpus(spec)) {
          ++instances;
          const auto m = test::all_pairs(item.graph);
          const auto ecc = exact_st_ecc(item.graph, item.partition);
          const auto pw = test::pairwise_ecc(m, item.partition);
          bool ok = ecc.size() == pw.size();
          for (std::size_t i = 0; ok && i < ecc.size(); ++i) ok = ecc[i].value == pw[i];
          ok = ok && exact_diam(item.graph, item.partition).value ==
                         test::pairwise_diam(m, item.partition);
          ok = ok && exact_radius(item.graph, item.partition).value ==
                         test::pairwise_radius(m, item.partition);
          if (!ok) ++mismatches;
        }
      }
    }
  }
  return report(4, "exact oracle vs Floyd-Warshall on n <= 30", instances >= 100 && mismatches == 0,
                std::to_string(instances) + " instances, " + std::to_string(mismatches) +
                    " mismatches");
}

// ---------------------------------------------------------------------------

bool criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "stdiam-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto cli = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli_main(args, o, e);
    out = o.str();
    return code;
  };
  std::string sink;
  const std::vector<std::vector<std::string>> gens = {
      {"gen", "--n", "150", "--m", "500", "--seed", "1", "--out", (dir / "bu").string()},
      {"gen", "--n", "150", "--m", "500", "--weight-max", "8", "--seed", "2", "--out",
       (dir / "bw").string()},
      {"gen", "--n", "120", "--m", "500", "--directed", "--seed", "3", "--out",
       (dir / "du").string()},
      {"gen", "--n", "120", "--m", "500", "--mode", "st", "--seed", "4", "--out",
       (dir / "st").string()},
      {"gen", "--n", "120", "--m", "500", "--weight-max", "5", "--directed", "--mode", "subset",
       "--seed", "5", "--out", (dir / "sd").string()},
      {"gen", "--n", "120", "--m", "500", "--mode", "subset", "--seed", "6", "--out",
       (dir / "su").string()},
  };
  for (const auto& g : gens) {
    if (cli(g, sink) != kExitOk) return report(5, "determinism", false, "gen failed");
  }
  const std::regex elapsed("\"elapsed_ms\":[-0-9.e+]+");
  std::size_t compared = 0, differing = 0;
  for (const AlgoInfo& algo : registry()) {
    for (const char* inst : {"bu", "bw", "du", "st", "sd", "su"}) {
      const std::string base = (dir / inst).string();
      const std::vector<std::string> args{"run",    "--graph", base + ".graph", "--sets",
                                          base + ".sets", "--algo", std::string(algo.name),
                                          "--seed", "99"};
      std::string a, b;
      if (cli(args, a) != kExitOk) continue;
      cli(args, b);
      ++compared;
      if (std::regex_replace(a, elapsed, "") != std::regex_replace(b, elapsed, "")) {
        ++differing;
        note(std::string(algo.name) + " on " + inst + ": reports differ");
      }
    }
  }
  return report(5, "byte-identical run reports apart from elapsed_ms",
                compared >= registry().size() && differing == 0,
                std::to_string(compared) + " algorithm/instance pairs, " +
                    std::to_string(differing) + " differing");
}

// ---------------------------------------------------------------------------

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

bool criterion_scaling() {
  std::vector<double> xs, ys, searches;
  for (std::size_t m = 10000; m <= 160000; m *= 2) {
    const std::size_t n = m / 4;
    const auto inst =
        gen_random_partitioned(n, m, 1, false, PartitionMode::bichromatic, 0.5, m);
    double best = 1e300;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto start = Clock::now();
      const auto e = bi_diam_m32(inst.graph, inst.partition, SampleConfig{seed, 0.5});
      best = std::min(best, seconds_since(start));
      count = e.searches;
    }
    searches.push_back(std::log(static_cast<double>(count)));
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(best));
    std::ostringstream line;
    line << "m=" << m << " n=" << n << " searches=" << count << " best of 3: " << best << " s";
    note(line.str());
  }
  const double slope = loglog_slope(xs, ys);
  std::ostringstream detail;
  detail << "log-log slope " << slope << ", search-count slope " << loglog_slope(xs, searches)
         << ", constant_c 0.5";
  return report(6, "bi-diam-m32 wall time subquadratic in m", slope < 1.8, detail.str());
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {
      criterion_intervals, criterion_parameterized, criterion_gadgets,
      criterion_oracle,    criterion_determinism,   criterion_scaling,
  };
  bool all = true;
  for (const auto& c : criteria) all = c() && all;
  return all ? 0 : 1;
}
