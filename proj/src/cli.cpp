#include "stdiam/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stdiam/graph_io.hpp"
#include "stdiam/report.hpp"

namespace stdiam {

namespace {

/// Signals an exit code together with the message to print.
struct Failure {
  int code;
  std::string message;
};

struct Inputs {
  std::string graph;
  std::string sets;
};

struct AlgoFlags {
  std::string algo;
  std::uint64_t seed = 0;
  std::string tau = "0.1";
  double constant_c = 2.0;
  std::string tier = "m32";
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STDIAM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "STDIAM_SEED is not an unsigned integer"};
    }
  }
  return 0;
}

int mismatch_code(Mismatch m) {
  switch (m) {
    case Mismatch::mode: return kExitMode;
    case Mismatch::direction: return kExitDirection;
    case Mismatch::weight: return kExitWeight;
  }
  return kExitUsage;
}

std::pair<Graph, PartitionSpec> load_inputs(const Inputs& in) {
  try {
    Graph g = load_graph_file(in.graph);
    PartitionSpec p = load_partition_file(in.sets, g.vertex_count());
    return {std::move(g), std::move(p)};
  } catch (const ParseError& e) {
    throw Failure{kExitIo, std::string("parse error (") + to_string(e.kind()) +
                               "): " + e.what()};
  } catch (const std::ios_base::failure& e) {
    throw Failure{kExitIo, e.what()};
  }
}

const AlgoInfo& lookup(const std::string& name) {
  const AlgoInfo* algo = find_algorithm(name);
  if (!algo) throw Failure{kExitUsage, "unknown algorithm: " + name};
  return *algo;
}

RunOptions make_options(const AlgoFlags& f) {
  RunOptions o;
  o.sample.seed = f.seed;
  o.sample.constant_c = f.constant_c;
  try {
    o.tau = Rational::parse(f.tau);
    o.tier = parse_tier(f.tier);
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
  if (!(f.constant_c > 0)) throw Failure{kExitUsage, "--constant-c must be positive"};
  return o;
}

/// "side:factor:additive", e.g. "lower:1:0".
Guarantee parse_guarantee(const std::string& text) {
  std::istringstream in(text);
  std::string side, factor, additive;
  if (!std::getline(in, side, ':') || !std::getline(in, factor, ':') ||
      !std::getline(in, additive)) {
    throw Failure{kExitUsage, "--override-guarantee expects side:factor:additive"};
  }
  if (side != "lower" && side != "upper") {
    throw Failure{kExitUsage, "guarantee side must be lower or upper"};
  }
  try {
    return {side == "lower" ? Side::lower : Side::upper, Rational::parse(factor),
            Rational::parse(additive)};
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

struct Cell {
  Json report;
  bool pass = true;
};

/// One algorithm execution and its report. Oracle fields only when asked.
Cell run_cell(const AlgoInfo& algo, const Graph& g, const PartitionSpec& p,
              const RunOptions& opts, Json instance, bool with_oracle,
              const std::optional<Guarantee>& override_guarantee) {
  try {
    check_compatible(algo, g, p, opts);
  } catch (const PreconditionError& e) {
    throw Failure{mismatch_code(e.kind()), e.what()};
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = algo.run(g, p, opts);
  } catch (const PreconditionError& e) {
    throw Failure{mismatch_code(e.kind()), e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
  const auto stop = std::chrono::steady_clock::now();
  const Guarantee guarantee = override_guarantee.value_or(algo.guarantee(g, p, opts));

  Cell cell;
  Json& j = cell.report;
  j["algorithm"] = std::string(algo.name);
  j["instance"] = std::move(instance);
  j["graph"] = graph_summary_json(g, p);
  j["exact"] = false;
  j["seed"] = opts.sample.seed;
  j["rng"] = std::string(kRngName);
  j["constant_c"] = opts.sample.constant_c;
  if (algo.uses_tier) j["tier"] = to_string(opts.tier);
  if (algo.uses_tau) j["tau"] = opts.tau.str();
  j["guarantee"] = guarantee_json(guarantee);
  const Json body = outcome_json(outcome);
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (algo.search_budget) {
    j["search_budget"] = *algo.search_budget(g, p);
  }
  if (with_oracle) {
    const OracleCheck check = check_against_oracle(outcome, guarantee, g, p);
    j["oracle"] = oracle_json(check, outcome, guarantee);
    cell.pass = check.pass;
  }
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  return cell;
}

void add_algo_flags(CLI::App& cmd, Inputs& in, AlgoFlags& f) {
  cmd.add_option("--graph", in.graph, "Edge-list file")->required();
  cmd.add_option("--sets", in.sets, "Partition file")->required();
  cmd.add_option("--algo", f.algo, "Algorithm name")->required();
  cmd.add_option("--seed", f.seed, "Sampling seed (default $STDIAM_SEED or 0)");
  cmd.add_option("--tau", f.tau, "Subset eccentricity parameter, 0 < tau < 1");
  cmd.add_option("--constant-c", f.constant_c, "Sample-size constant");
  cmd.add_option("--tier", f.tier, "linear, sqrtn or m32");
}

Json file_instance(const Inputs& in) {
  return Json{{"graph", in.graph}, {"sets", in.sets}};
}

int do_run(const Inputs& in, const AlgoFlags& f, bool verify,
           const std::string& override_text, std::ostream& out) {
  const AlgoInfo& algo = lookup(f.algo);
  const RunOptions opts = make_options(f);
  std::optional<Guarantee> override_guarantee;
  if (!override_text.empty()) override_guarantee = parse_guarantee(override_text);
  auto [g, p] = load_inputs(in);
  Cell cell = run_cell(algo, g, p, opts, file_instance(in), verify, override_guarantee);
  out << cell.report.dump() << '\n';
  return cell.pass ? kExitOk : kExitViolation;
}

int do_oracle(const Inputs& in, const std::string& quantity, std::ostream& out) {
  Quantity q;
  if (quantity == "diameter") {
    q = Quantity::diameter;
  } else if (quantity == "radius") {
    q = Quantity::radius;
  } else if (quantity == "eccentricities") {
    q = Quantity::eccentricities;
  } else {
    throw Failure{kExitUsage, "unknown quantity: " + quantity};
  }
  auto [g, p] = load_inputs(in);
  const auto start = std::chrono::steady_clock::now();
  const auto ecc = exact_st_ecc(g, p);
  const auto stop = std::chrono::steady_clock::now();
  Json j;
  j["algorithm"] = "oracle";
  j["instance"] = file_instance(in);
  j["graph"] = graph_summary_json(g, p);
  j["exact"] = true;
  const Json body = exact_json(q, ecc);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["searches"] = p.s().size();
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
  out << j.dump() << '\n';
  return kExitOk;
}

PartitionMode parse_mode(const std::string& text) {
  if (text == "bichromatic") return PartitionMode::bichromatic;
  if (text == "st") return PartitionMode::st;
  if (text == "subset") return PartitionMode::subset;
  throw Failure{kExitUsage, "unknown mode: " + text};
}

struct GenFlags {
  std::string family = "RANDOM";
  std::size_t n = 50;
  std::size_t m = 200;
  std::size_t d = 4;
  std::size_t k = 2;
  std::size_t ell = 1;
  bool solution = false;
  Weight weight_max = 1;
  bool directed = false;
  std::string mode = "bichromatic";
  double split = 0.5;
  std::uint64_t seed = 0;
};

GeneratedInstance generate(const GenFlags& f) {
  try {
    const Family family = parse_family(f.family);
    if (family == Family::random) {
      return gen_random_partitioned(f.n, f.m, f.weight_max, f.directed, parse_mode(f.mode),
                                    f.split, f.seed);
    }
    return gen_gadget({family, f.n, f.d, f.k, f.ell, f.solution, f.seed});
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, e.what()};
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream file(path);
  if (!file) throw Failure{kExitIo, "cannot write " + path};
  file << body;
  if (!file) throw Failure{kExitIo, "cannot write " + path};
}

int do_gen(const GenFlags& f, const std::string& prefix, std::ostream& out) {
  const GeneratedInstance inst = generate(f);
  std::ostringstream graph, sets;
  write_graph(graph, inst.graph);
  write_partition(sets, inst.partition);
  write_file(prefix + ".graph", graph.str());
  write_file(prefix + ".sets", sets.str());
  const Json meta = instance_json(inst);
  write_file(prefix + ".json", meta.dump(2) + "\n");
  out << meta.dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

template <typename T>
T field(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Failure{kExitUsage, std::string("invalid config field: ") + key};
  }
}

std::pair<Graph, PartitionSpec> bench_instance(const Json& spec) {
  if (!spec.is_object()) throw Failure{kExitUsage, "instance spec must be an object"};
  if (spec.contains("graph")) {
    return load_inputs({field<std::string>(spec, "graph", ""),
                        field<std::string>(spec, "sets", "")});
  }
  const std::string kind = field<std::string>(spec, "generator", "");
  GenFlags f;
  f.n = field(spec, "n", f.n);
  f.seed = field(spec, "seed", f.seed);
  if (kind == "random") {
    f.m = field(spec, "m", f.m);
    f.weight_max = field(spec, "weight_max", f.weight_max);
    f.directed = field(spec, "directed", f.directed);
    f.mode = field(spec, "mode", f.mode);
    f.split = field(spec, "split", f.split);
  } else if (kind == "gadget") {
    f.family = field<std::string>(spec, "family", "");
    f.d = field(spec, "d", f.d);
    f.k = field(spec, "k", f.k);
    f.ell = field(spec, "ell", f.ell);
    f.solution = field(spec, "solution", f.solution);
  } else {
    throw Failure{kExitUsage, "instance needs graph/sets or generator random|gadget"};
  }
  GeneratedInstance inst = generate(f);
  return {std::move(inst.graph), std::move(inst.partition)};
}

int do_bench(const std::string& config_path, bool with_oracle, std::ostream& out) {
  std::ifstream file(config_path);
  if (!file) throw Failure{kExitIo, "cannot open " + config_path};
  Json config;
  try {
    config = Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Failure{kExitIo, std::string("config is not valid JSON: ") + e.what()};
  }
  if (!config.is_object()) throw Failure{kExitUsage, "config must be an object"};
  const Json instances = config.value("instances", Json::array());
  const auto algorithms = field(config, "algorithms", std::vector<std::string>{});
  const auto seeds = field(config, "seeds", std::vector<std::uint64_t>{});
  if (!instances.is_array()) throw Failure{kExitUsage, "instances must be an array"};
  AlgoFlags base;
  base.tau = field(config, "tau", base.tau);
  base.tier = field(config, "tier", base.tier);
  base.constant_c = field(config, "constant_c", base.constant_c);
  std::vector<const AlgoInfo*> algos;
  for (const auto& name : algorithms) algos.push_back(&lookup(name));
  make_options(base);

  bool all_pass = true;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto [g, p] = bench_instance(instances[i]);
    for (const AlgoInfo* algo : algos) {
      for (std::uint64_t seed : seeds) {
        AlgoFlags flags = base;
        flags.seed = seed;
        const RunOptions opts = make_options(flags);
        Json cell_id{{"instance", i}, {"algorithm", std::string(algo->name)},
                     {"seed", seed}};
        try {
          Cell cell = run_cell(*algo, g, p, opts, instances[i], with_oracle, std::nullopt);
          all_pass = all_pass && cell.pass;
          Json line{{"cell", cell_id}};
          for (auto& [key, value] : cell.report.items()) line[key] = value;
          out << line.dump() << '\n';
        } catch (const Failure& f) {
          if (f.code < kExitMode) throw;
          out << Json{{"cell", cell_id}, {"skipped", true}, {"reason", f.message}}.dump()
              << '\n';
        }
      }
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"ST-diameter, radius and eccentricity estimators"};
  app.require_subcommand(1);

  Inputs in;
  AlgoFlags flags;
  std::string override_text;
  std::string quantity = "diameter";
  GenFlags gen;
  std::string prefix;
  std::string config;
  bool with_oracle = false;

  try {
    flags.seed = default_seed();
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
  gen.seed = flags.seed;

  auto* run = app.add_subcommand("run", "Run one algorithm and print a JSON report");
  add_algo_flags(*run, in, flags);

  auto* verify = app.add_subcommand("verify", "Run, compare against the exact oracle");
  add_algo_flags(*verify, in, flags);
  verify->add_option("--override-guarantee", override_text,
                     "Check against side:factor:additive instead of the catalog");

  auto* oracle = app.add_subcommand("oracle", "Exact value by one search per S vertex");
  oracle->add_option("--graph", in.graph)->required();
  oracle->add_option("--sets", in.sets)->required();
  oracle->add_option("--quantity", quantity, "diameter, radius or eccentricities");

  auto* gen_cmd = app.add_subcommand("gen", "Write PREFIX.graph, PREFIX.sets, PREFIX.json");
  gen_cmd->add_option("--family", gen.family, "Gadget family or RANDOM");
  gen_cmd->add_option("--n", gen.n, "Vertices (RANDOM) or vectors per set");
  gen_cmd->add_option("--m", gen.m, "Edges (RANDOM)");
  gen_cmd->add_option("--d", gen.d, "Vector dimension");
  gen_cmd->add_option("--k", gen.k, "k for k-OV families");
  gen_cmd->add_option("--ell", gen.ell, "Path length parameter");
  gen_cmd->add_flag("--solution", gen.solution, "Plant a solution in the source instance");
  gen_cmd->add_option("--weight-max", gen.weight_max, "Largest edge weight (RANDOM)");
  gen_cmd->add_flag("--directed", gen.directed, "Directed graph (RANDOM)");
  gen_cmd->add_option("--mode", gen.mode, "bichromatic, st or subset (RANDOM)");
  gen_cmd->add_option("--split", gen.split, "Fraction of vertices in S (RANDOM)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", prefix, "Output prefix")->required();

  auto* bench = app.add_subcommand("bench", "Sweep a JSON config, print NDJSON");
  bench->add_option("--config", config, "Config file")->required();
  bench->add_flag("--with-oracle", with_oracle, "Add oracle checks to every report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return do_run(in, flags, false, "", out);
    if (verify->parsed()) return do_run(in, flags, true, override_text, out);
    if (oracle->parsed()) return do_oracle(in, quantity, out);
    if (gen_cmd->parsed()) return do_gen(gen, prefix, out);
    if (bench->parsed()) return do_bench(config, with_oracle, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}

}  // namespace stdiam
