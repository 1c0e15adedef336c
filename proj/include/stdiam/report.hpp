// JSON report fragments shared by every CLI subcommand. Keys are emitted in
// a fixed order so identical runs give identical bytes apart from
// "elapsed_ms".

#pragma once

#include "json.hpp"
#include "stdiam/instance_gen.hpp"
#include "stdiam/registry.hpp"

namespace stdiam {

using Json = nlohmann::ordered_json;

/// Integer, or the string "UNREACHABLE".
Json dist_json(Dist d);
Json guarantee_json(const Guarantee& g);
Json graph_summary_json(const Graph& g, const PartitionSpec& p);
/// value (or per-vertex values), witness, searches and the trace.
Json outcome_json(const Outcome& outcome);
Json oracle_json(const OracleCheck& check, const Outcome& outcome,
                 const Guarantee& guarantee);
/// Oracle-only report body for one quantity.
Json exact_json(Quantity q, const std::vector<OracleResult>& ecc);
/// Sidecar written by `gen`.
Json instance_json(const GeneratedInstance& inst);

}  // namespace stdiam
