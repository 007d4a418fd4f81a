#pragma once

#include <string>

#include <json.hpp>

#include "probing/analysis.hpp"
#include "probing/instance.hpp"
#include "probing/strategy_tree.hpp"

namespace probing {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

// Instance documents: {"version", "n", "probs", "function", "constraint",
// "metadata"}. Function discriminants: coverage, table, xos,
// partition_rank, cut, all_types. Constraint discriminants: cardinality,
// partition_matroid, path_witness, prefix_dag, budget_path.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& doc);

nlohmann::json function_to_json(const SetFunction& f);
SetFunctionPtr function_from_json(const nlohmann::json& doc, int n);

nlohmann::json constraint_to_json(const ConstraintAutomaton& c);
ConstraintPtr constraint_from_json(const nlohmann::json& doc, int n);

// Trees serialize as nested nodes {"elt", "yes", "no"} with "leaf" at the
// leaves.
nlohmann::json tree_to_json(const StrategyTree& t);
StrategyTree tree_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const GapReport& report, const std::string& digest);
// Header line for the CSV sink, then one row per report.
std::string report_csv_header();
std::string report_csv_row(const GapReport& report, const std::string& digest,
                           const std::string& source);

// FNV-1a over the canonical (sorted-key) instance document; stable across
// runs and platforms.
std::string instance_digest(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace probing
