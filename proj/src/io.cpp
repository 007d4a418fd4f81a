#include "probing/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace probing {

using nlohmann::json;

namespace {

FnClass fn_class_from_string(const std::string& s) {
  if (s == "monotone_submodular") return FnClass::monotone_submodular;
  if (s == "submodular") return FnClass::submodular;
  if (s == "xos") return FnClass::xos;
  if (s == "arbitrary") return FnClass::arbitrary;
  throw SchemaError("unknown function class: " + s);
}

[[noreturn]] void schema_fail(const std::string& context, const std::exception& e) {
  throw SchemaError(context + ": " + e.what());
}

}  // namespace

json function_to_json(const SetFunction& f) {
  if (const auto* cov = dynamic_cast<const CoverageFunction*>(&f))
    return {{"type", "coverage"},
            {"item_weights", cov->item_weights()},
            {"element_items", cov->element_items()}};
  if (const auto* tab = dynamic_cast<const TableFunction*>(&f))
    return {{"type", "table"}, {"values", tab->values()}, {"class", to_string(tab->fn_class())}};
  if (const auto* xos = dynamic_cast<const XosFunction*>(&f))
    return {{"type", "xos"}, {"coefficients", xos->coefficients()}};
  if (const auto* pr = dynamic_cast<const PartitionRankFunction*>(&f))
    return {{"type", "partition_rank"}, {"parts", pr->parts()}, {"caps", pr->caps()}};
  if (const auto* cut = dynamic_cast<const CutFunction*>(&f)) {
    json edges = json::array();
    for (const auto& e : cut->edges()) edges.push_back({e.u, e.v, e.w});
    return {{"type", "cut"}, {"edges", edges}};
  }
  if (const auto* at = dynamic_cast<const AllTypesFunction*>(&f))
    return {{"type", "all_types"}, {"types", at->types()}};
  throw PreconditionError("function_to_json: family is not serializable");
}

SetFunctionPtr function_from_json(const json& doc, int n) {
  try {
    const std::string type = doc.at("type").get<std::string>();
    if (type == "coverage") {
      auto weights = doc.at("item_weights").get<std::vector<double>>();
      auto items = doc.at("element_items").get<std::vector<std::vector<int>>>();
      if ((int)items.size() != n) throw SchemaError("coverage: element count mismatch");
      return std::make_shared<CoverageFunction>(std::move(weights), items);
    }
    if (type == "table") {
      auto values = doc.at("values").get<std::vector<double>>();
      const FnClass declared = doc.contains("class")
                                   ? fn_class_from_string(doc.at("class").get<std::string>())
                                   : FnClass::arbitrary;
      for (double v : values)
        if (v < 0.0) throw SchemaError("table: top-level objectives must be non-negative");
      return std::make_shared<TableFunction>(n, std::move(values), declared);
    }
    if (type == "xos") {
      auto rows = doc.at("coefficients").get<std::vector<std::vector<double>>>();
      for (const auto& row : rows)
        if ((int)row.size() != n) throw SchemaError("xos: row length mismatch");
      return std::make_shared<XosFunction>(std::move(rows));
    }
    if (type == "partition_rank") {
      auto parts = doc.at("parts").get<std::vector<int>>();
      auto caps = doc.at("caps").get<std::vector<int>>();
      if ((int)parts.size() != n) throw SchemaError("partition_rank: part count mismatch");
      return std::make_shared<PartitionRankFunction>(std::move(parts), std::move(caps));
    }
    if (type == "cut") {
      std::vector<CutFunction::Edge> edges;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw SchemaError("cut: edge must be [u, v, w]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
      }
      return std::make_shared<CutFunction>(n, std::move(edges));
    }
    if (type == "all_types") {
      auto types = doc.at("types").get<std::vector<int>>();
      if ((int)types.size() != n) throw SchemaError("all_types: type count mismatch");
      return std::make_shared<AllTypesFunction>(std::move(types));
    }
    throw SchemaError("unknown function type: " + type);
  } catch (const json::exception& e) {
    schema_fail("function", e);
  }
}

json constraint_to_json(const ConstraintAutomaton& c) {
  switch (c.kind()) {
    case ConstraintKind::cardinality: {
      const auto& card = dynamic_cast<const CardinalityConstraint&>(c);
      return {{"type", "cardinality"}, {"k", card.k()}};
    }
    case ConstraintKind::partition_matroid: {
      const auto& pm = dynamic_cast<const PartitionMatroidConstraint&>(c);
      return {{"type", "partition_matroid"},
              {"parts", pm.parts()},
              {"capacities", pm.capacities()}};
    }
    case ConstraintKind::path_witness: {
      const auto& pw = dynamic_cast<const PathWitnessConstraint&>(c);
      return {{"type", "path_witness"}, {"arity", pw.arity()}, {"depth", pw.depth()}};
    }
    case ConstraintKind::prefix_dag: {
      const auto& pd = dynamic_cast<const PrefixDagConstraint&>(c);
      json nodes = json::array();
      for (const auto& kids : pd.children()) {
        json node = json::array();
        for (const auto& [elt, child] : kids) node.push_back({elt, child});
        nodes.push_back(node);
      }
      return {{"type", "prefix_dag"}, {"nodes", nodes}};
    }
    case ConstraintKind::budget_path: {
      const auto& bp = dynamic_cast<const BudgetPathConstraint&>(c);
      return {{"type", "budget_path"}, {"budget", bp.budget()}, {"distances", bp.distances()}};
    }
  }
  throw PreconditionError("constraint_to_json: unknown kind");
}

ConstraintPtr constraint_from_json(const json& doc, int n) {
  try {
    const std::string type = doc.at("type").get<std::string>();
    if (type == "cardinality")
      return std::make_shared<CardinalityConstraint>(n, doc.at("k").get<int>());
    if (type == "partition_matroid") {
      auto parts = doc.at("parts").get<std::vector<int>>();
      auto caps = doc.at("capacities").get<std::vector<int>>();
      if ((int)parts.size() != n) throw SchemaError("partition_matroid: part count mismatch");
      return std::make_shared<PartitionMatroidConstraint>(std::move(parts), std::move(caps));
    }
    if (type == "path_witness") {
      auto pw = std::make_shared<PathWitnessConstraint>(doc.at("arity").get<int>(),
                                                        doc.at("depth").get<int>());
      if (pw->n() != n) throw SchemaError("path_witness: tree edge count differs from n");
      return pw;
    }
    if (type == "prefix_dag") {
      std::vector<std::map<int, int>> children;
      for (const auto& node : doc.at("nodes")) {
        std::map<int, int> kids;
        for (const auto& edge : node) {
          if (!edge.is_array() || edge.size() != 2)
            throw SchemaError("prefix_dag: edge must be [element, child]");
          kids[edge[0].get<int>()] = edge[1].get<int>();
        }
        children.push_back(std::move(kids));
      }
      return std::make_shared<PrefixDagConstraint>(n, std::move(children));
    }
    if (type == "budget_path") {
      auto dist = doc.at("distances").get<std::vector<std::vector<double>>>();
      if ((int)dist.size() != n + 1)
        throw SchemaError("budget_path: distance matrix must be (n+1) x (n+1)");
      return std::make_shared<BudgetPathConstraint>(std::move(dist),
                                                    doc.at("budget").get<double>());
    }
    throw SchemaError("unknown constraint type: " + type);
  } catch (const json::exception& e) {
    schema_fail("constraint", e);
  }
}

json instance_to_json(const Instance& inst) {
  json params = json::object();
  for (const auto& [key, value] : inst.meta.params) params[key] = value;
  return {{"version", kFormatVersion},
          {"n", inst.n()},
          {"probs", inst.ground.probs()},
          {"function", function_to_json(*inst.objective)},
          {"constraint", constraint_to_json(*inst.constraint)},
          {"metadata",
           {{"family", inst.meta.family}, {"seed", inst.meta.seed}, {"params", params}}}};
}

Instance instance_from_json(const json& doc) {
  try {
    const int version = doc.at("version").get<int>();
    if (version != kFormatVersion)
      throw SchemaError("unsupported format version " + std::to_string(version));
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxGroundSize) throw SchemaError("n out of range");
    auto probs = doc.at("probs").get<std::vector<double>>();
    if ((int)probs.size() != n) throw SchemaError("probs length differs from n");

    InstanceMeta meta;
    if (doc.contains("metadata")) {
      const auto& md = doc.at("metadata");
      meta.family = md.value("family", std::string());
      meta.seed = md.value("seed", std::uint64_t{0});
      if (md.contains("params"))
        for (const auto& [key, value] : md.at("params").items())
          meta.params.emplace_back(key, value.get<double>());
    }

    return Instance{GroundSet(std::move(probs)), function_from_json(doc.at("function"), n),
                    constraint_from_json(doc.at("constraint"), n), std::move(meta)};
  } catch (const json::exception& e) {
    schema_fail("instance", e);
  }
}

json tree_to_json(const StrategyTree& t) {
  auto walk = [&](auto&& self, int v) -> json {
    const auto& node = t.node(v);
    if (node.leaf()) return "leaf";
    return {{"elt", node.elt}, {"yes", self(self, node.yes)}, {"no", self(self, node.no)}};
  };
  return walk(walk, t.root());
}

StrategyTree tree_from_json(const json& doc) {
  StrategyTree t;
  auto walk = [&](auto&& self, const json& node) -> int {
    if (node.is_string() && node.get<std::string>() == "leaf") return t.add_leaf();
    if (!node.is_object()) throw SchemaError("tree: node must be an object or \"leaf\"");
    try {
      const int elt = node.at("elt").get<int>();
      if (elt < 0) throw SchemaError("tree: negative element");
      const int yes = self(self, node.at("yes"));
      const int no = self(self, node.at("no"));
      return t.add_internal(elt, yes, no);
    } catch (const json::exception& e) {
      schema_fail("tree", e);
    }
  };
  t.set_root(walk(walk, doc));
  return t;
}

namespace {

std::string csv_num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

json report_to_json(const GapReport& report, const std::string& digest) {
  json values = {{"adap_opt", report.adap_opt},
                 {"nonadap_opt", report.nonadap_opt},
                 {"natural_nonadaptive", report.natural_nonadaptive},
                 {"greedy", report.greedy ? json(*report.greedy) : json()},
                 {"xos_alg1", report.xos_alg1 ? json(*report.xos_alg1) : json()}};
  return {{"version", kFormatVersion},
          {"tool_version", kToolVersion},
          {"instance", {{"digest", digest}, {"family", report.family}, {"n", report.n}}},
          {"values", values},
          {"oracle_calls", report.xos_oracle_calls ? json(*report.xos_oracle_calls) : json()},
          {"ratios", {{"adaptivity_gap", report.gap_ratio}}},
          {"theorem",
           {{"divisor", report.bound_divisor ? json(*report.bound_divisor) : json()},
            {"satisfied", report.bound_ok}}},
          {"violations", report.violations},
          {"seed", report.seed},
          {"dp_states", report.dp_states},
          {"wall_ms", report.wall_ms}};
}

std::string report_csv_header() {
  return "source,digest,family,n,adap_opt,nonadap_opt,natural,greedy,xos_alg1,oracle_calls,"
         "adaptivity_gap,bound_divisor,bound_ok,seed,dp_states,wall_ms";
}

std::string report_csv_row(const GapReport& report, const std::string& digest,
                           const std::string& source) {
  std::ostringstream os;
  os << source << ',' << digest << ',' << report.family << ',' << report.n << ','
     << csv_num(report.adap_opt) << ',' << csv_num(report.nonadap_opt) << ','
     << csv_num(report.natural_nonadaptive) << ','
     << (report.greedy ? csv_num(*report.greedy) : "") << ','
     << (report.xos_alg1 ? csv_num(*report.xos_alg1) : "") << ','
     << (report.xos_oracle_calls ? std::to_string(*report.xos_oracle_calls) : "") << ','
     << csv_num(report.gap_ratio) << ','
     << (report.bound_divisor ? csv_num(*report.bound_divisor) : "") << ','
     << (report.bound_ok ? "true" : "false") << ',' << report.seed << ',' << report.dp_states
     << ',' << csv_num(report.wall_ms);
  return os.str();
}

std::string instance_digest(const Instance& inst) {
  const std::string dump = instance_to_json(inst).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open instance file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    schema_fail(path, e);
  }
  return instance_from_json(doc);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot open output file: " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

}  // namespace probing
