#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "probing/analysis.hpp"
#include "probing/instance.hpp"
#include "probing/io.hpp"

using namespace probing;

namespace {

struct GenerateArgs {
  std::string family;
  std::string out;
  std::string variant = "path_witness";
  int k = -1;
  int depth = -1;
  int copies = -1;
  int part_size = -1;
  int budget = -1;
  int n = -1;
  int width = 3;
  double p = -1.0;
  std::uint64_t seed = 0;
};

void require_flag(bool present, const std::string& what) {
  if (!present) throw PreconditionError(what);
}

Instance build_instance(const GenerateArgs& g) {
  if (g.family == "partition_lb") {
    require_flag(g.k > 0, "--k is required for family partition_lb");
    const int part_size = g.part_size > 0 ? g.part_size : g.k * g.k;
    const double p = g.p >= 0.0 ? g.p : 1.0 / g.k;
    const int budget = g.budget >= 0 ? g.budget : g.k * g.k;
    return gen_partition_lb(g.k, part_size, p, budget);
  }
  if (g.family == "xos_tree") {
    require_flag(g.k > 0, "--k is required for family xos_tree");
    require_flag(g.depth > 0, "--depth is required for family xos_tree");
    XosTreeVariant variant;
    if (g.variant == "path_witness")
      variant = XosTreeVariant::path_witness;
    else if (g.variant == "cardinality")
      variant = XosTreeVariant::cardinality;
    else
      throw PreconditionError("unknown --variant: " + g.variant);
    return gen_xos_tree_lb(g.k, g.depth, variant);
  }
  if (g.family == "all_types") {
    require_flag(g.k > 0, "--k is required for family all_types");
    const int copies = g.copies > 0 ? g.copies : g.k;
    const double p = g.p >= 0.0 ? g.p : 0.5;
    const int budget = g.budget >= 0 ? g.budget : 4 * g.k;
    return gen_alltypes_lb(g.k, copies, p, budget);
  }
  if (g.family == "coverage") {
    require_flag(g.n > 0, "--n is required for family coverage");
    return gen_random_coverage(g.n, g.seed, g.budget);
  }
  if (g.family == "cut") {
    require_flag(g.n > 0, "--n is required for family cut");
    return gen_random_cut(g.n, g.seed, g.budget);
  }
  if (g.family == "xos") {
    require_flag(g.n > 0, "--n is required for family xos");
    return gen_random_xos(g.n, g.width, g.seed, g.budget);
  }
  throw PreconditionError("unknown --family: " + g.family);
}

int cmd_generate(const GenerateArgs& g) {
  Instance inst = build_instance(g);
  if (g.out.empty()) {
    std::cout << instance_to_json(inst).dump(2) << '\n';
  } else {
    save_instance(inst, g.out);
    std::cerr << "wrote " << g.out << " (digest " << instance_digest(inst) << ")\n";
  }
  return 0;
}

struct GapArgs {
  std::vector<std::string> instances;
  std::string batch_dir;
  std::string csv_path;
  bool as_json = false;
  bool assert_theorems = false;
  bool surrogate = false;
  double lambda = -1.0;
};

struct GapRow {
  std::string source;
  std::string digest;
  GapReport report;
  std::optional<double> surrogate_opt;
};

GapRow evaluate_one(const std::string& source, const GapArgs& args) {
  const Instance inst = load_instance(source);
  GapRow row;
  row.source = source;
  row.digest = instance_digest(inst);
  row.report = gap_report(inst, args.lambda);
  if (args.surrogate) row.surrogate_opt = opt_nonadaptive(inst, PlanValueMode::surrogate).value;
  return row;
}

void print_human(const GapRow& row) {
  const GapReport& r = row.report;
  std::cout << row.source << "  family=" << (r.family.empty() ? "-" : r.family) << " n=" << r.n
            << " adap=" << r.adap_opt << " nonadap=" << r.nonadap_opt
            << " natural=" << r.natural_nonadaptive << " gap=" << r.gap_ratio;
  if (r.greedy) std::cout << " greedy=" << *r.greedy;
  if (r.xos_alg1) std::cout << " alg1=" << *r.xos_alg1 << " calls=" << *r.xos_oracle_calls;
  if (row.surrogate_opt) std::cout << " surrogate=" << *row.surrogate_opt;
  if (r.bound_divisor) std::cout << " divisor=" << *r.bound_divisor;
  std::cout << (r.bound_ok && r.violations.empty() ? " ok" : " VIOLATED") << '\n';
  for (const auto& v : r.violations) std::cout << "  violation: " << v << '\n';
}

int cmd_gap(const GapArgs& args) {
  std::vector<std::string> sources = args.instances;
  if (!args.batch_dir.empty()) {
    for (const auto& entry : std::filesystem::directory_iterator(args.batch_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        sources.push_back(entry.path().string());
    std::sort(sources.begin(), sources.end());
  }
  if (sources.empty()) throw PreconditionError("no instances given (positional paths or --batch)");

  // One worker per instance; results are merged in source order.
  std::vector<std::future<GapRow>> futures;
  futures.reserve(sources.size());
  for (const auto& source : sources)
    futures.push_back(
        std::async(std::launch::async, [&args, source] { return evaluate_one(source, args); }));
  std::vector<GapRow> rows;
  rows.reserve(sources.size());
  for (auto& f : futures) rows.push_back(f.get());

  if (!args.csv_path.empty()) {
    const bool need_header = !std::filesystem::exists(args.csv_path) ||
                             std::filesystem::file_size(args.csv_path) == 0;
    std::ofstream csv(args.csv_path, std::ios::app);
    if (!csv) throw SchemaError("cannot open csv file: " + args.csv_path);
    if (need_header) csv << report_csv_header() << '\n';
    for (const auto& row : rows) csv << report_csv_row(row.report, row.digest, row.source) << '\n';
  }

  if (args.as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json doc = report_to_json(row.report, row.digest);
      doc["source"] = row.source;
      if (row.surrogate_opt) doc["values"]["surrogate_nonadap_opt"] = *row.surrogate_opt;
      out.push_back(std::move(doc));
    }
    std::cout << (rows.size() == 1 ? out[0] : out).dump(2) << '\n';
  } else {
    for (const auto& row : rows) print_human(row);
  }

  if (args.assert_theorems) {
    for (const auto& row : rows)
      if (!row.report.bound_ok || !row.report.violations.empty()) {
        std::cerr << "theorem violation in " << row.source << '\n';
        for (const auto& v : row.report.violations) std::cerr << "  " << v << '\n';
        return 1;
      }
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count) {
  const SuiteResult result = run_suite(suite, seed, count);
  std::cout << "suite " << result.suite << ": " << result.checked << " checks, "
            << (result.passed ? "PASS" : "FAIL") << '\n';
  // Some suites report an observation (e.g. the worst ratio seen) even when
  // they pass.
  if (!result.witness.empty()) std::cout << "  " << result.witness << '\n';
  return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic probing toolkit: instances, exact strategy optimization, "
               "adaptivity-gap reports, and property suites"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Write an instance file for a named family");
  generate->add_option("--family", gen.family,
                       "partition_lb | xos_tree | all_types | coverage | cut | xos")
      ->required();
  generate->add_option("--k", gen.k, "structured family size parameter");
  generate->add_option("--depth", gen.depth, "tree depth (xos_tree)");
  generate->add_option("--variant", gen.variant, "xos_tree constraint: path_witness | cardinality");
  generate->add_option("--copies", gen.copies, "elements per type (all_types)");
  generate->add_option("--part-size", gen.part_size, "elements per part (partition_lb)");
  generate->add_option("--budget", gen.budget, "probe budget override");
  generate->add_option("--p", gen.p, "activation probability override");
  generate->add_option("--n", gen.n, "ground set size (random families)");
  generate->add_option("--width", gen.width, "rows (random xos)");
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_option("--out", gen.out, "output path (default: stdout)");

  GapArgs gap;
  CLI::App* gapcmd =
      app.add_subcommand("gap", "Evaluate adaptive vs non-adaptive optima on instance files");
  gapcmd->add_option("instances", gap.instances, "instance JSON files");
  gapcmd->add_option("--batch", gap.batch_dir, "evaluate every .json in a directory");
  gapcmd->add_option("--csv", gap.csv_path, "append one CSV row per instance");
  gapcmd->add_flag("--json", gap.as_json, "print full report JSON");
  gapcmd->add_flag("--assert-theorems", gap.assert_theorems,
                   "exit 1 if a class-conditional bound or sanity relation fails");
  gapcmd->add_flag("--surrogate", gap.surrogate,
                   "also report the half-sampling surrogate non-adaptive optimum");
  gapcmd->add_option("--lambda", gap.lambda,
                     "threshold scale for the XOS algorithm (<= 0: desk preset)");

  std::string suite;
  std::uint64_t suite_seed = 1;
  int suite_count = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run a named randomized property suite");
  verify->add_option("--suite", suite, "stem | stemmass | feige | bfns | factor3 | factor40 | fact | all")
      ->required();
  verify->add_option("--seed", suite_seed, "suite seed");
  verify->add_option("--count", suite_count, "check count (0: suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (gapcmd->parsed()) return cmd_gap(gap);
    return cmd_verify(suite, suite_seed, suite_count);
  } catch (const EnumerationLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const StateBudgetError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
