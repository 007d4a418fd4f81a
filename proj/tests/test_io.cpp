#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "probing/adaptive.hpp"
#include "probing/analysis.hpp"
#include "probing/instance.hpp"
#include "probing/io.hpp"
#include "probing/oracle.hpp"

using namespace probing;
using nlohmann::json;

namespace {

void check_roundtrip(const Instance& inst) {
  const json doc = instance_to_json(inst);
  const Instance back = instance_from_json(doc);
  CHECK(back.n() == inst.n());
  for (int e = 0; e < inst.n(); ++e) CHECK(back.ground.p(e) == inst.ground.p(e));
  for (std::uint32_t m = 0; m < (1u << inst.n()); ++m)
    CHECK((*back.objective)(Subset::of_bits(m)) ==
          doctest::Approx((*inst.objective)(Subset::of_bits(m))).epsilon(1e-15));
  CHECK(back.objective->fn_class() == inst.objective->fn_class());
  CHECK(back.constraint->kind() == inst.constraint->kind());
  if (inst.n() <= 8) {
    const auto a = enumerate_feasible_sets(*inst.constraint);
    const auto b = enumerate_feasible_sets(*back.constraint);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].set == b[i].set);
  }
  CHECK(back.meta.family == inst.meta.family);
  CHECK(back.meta.seed == inst.meta.seed);
  CHECK(instance_digest(back) == instance_digest(inst));
}

}  // namespace

TEST_CASE("instances round trip through JSON for every family") {
  check_roundtrip(gen_random_coverage(5, 8));
  check_roundtrip(gen_random_cut(5, 8));
  check_roundtrip(gen_random_xos(5, 3, 8));
  check_roundtrip(gen_partition_lb(2, 2, 0.5, 3));
  check_roundtrip(gen_alltypes_lb(2, 2, 0.5, 3));
  check_roundtrip(gen_xos_tree_lb(2, 2, XosTreeVariant::path_witness));

  Instance table{GroundSet(2, 0.5),
                 std::make_shared<TableFunction>(2, std::vector<double>{0.0, 1.0, 1.0, 0.0},
                                                 FnClass::submodular),
                 std::make_shared<PrefixDagConstraint>(
                     2, std::vector<std::map<int, int>>{{{0, 1}, {1, 2}}, {{1, 2}}, {}}),
                 {"handmade", 7, {{"note", 1.0}}}};
  check_roundtrip(table);

  Instance budget{GroundSet(2, 0.5),
                  std::make_shared<PartitionRankFunction>(std::vector<int>{0, 1},
                                                          std::vector<int>{1, 1}),
                  std::make_shared<BudgetPathConstraint>(
                      std::vector<std::vector<double>>{{0.0, 2.0, 1.0},
                                                       {2.0, 0.0, 1.5},
                                                       {1.0, 1.5, 0.0}},
                      2.5),
                  {"handmade_budget", 0, {}}};
  check_roundtrip(budget);
}

TEST_CASE("contracted objectives refuse serialization") {
  const auto cov = gen_random_coverage(3, 5);
  CHECK_THROWS_AS(function_to_json(*contract(cov.objective, Subset::single(0))),
                  PreconditionError);
}

TEST_CASE("strategy trees round trip") {
  StrategyTree t;
  const int yes2 = t.add_leaf();
  const int no2 = t.add_leaf();
  const int inner = t.add_internal(1, yes2, no2);
  t.set_root(t.add_internal(0, 0, inner));

  const json doc = tree_to_json(t);
  const StrategyTree back = tree_from_json(doc);
  const GroundSet g(2, 0.5);
  const PartitionRankFunction f({0, 0}, {1});
  CHECK(adap_value(back, f, g) == adap_value(t, f, g));
  CHECK(tree_to_json(back) == doc);

  CHECK_THROWS_AS(tree_from_json(json::parse(R"({"elt": -1, "yes": "leaf", "no": "leaf"})")),
                  SchemaError);
  CHECK_THROWS_AS(tree_from_json(json::parse(R"("stump")")), SchemaError);
}

TEST_CASE("schema violations are rejected with SchemaError") {
  const json good = instance_to_json(gen_random_coverage(3, 5));

  json bad = good;
  bad["version"] = 2;
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  bad = good;
  bad["probs"].push_back(0.5);
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  bad = good;
  bad["n"] = 40;
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  bad = good;
  bad["function"]["type"] = "mystery";
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  bad = good;
  bad["constraint"].erase("type");
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  bad = good;
  bad.erase("function");
  CHECK_THROWS_AS(instance_from_json(bad), SchemaError);

  // Negative values are rejected for explicit tables.
  const json neg = {{"type", "table"}, {"values", {0.0, -1.0}}, {"class", "arbitrary"}};
  CHECK_THROWS_AS(function_from_json(neg, 1), SchemaError);
}

TEST_CASE("file save and load") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "probing_io_roundtrip.json").string();
  const auto inst = gen_random_cut(4, 19);
  save_instance(inst, path);
  const Instance back = load_instance(path);
  CHECK(instance_digest(back) == instance_digest(inst));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_instance((dir / "probing_io_missing.json").string()), SchemaError);
}

TEST_CASE("report serialization carries the qualitative record") {
  const auto inst = gen_random_coverage(5, 23);
  const auto rep = gap_report(inst);
  const json doc = report_to_json(rep, instance_digest(inst));
  CHECK(doc.at("version") == kFormatVersion);
  CHECK(doc.at("tool_version") == kToolVersion);
  CHECK(doc.at("instance").at("family") == "random_coverage");
  CHECK(doc.at("values").at("adap_opt").get<double>() ==
        doctest::Approx(rep.adap_opt).epsilon(1e-15));
  CHECK(doc.at("theorem").at("satisfied") == true);
  CHECK(doc.at("violations").is_array());

  const std::string header = report_csv_header();
  const std::string row = report_csv_row(rep, instance_digest(inst), "x.json");
  const auto commas = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  CHECK(commas(header) == commas(row));
}
