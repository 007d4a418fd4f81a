#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "probing/analysis.hpp"
#include "probing/instance.hpp"
#include "probing/rng.hpp"

using namespace probing;

TEST_CASE("stem inequality on pinned vectors") {
  const auto one = stem_inequality({1.0});
  CHECK(one.lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.rhs == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(one.holds);

  const auto empty = stem_inequality({});
  CHECK(empty.lhs == 0.0);
  CHECK(empty.rhs == 0.0);
  CHECK(empty.holds);

  // Tightness: tiny uniform entries push the ratio to 1/2 + O(eps).
  const std::vector<double> eps_vec(1000, 0.01);
  const auto tight = stem_inequality(eps_vec);
  CHECK(tight.holds);
  const double ratio = tight.lhs / (2.0 * tight.rhs);
  CHECK(ratio > 0.50);
  CHECK(ratio < 0.51);
}

TEST_CASE("stem inequality holds on random vectors") {
  Rng rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(1 + rng.below(50));
    for (auto& x : a) x = rng.next_real();
    CHECK(stem_inequality(a).holds);
  }
}

TEST_CASE("stem mass lemma on pinned stems") {
  const auto r = stemmass_check({0.5, 0.5}, {1.0, 1.0});
  CHECK(r.lhs_closed == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(r.lhs_brute == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(r.exit_mass_closed == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.exit_mass_brute == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r.holds);  // 0.625 >= 0.375

  const auto single = stemmass_check({0.3}, {2.0});
  CHECK(single.lhs_closed == doctest::Approx(0.3 * 2.0).epsilon(1e-12));
  CHECK(single.exit_mass_closed == doctest::Approx(0.3 * 2.0).epsilon(1e-12));
  CHECK(single.holds);

  const auto zeros = stemmass_check({0.4, 0.9}, {0.0, 0.0});
  CHECK(zeros.lhs_closed == 0.0);
  CHECK(zeros.exit_mass_closed == 0.0);
  CHECK(zeros.holds);
}

TEST_CASE("stem mass closed forms equal brute force on random stems") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + (int)rng.below(8);
    std::vector<double> probs(m), values(m);
    for (auto& p : probs) p = rng.uniform(0.05, 1.0);
    for (auto& v : values) v = rng.bernoulli(0.2) ? 0.0 : rng.uniform(0.0, 2.0);
    const auto r = stemmass_check(probs, values);
    CHECK(r.lhs_closed == doctest::Approx(r.lhs_brute).epsilon(1e-12));
    CHECK(r.exit_mass_closed == doctest::Approx(r.exit_mass_brute).epsilon(1e-12));
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(stemmass_check(std::vector<double>(17, 0.5), std::vector<double>(17, 1.0)),
                  EnumerationLimitError);
}

TEST_CASE("base-sampling bound on pinned cases") {
  const CutFunction cut(2, {{0, 1, 1.0}});
  const auto pinned = bfns_check(cut, Subset::single(0), {0.0, 0.5});
  CHECK(pinned.lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pinned.rhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pinned.holds);

  // p = 0 keeps the base untouched; p = 1 trivializes the right side.
  const auto p0 = bfns_check(cut, Subset::single(0), {0.0, 0.0});
  CHECK(p0.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p0.rhs == doctest::Approx(1.0).epsilon(1e-12));
  const auto p1 = bfns_check(cut, Subset::single(0), {0.0, 1.0});
  CHECK(p1.rhs == 0.0);
  CHECK(p1.holds);
}

TEST_CASE("base-sampling bound on random submodular instances") {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen_random_cut(3 + (int)rng.below(4), rng.next_u64());
    const int n = inst.n();
    const Subset base = Subset::of_bits(rng.below(1u << n));
    std::vector<double> probs(n, 0.0);
    for (int e = 0; e < n; ++e)
      if (!base.contains(e)) probs[e] = rng.uniform(0.0, 1.0);
    CHECK(bfns_check(*inst.objective, base, probs).holds);
  }
}

TEST_CASE("decoupling fact: pinned and random distributions") {
  const Atoms uniform01 = {{0.0, 0.5}, {1.0, 0.5}};
  const auto u = disjointify_fact_check(uniform01, uniform01, uniform01);
  CHECK(u.holds);
  CHECK(u.lhs <= u.rhs + 1e-12);

  // Constant X cancels on both sides.
  const Atoms constant = {{2.0, 1.0}};
  const auto c = disjointify_fact_check(constant, uniform01, uniform01);
  CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-12));

  Rng rng(20);
  for (int trial = 0; trial < 200; ++trial) {
    auto draw = [&] {
      Atoms a(1 + rng.below(4));
      double total = 0.0;
      for (auto& [v, p] : a) {
        v = rng.uniform(0.0, 3.0);
        p = rng.uniform(0.1, 1.0);
        total += p;
      }
      for (auto& atom : a) atom.second /= total;
      return a;
    };
    CHECK(disjointify_fact_check(draw(), draw(), draw()).holds);
  }
}

TEST_CASE("concentration experiment degenerate cases") {
  // Deterministic activations: realized row value equals the path mean.
  const XosFunction f({{1.0, 2.0}});
  const GroundSet certain(2, 1.0);
  Instance inst{certain, std::make_shared<XosFunction>(f),
                std::make_shared<CardinalityConstraint>(2, 2), {}};
  const auto r = opt_adaptive(inst);
  const auto conc = concentration_experiment(inst, r.tree, 2000, 5, r.value);
  REQUIRE(conc.exceed_freq.size() == 1);
  CHECK(conc.exceed_freq[0] == 0.0);
  CHECK(conc.samples == 2000);

  // Zero coefficients never deviate.
  Instance zero{GroundSet(2, 0.5),
                std::make_shared<XosFunction>(XosFunction(std::vector<std::vector<double>>{{0.0, 0.0}})),
                std::make_shared<CardinalityConstraint>(2, 2),
                {}};
  const auto tree = random_tree(zero, 9, 5);
  const auto zc = concentration_experiment(zero, tree, 1000, 6, 1.0);
  CHECK(zc.exceed_freq[0] == 0.0);
}

TEST_CASE("concentration experiment is deterministic in the seed") {
  const auto inst = gen_xos_tree_lb(2, 2, XosTreeVariant::path_witness);
  const auto r = opt_adaptive(inst);
  const auto a = concentration_experiment(inst, r.tree, 5000, 77, r.value);
  const auto b = concentration_experiment(inst, r.tree, 5000, 77, r.value);
  CHECK(a.exceed_freq == b.exceed_freq);
}

TEST_CASE("gap report on a monotone instance") {
  const auto inst = gen_random_coverage(6, 40);
  const auto rep = gap_report(inst);
  CHECK(rep.family == "random_coverage");
  CHECK(rep.n == 6);
  CHECK(rep.violations.empty());
  CHECK(rep.bound_ok);
  REQUIRE(rep.bound_divisor.has_value());
  CHECK(*rep.bound_divisor == 3.0);
  CHECK(rep.adap_opt >= rep.nonadap_opt - 1e-9);
  CHECK(rep.nonadap_opt >= rep.natural_nonadaptive - 1e-9);
  CHECK(rep.natural_nonadaptive >= rep.adap_opt / 3.0 - 1e-9);
  REQUIRE(rep.greedy.has_value());
  CHECK(*rep.greedy <= rep.nonadap_opt + 1e-9);
  CHECK(rep.gap_ratio == doctest::Approx(rep.adap_opt / rep.nonadap_opt).epsilon(1e-12));
}

TEST_CASE("gap report on a cut instance uses the non-monotone divisor") {
  const auto inst = gen_random_cut(5, 41);
  const auto rep = gap_report(inst);
  REQUIRE(rep.bound_divisor.has_value());
  CHECK(*rep.bound_divisor == 40.0);
  CHECK(rep.bound_ok);
  CHECK(!rep.greedy.has_value());
}

TEST_CASE("gap report with certain activations has no adaptivity gap") {
  const auto base = gen_random_coverage(5, 42);
  Instance certain{GroundSet(5, 1.0), base.objective, base.constraint, base.meta};
  const auto rep = gap_report(certain);
  CHECK(rep.gap_ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gap report on an xos instance runs the oracle algorithm") {
  const auto inst = gen_random_xos(6, 3, 43);
  const auto rep = gap_report(inst);
  REQUIRE(rep.xos_alg1.has_value());
  REQUIRE(rep.xos_oracle_calls.has_value());
  CHECK(*rep.xos_alg1 <= rep.nonadap_opt + 1e-9);
  CHECK(rep.violations.empty());
}

TEST_CASE("property suites pass at reduced volume") {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, 12345, 25);
    CHECK(r.passed);
    CHECK(r.checked >= 25);
    CHECK(r.suite == name);
  }
  const auto all = run_suite("all", 99, 10);
  CHECK(all.passed);
  CHECK_THROWS_AS(run_suite("nope", 1, 1), PreconditionError);
}
