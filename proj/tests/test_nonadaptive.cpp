#include <doctest.h>

#include <bit>
#include <cmath>
#include <memory>
#include <vector>

#include "oracles.hpp"
#include "probing/adaptive.hpp"
#include "probing/instance.hpp"
#include "probing/nonadaptive.hpp"
#include "probing/rng.hpp"

using namespace probing;

TEST_CASE("plan value matches brute force and validates the plan") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + (int)rng.below(4);
    const auto inst =
        trial % 2 == 0 ? gen_random_coverage(n, rng.next_u64()) : gen_random_cut(n, rng.next_u64());
    std::vector<int> order;
    for (int e = 0; e < n; ++e)
      if (rng.bernoulli(0.6)) order.push_back(e);
    const ProbePlan plan{order};
    CHECK(plan_value(plan, *inst.objective, inst.ground) ==
          doctest::Approx(oracles::brute_plan_value(*inst.objective, inst.ground, order))
              .epsilon(1e-12));
  }
  const auto inst = gen_random_coverage(3, 1);
  CHECK_THROWS_AS(plan_value(ProbePlan{{0, 0}}, *inst.objective, inst.ground), PreconditionError);
  CHECK_THROWS_AS(plan_value(ProbePlan{{7}}, *inst.objective, inst.ground), PreconditionError);
}

TEST_CASE("plan value is monotone in the plan set") {
  const auto inst = gen_random_cut(5, 9);
  const ProbePlan small{{1, 3}};
  const ProbePlan large{{1, 3, 4}};
  CHECK(plan_value(large, *inst.objective, inst.ground) >=
        plan_value(small, *inst.objective, inst.ground) - 1e-12);
}

TEST_CASE("surrogate plan value equals evaluation under halved probabilities") {
  const auto inst = gen_random_coverage(5, 21);
  const ProbePlan plan{{0, 2, 4}};
  std::vector<double> halved = inst.ground.probs();
  for (auto& p : halved) p *= 0.5;
  const GroundSet gh(halved);
  double expect = 0.0;
  for_each_outcome(plan.set(), gh, [&](Subset r, double pr) {
    expect += pr * (*inst.objective)(r);
  });
  CHECK(plan_value_surrogate(plan, *inst.objective, inst.ground) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sandwich between surrogate and exact plan value on submodular objectives") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = gen_random_cut(5, rng.next_u64());
    ProbePlan plan;
    for (int e = 0; e < 5; ++e)
      if (rng.bernoulli(0.7)) plan.order.push_back(e);
    const double exact = plan_value(plan, *inst.objective, inst.ground);
    const double sur = plan_value_surrogate(plan, *inst.objective, inst.ground);
    CHECK(sur <= exact + 1e-9);
    CHECK(sur >= exact / 4.0 - 1e-9);
  }
}

TEST_CASE("optimal non-adaptive plan matches brute force in both modes") {
  Rng rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + (int)rng.below(3);
    const auto inst =
        trial % 2 == 0 ? gen_random_coverage(n, rng.next_u64()) : gen_random_cut(n, rng.next_u64());
    const auto r = opt_nonadaptive(inst);
    CHECK(oracles::brute_feasible_order(*inst.constraint, r.plan.order));
    CHECK(r.value ==
          doctest::Approx(oracles::brute_opt_nonadaptive(*inst.objective, inst.ground,
                                                         *inst.constraint))
              .epsilon(1e-9));
    CHECK(plan_value(r.plan, *inst.objective, inst.ground) ==
          doctest::Approx(r.value).epsilon(1e-12));

    // Surrogate mode optimizes the surrogate score over every feasible set.
    const auto rs = opt_nonadaptive(inst, PlanValueMode::surrogate);
    double best = 0.0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const Subset s = Subset::of_bits(m);
      if (!oracles::brute_feasible_set(*inst.constraint, s)) continue;
      best = std::max(best,
                      plan_value_surrogate(ProbePlan{s.to_vector()}, *inst.objective, inst.ground));
    }
    CHECK(plan_value_surrogate(rs.plan, *inst.objective, inst.ground) ==
          doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("adaptive optimum dominates the non-adaptive optimum") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = gen_random_coverage(4 + (int)rng.below(3), rng.next_u64());
    CHECK(opt_adaptive(inst).value >= opt_nonadaptive(inst).value - 1e-9);
  }
}

TEST_CASE("natural non-adaptive equals the tree mimic value") {
  const auto inst = gen_random_coverage(6, 33);
  const auto t = random_tree(inst, 5, 20);
  CHECK(natural_nonadaptive(t, *inst.objective, inst.ground) ==
        alg_value(t, *inst.objective, inst.ground));
}

TEST_CASE("greedy half-optimality on matroid constraints") {
  Rng rng(91);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + (int)rng.below(4);
    const auto inst = gen_random_coverage(n, rng.next_u64());
    const auto greedy = greedy_nonadaptive(*inst.objective, inst.ground, *inst.constraint);
    const auto opt = opt_nonadaptive(inst);
    CHECK(oracles::brute_feasible_order(*inst.constraint, greedy.plan.order));
    CHECK(greedy.value <= opt.value + 1e-9);
    CHECK(greedy.value >= 0.5 * opt.value - 1e-9);
    CHECK(plan_value(greedy.plan, *inst.objective, inst.ground) ==
          doctest::Approx(greedy.value).epsilon(1e-12));
  }
}

TEST_CASE("greedy rejects unsupported classes and constraint kinds") {
  const auto cut = gen_random_cut(4, 2);
  CHECK_THROWS_AS(greedy_nonadaptive(*cut.objective, cut.ground, *cut.constraint),
                  PreconditionError);

  const auto cov = gen_random_coverage(3, 2);
  const PathWitnessConstraint pw(2, 1);
  CHECK_THROWS_AS(greedy_nonadaptive(*cov.objective, cov.ground, pw), PreconditionError);
}

TEST_CASE("xos algorithm makes exactly the promised oracle calls") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + (int)rng.below(7);
    const int width = 1 + (int)rng.below(4);
    const auto inst = gen_random_xos(n, width, rng.next_u64());
    const auto* f = dynamic_cast<const XosFunction*>(inst.objective.get());
    REQUIRE(f != nullptr);
    const double lambda = xos_lambda_desk(f->width());
    const auto r = xos_algorithm1(*f, inst.ground, *inst.constraint, lambda);
    const int log_n = n <= 1 ? 0 : std::bit_width(std::uint32_t(n - 1));
    CHECK(r.oracle_calls == f->width() + log_n + 2);
    CHECK(oracles::brute_feasible_order(*inst.constraint, r.plan.order));
    CHECK(plan_value(r.plan, *f, inst.ground) == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(r.value <= opt_nonadaptive(inst).value + 1e-9);
  }
}

TEST_CASE("xos algorithm beats the single-element floor at the reference shape") {
  // Width 4, n = 8, cardinality 3: the winner's true value dominates both
  // the best single-element expectation m and opt / (3 ln W + 3).
  const double divisor = 3.0 * std::log(4.0) + 3.0;
  for (std::uint64_t seed : {11, 12, 13, 14, 15}) {
    const auto inst = gen_random_xos(8, 4, seed, 3);
    const auto* f = dynamic_cast<const XosFunction*>(inst.objective.get());
    REQUIRE(f != nullptr);
    double m = 0.0;
    for (int e = 0; e < 8; ++e) m = std::max(m, inst.ground.p(e) * f->max_coef(e));
    const auto r = xos_algorithm1(*f, inst.ground, *inst.constraint, xos_lambda_desk(4));
    CHECK(r.value >= m - 1e-9);
    CHECK(r.value >= opt_nonadaptive(inst).value / divisor - 1e-9);
  }
}

TEST_CASE("all-zero xos coefficients give a zero-value feasible plan") {
  const XosFunction f(std::vector<std::vector<double>>(2, std::vector<double>(3, 0.0)));
  const GroundSet g(3, 0.5);
  const CardinalityConstraint c(3, 2);
  const auto r = xos_algorithm1(f, g, c, xos_lambda_desk(2));
  CHECK(r.value == 0.0);
  CHECK(oracles::brute_feasible_order(c, r.plan.order));
}

TEST_CASE("width-1 xos reduces to one weighted oracle call") {
  // Single row: the expected-weight candidate is the whole feasible optimum,
  // and every bucket candidate scores no higher.
  const XosFunction f({{2.0, 1.0, 0.5}});
  const GroundSet g({0.9, 0.8, 0.1});
  const CardinalityConstraint c(3, 2);
  const auto r = xos_algorithm1(f, g, c, xos_lambda_desk(1));
  std::vector<double> cw(3);
  for (int e = 0; e < 3; ++e) cw[e] = g.p(e) * f.coef(0, e);
  const auto direct = linear_oracle(c, cw);
  CHECK(r.surrogate_value == doctest::Approx(direct.value).epsilon(1e-12));
  CHECK(r.plan.set() == direct.set);
}

TEST_CASE("xos lambda presets") {
  CHECK(xos_lambda_analysis(4) == doctest::Approx(1000.0 * std::log(4.0)).epsilon(1e-12));
  CHECK(xos_lambda_desk(4) == doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-12));
  CHECK(xos_lambda_desk(1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const XosFunction f(std::vector<std::vector<double>>{{1.0}});
  const GroundSet g(1, 0.5);
  const CardinalityConstraint c(1, 1);
  CHECK_THROWS_AS(xos_algorithm1(f, g, c, 0.0), PreconditionError);
}
