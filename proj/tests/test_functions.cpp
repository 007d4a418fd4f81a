#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "oracles.hpp"
#include "probing/fmax.hpp"
#include "probing/rng.hpp"
#include "probing/set_function.hpp"
#include "probing/verify.hpp"

using namespace probing;

namespace {

// Random non-negative table with f(empty) = 0.
TableFunction random_table(int n, std::uint64_t seed, FnClass declared = FnClass::arbitrary) {
  Rng rng(seed);
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::size_t i = 1; i < values.size(); ++i) values[i] = rng.uniform(0.0, 1.0);
  return TableFunction(n, std::move(values), declared);
}

}  // namespace

TEST_CASE("coverage function evaluates union weight") {
  const CoverageFunction f({2.0, 3.0, 5.0}, {{0, 1}, {1}, {2}});
  CHECK(f(Subset::none()) == 0.0);
  CHECK(f(Subset::single(0)) == 5.0);
  CHECK(f(Subset::single(1)) == 3.0);
  CHECK(f(Subset::of_bits(0b011)) == 5.0);
  CHECK(f(Subset::full(3)) == 10.0);
  const auto audit = audit_fn_class(f);
  CHECK(audit.ok);
  CHECK(f.element_items() == std::vector<std::vector<int>>{{0, 1}, {1}, {2}});
}

TEST_CASE("table function validates shape") {
  CHECK_THROWS_AS(TableFunction(2, {0.0, 1.0}, FnClass::arbitrary), PreconditionError);
  CHECK_THROWS_AS(TableFunction(1, {0.5, 1.0}, FnClass::arbitrary), PreconditionError);
  const TableFunction f(2, {0.0, 1.0, 2.0, 2.5}, FnClass::monotone_submodular);
  CHECK(f(Subset::of_bits(0b10)) == 2.0);
  CHECK(audit_fn_class(f).ok);
}

TEST_CASE("class audit rejects a wrong tag") {
  // 0-1-0 spike: monotone fails, submodularity fails on the complement side.
  const TableFunction spike(2, {0.0, 1.0, 1.0, 0.0}, FnClass::monotone_submodular);
  CHECK(!audit_fn_class(spike).ok);
  const TableFunction ok_sub(2, {0.0, 1.0, 1.0, 0.0}, FnClass::submodular);
  CHECK(audit_fn_class(ok_sub).ok);
}

TEST_CASE("xos function is max of rows and equals its own fmax") {
  const XosFunction f({{1.0, 0.0, 2.0}, {0.5, 2.5, 0.0}});
  CHECK(f(Subset::none()) == 0.0);
  CHECK(f(Subset::single(1)) == 2.5);
  CHECK(f(Subset::of_bits(0b101)) == 3.0);
  CHECK(f.max_coef(0) == 1.0);
  CHECK(f.max_coef(1) == 2.5);
  CHECK(f.linear_value(0, Subset::of_bits(0b101)) == 3.0);
  CHECK_THROWS_AS(XosFunction(std::vector<std::vector<double>>{{-0.5}}), PreconditionError);

  // Non-negative XOS is monotone, so f^max coincides with f.
  for (std::uint32_t m = 0; m < 8; ++m) {
    const Subset s = Subset::of_bits(m);
    CHECK(fmax(f, s) == doctest::Approx(f(s)).epsilon(1e-12));
  }
  CHECK(audit_fn_class(f).ok);
  CHECK(xos_of_fmax(f).ok);
}

TEST_CASE("partition rank function") {
  const PartitionRankFunction f({0, 0, 1, 1}, {1, 2});
  CHECK(f(Subset::of_bits(0b0011)) == 1.0);
  CHECK(f(Subset::of_bits(0b1111)) == 3.0);
  CHECK(audit_fn_class(f).ok);
}

TEST_CASE("cut function is submodular but not monotone") {
  const CutFunction f(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  CHECK(f(Subset::none()) == 0.0);
  CHECK(f(Subset::single(1)) == 3.0);
  CHECK(f(Subset::full(3)) == 0.0);
  CHECK(audit_fn_class(f).ok);
  CHECK(!verify_monotone(f).ok);
  CHECK_THROWS_AS(CutFunction(2, {{0, 0, 1.0}}), PreconditionError);
}

TEST_CASE("all types function is the indicator of full type coverage") {
  const AllTypesFunction f({0, 0, 1});
  CHECK(f(Subset::of_bits(0b011)) == 0.0);
  CHECK(f(Subset::of_bits(0b101)) == 1.0);
  CHECK(f(Subset::full(3)) == 1.0);
  CHECK(f.num_types() == 2);
  CHECK_THROWS_AS(AllTypesFunction({0, 2}), PreconditionError);
}

TEST_CASE("contracted function is the marginal and composes") {
  auto f = std::make_shared<CoverageFunction>(
      CoverageFunction({2.0, 3.0, 5.0, 1.0}, {{0, 1}, {1}, {2}, {3}}));
  const Subset a = Subset::single(0);
  auto fa = contract(f, a);
  CHECK((*fa)(Subset::none()) == 0.0);
  CHECK((*fa)(Subset::single(1)) == 0.0);
  CHECK((*fa)(Subset::single(2)) == 5.0);
  CHECK(fa->fn_class() == FnClass::monotone_submodular);

  const Subset b = Subset::single(2);
  auto fab = contract(fa, b);
  auto fab_direct = contract(f, a | b);
  for (std::uint32_t m = 0; m < 16; ++m) {
    const Subset s = Subset::of_bits(m);
    CHECK((*fab)(s) == doctest::Approx((*fab_direct)(s)).epsilon(1e-12));
  }
}

TEST_CASE("fmax agrees with brute force on random tables") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_table(6, 100 + seed);
    for (std::uint32_t m = 0; m < 64; m += 3) {
      const Subset s = Subset::of_bits(m);
      CHECK(fmax(f, s) == doctest::Approx(oracles::brute_fmax(f, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fmax is monotone in the probed set even for non-monotone f") {
  const CutFunction f(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 0.5}});
  for (std::uint32_t m = 0; m < 16; ++m)
    for (int e = 0; e < 4; ++e) {
      const Subset s = Subset::of_bits(m);
      if (s.contains(e)) continue;
      CHECK(fmax(f, s.with(e)) >= fmax(f, s) - 1e-12);
    }
}

TEST_CASE("fmax witness is the lexicographically smallest maximizer") {
  // Two maximizers {0} and {1}: witness must pick {0}.
  const TableFunction f(2, {0.0, 1.0, 1.0, 1.0}, FnClass::arbitrary);
  const auto [v, w] = fmax_witness(f, Subset::full(2));
  CHECK(v == 1.0);
  CHECK(w == Subset::single(0));
}

TEST_CASE("fmax table and cache agree with pointwise fmax") {
  const auto f = random_table(7, 4242);
  const Subset base = Subset::of_bits(0b1011011);
  const SubsetIndex idx(base);
  const auto table = fmax_table(f, idx);
  FmaxCache cache(f);
  for (std::uint32_t m = 0; m < idx.table_size(); ++m) {
    const Subset s = idx.expand(m);
    const double direct = fmax(f, s);
    CHECK(table[m] == doctest::Approx(direct).epsilon(1e-12));
    CHECK(cache.value(s) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("half-activation sandwich on a single cut edge") {
  const CutFunction f(2, {{0, 1, 1.0}});
  const Subset s = Subset::full(2);
  CHECK(fmax(f, s) == 1.0);
  CHECK(fmax_half_estimate(f, s) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fmax_half_estimate(f, s) >= 0.25 * fmax(f, s) - 1e-9);
  CHECK(fmax_half_estimate(f, s) <= fmax(f, s) + 1e-9);
}

TEST_CASE("sampled half-activation estimate is close to exact") {
  const auto f = random_table(8, 99);
  const Subset s = Subset::full(8);
  const double exact = fmax_half_estimate(f, s);
  const double sampled = fmax_half_sampled(f, s, 2024, 200000);
  CHECK(sampled == doctest::Approx(exact).epsilon(0.02));
}

TEST_CASE("verifiers detect planted violations") {
  // Supermodular pair bonus.
  const TableFunction super(2, {0.0, 0.2, 0.2, 1.0}, FnClass::arbitrary);
  CHECK(!verify_submodular(super).ok);
  CHECK(verify_monotone(super).ok);
  CHECK(verify_nonnegative(super).ok);

  const TableFunction dip(2, {0.0, 1.0, 0.5, 0.4}, FnClass::arbitrary);
  CHECK(!verify_monotone(dip).ok);
}
