#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "probing/analysis.hpp"
#include "probing/fmax.hpp"
#include "probing/rng.hpp"

namespace probing {

namespace {

std::string describe(const char* what, std::uint64_t seed, int iteration) {
  std::ostringstream os;
  os << what << " (seed " << seed << ", iteration " << iteration << ")";
  return os.str();
}

SuiteResult suite_stem(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "stem";
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const int len = 1 + (int)rng.below(50);
    std::vector<double> a(len);
    for (double& x : a) {
      const double u = rng.next_real();
      x = u < 0.05 ? 0.0 : (u > 0.95 ? 1.0 : rng.next_real());
    }
    ++r.checked;
    if (!stem_inequality(a).holds) {
      r.passed = false;
      r.witness = describe("stem inequality violated", seed, t);
      return r;
    }
  }
  // Near-tight regime: constant hazard eps over a long stem drives the
  // ratio lhs / sum_i a_i prod b_j down to 1/2 + O(eps).
  const auto tight = stem_inequality(std::vector<double>(1000, 0.01));
  const double ratio = tight.lhs / (2.0 * tight.rhs);
  ++r.checked;
  if (!(ratio >= 0.50 && ratio <= 0.51)) {
    r.passed = false;
    r.witness = "tightness ratio " + std::to_string(ratio) + " outside [0.50, 0.51]";
  }
  return r;
}

SuiteResult suite_stemmass(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "stemmass";
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const int len = 1 + (int)rng.below(8);
    std::vector<double> probs(len), values(len);
    for (double& p : probs) p = rng.uniform(0.05, 1.0);
    for (int i = 0; i < len; ++i) {
      const double u = rng.next_real();
      if (u < 0.2)
        values[i] = 0.0;
      else if (u < 0.5 && i > 0)
        values[i] = values[rng.below(i)];  // deliberate ties across levels
      else
        values[i] = rng.uniform(0.0, 2.0);
    }
    const auto res = stemmass_check(probs, values);
    ++r.checked;
    if (std::abs(res.lhs_closed - res.lhs_brute) > 1e-12 ||
        std::abs(res.exit_mass_closed - res.exit_mass_brute) > 1e-12) {
      r.passed = false;
      r.witness = describe("closed form disagrees with enumeration", seed, t);
      return r;
    }
    if (!res.holds) {
      r.passed = false;
      r.witness = describe("stem mass inequality violated", seed, t);
      return r;
    }
  }
  return r;
}

SuiteResult suite_feige(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "feige";
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const int n = 4 + (int)rng.below(5);
    const std::uint64_t s = rng.next_u64();
    const auto inst = t % 2 == 0 ? gen_random_coverage(n, s) : gen_random_cut(n, s);
    const SetFunction& f = *inst.objective;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      const Subset sub = Subset::of_bits(mask);
      const double top = fmax(f, sub);
      const double est = fmax_half_estimate(f, sub);
      ++r.checked;
      if (est < 0.25 * top - 1e-9 || est > top + 1e-9) {
        r.passed = false;
        r.witness = describe("half-sampling sandwich violated", seed, t) + " at " + sub.to_string();
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_bfns(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "bfns";
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const int n = 3 + (int)rng.below(5);
    const std::uint64_t s = rng.next_u64();
    const auto inst = t % 2 == 0 ? gen_random_cut(n, s) : gen_random_coverage(n, s);
    const Subset base = Subset::of_bits(rng.below(std::uint32_t{1} << n));
    std::vector<double> probs(n);
    for (double& p : probs) p = rng.next_real();
    const auto res = bfns_check(*inst.objective, base, probs);
    ++r.checked;
    if (!res.holds) {
      r.passed = false;
      r.witness = describe("sampling lower bound violated", seed, t) + " base " + base.to_string();
      return r;
    }
  }
  return r;
}

ConstraintPtr random_constraint_for(int n, Rng& rng) {
  if (rng.bernoulli(0.5)) {
    return std::make_shared<CardinalityConstraint>(n, 1 + (int)rng.below(n));
  }
  const int num_parts = 1 + (int)rng.below(3);
  std::vector<int> parts(n);
  for (int& p : parts) p = (int)rng.below(num_parts);
  std::vector<int> caps(num_parts);
  for (int& c : caps) c = 1 + (int)rng.below(2);
  return std::make_shared<PartitionMatroidConstraint>(parts, caps);
}

SuiteResult suite_factor3(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "factor3";
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const int n = 3 + (int)rng.below(6);
    auto inst = gen_random_coverage(n, rng.next_u64());
    inst.constraint = random_constraint_for(n, rng);
    const auto tree = random_tree(*inst.constraint, rng.next_u64(), 25);
    const double adap = adap_value(tree, *inst.objective, inst.ground);
    const double alg = alg_value(tree, *inst.objective, inst.ground);
    ++r.checked;
    if (alg < adap / 3.0 - 1e-9) {
      r.passed = false;
      r.witness = describe("factor-3 tree bound violated", seed, t);
      return r;
    }
  }
  return r;
}

SuiteResult suite_factor40(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "factor40";
  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < count; ++t) {
    const int n = 3 + (int)rng.below(5);
    const auto inst = gen_random_cut(n, rng.next_u64(), 1 + (int)rng.below(n));
    const double adap = opt_adaptive(inst).value;
    const double nonadap = opt_nonadaptive(inst).value;
    ++r.checked;
    if (nonadap < adap / 40.0 - 1e-9) {
      r.passed = false;
      r.witness = describe("factor-40 bound violated", seed, t);
      return r;
    }
    if (adap > 0.0) worst = std::min(worst, nonadap / adap);
  }
  std::ostringstream os;
  os << "worst nonadaptive/adaptive ratio " << worst;
  r.witness = os.str();
  return r;
}

SuiteResult suite_fact(std::uint64_t seed, int count) {
  SuiteResult r;
  r.suite = "fact";
  Rng rng(seed);
  auto random_atoms = [&]() {
    const int size = 1 + (int)rng.below(4);
    Atoms a(size);
    double total = 0.0;
    for (auto& [v, p] : a) {
      v = rng.uniform(0.0, 3.0);
      p = rng.uniform(0.1, 1.0);
      total += p;
    }
    for (auto& atom : a) atom.second /= total;
    return a;
  };
  for (int t = 0; t < count; ++t) {
    const auto res = disjointify_fact_check(random_atoms(), random_atoms(), random_atoms());
    ++r.checked;
    if (!res.holds) {
      r.passed = false;
      r.witness = describe("decoupling fact violated", seed, t);
      return r;
    }
  }
  return r;
}

const std::map<std::string, std::pair<SuiteResult (*)(std::uint64_t, int), int>>& suite_table() {
  static const std::map<std::string, std::pair<SuiteResult (*)(std::uint64_t, int), int>> table = {
      {"stem", {suite_stem, 10000}},   {"stemmass", {suite_stemmass, 1000}},
      {"feige", {suite_feige, 50}},    {"bfns", {suite_bfns, 200}},
      {"factor3", {suite_factor3, 200}}, {"factor40", {suite_factor40, 50}},
      {"fact", {suite_fact, 1000}},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : suite_table()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count) {
  if (name == "all") {
    SuiteResult merged;
    merged.suite = "all";
    for (const auto& [sub, entry] : suite_table()) {
      const auto res = entry.first(Rng(seed).split(std::hash<std::string>{}(sub)).next_u64(),
                                   count > 0 ? count : entry.second);
      merged.checked += res.checked;
      if (!res.passed && merged.passed) {
        merged.passed = false;
        merged.witness = sub + ": " + res.witness;
      }
    }
    return merged;
  }
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw PreconditionError("unknown suite: " + name);
  return it->second.first(seed, count > 0 ? count : it->second.second);
}

}  // namespace probing
