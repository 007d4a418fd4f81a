#include "probing/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <set>

#include "probing/fmax.hpp"
#include "probing/outcomes.hpp"
#include "probing/rng.hpp"

namespace probing {

StemInequalityResult stem_inequality(const std::vector<double>& a, double tol) {
  StemInequalityResult r;
  double decay = 1.0;  // prod_{j<i} b_j
  for (double ai : a) {
    if (!(ai >= 0.0 && ai <= 1.0))
      throw PreconditionError("stem_inequality: entries must lie in [0,1]");
    r.lhs += ai * decay * decay;
    r.rhs += 0.5 * ai * decay;
    decay *= 1.0 - ai;
  }
  r.holds = r.lhs >= r.rhs - tol;
  return r;
}

namespace {

constexpr int kMaxStemLength = 16;

// sum_{i in W} p_i * prod_{j<i} q_j, the chance the walk exits at a
// W-element.
double level_exit_mass(const std::vector<double>& probs, const std::vector<bool>& in_level) {
  double total = 0.0, survive = 1.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (in_level[i]) total += probs[i] * survive;
    survive *= 1.0 - probs[i];
  }
  return total;
}

// sum_{i in W} p_i * prod_{j<i, j in W} q_j^2 * prod_{j<i, j not in W} q_j,
// the chance the fresh re-activation hits a W-element by the exit point.
double level_fresh_mass(const std::vector<double>& probs, const std::vector<bool>& in_level) {
  double total = 0.0, weight = 1.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double q = 1.0 - probs[i];
    if (in_level[i]) {
      total += probs[i] * weight;
      weight *= q * q;
    } else {
      weight *= q;
    }
  }
  return total;
}

}  // namespace

StemmassResult stemmass_check(const std::vector<double>& probs, const std::vector<double>& values,
                              double tol) {
  const int m = (int)probs.size();
  if ((int)values.size() != m) throw PreconditionError("stemmass_check: size mismatch");
  if (m > kMaxStemLength) throw EnumerationLimitError("stemmass_check: stem too long");
  for (double p : probs)
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("stemmass_check: bad probability");
  for (double v : values)
    if (!(v >= 0.0)) throw PreconditionError("stemmass_check: negative value");

  StemmassResult r;

  // Closed forms: integrate the level sets W_x = {i : f_i >= x} as finite
  // sums over the sorted distinct values.
  std::set<double> distinct(values.begin(), values.end());
  distinct.erase(0.0);
  double below = 0.0;
  for (double v : distinct) {
    std::vector<bool> in_level(m);
    for (int i = 0; i < m; ++i) in_level[i] = values[i] >= v;
    r.exit_mass_closed += (v - below) * level_exit_mass(probs, in_level);
    r.lhs_closed += (v - below) * level_fresh_mass(probs, in_level);
    below = v;
  }

  // Brute force over the exit index I and the fresh activation R of the
  // first I elements.
  double survive = 1.0;
  auto fresh_max = [&](int count) {
    // E[max_{j in R} f_j] over R containing each of the first `count`
    // elements independently.
    double total = 0.0;
    const std::uint32_t size = std::uint32_t{1} << count;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      double pr = 1.0, best = 0.0;
      for (int j = 0; j < count; ++j) {
        if ((mask >> j) & 1u) {
          pr *= probs[j];
          best = std::max(best, values[j]);
        } else {
          pr *= 1.0 - probs[j];
        }
      }
      total += pr * best;
    }
    return total;
  };
  for (int i = 0; i < m; ++i) {
    const double exit_here = probs[i] * survive;
    r.exit_mass_brute += exit_here * values[i];
    r.lhs_brute += exit_here * fresh_max(i + 1);
    survive *= 1.0 - probs[i];
  }
  r.lhs_brute += survive * fresh_max(m);  // walk reaches the end of the stem

  r.holds = r.lhs_closed >= 0.5 * r.exit_mass_closed - tol;
  return r;
}

BfnsResult bfns_check(const SetFunction& h, Subset base, const std::vector<double>& inclusion_probs,
                      double tol) {
  if ((int)inclusion_probs.size() != h.n())
    throw PreconditionError("bfns_check: probability size mismatch");
  const Subset nonbase = Subset::full(h.n()) - base;
  check_enumeration_size(nonbase, "bfns_check");
  double p_max = 0.0;
  for_each_element(nonbase, [&](int e) {
    const double p = inclusion_probs[e];
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("bfns_check: bad probability");
    p_max = std::max(p_max, p);
  });

  BfnsResult r;
  const auto elems = nonbase.to_vector();
  for_each_submask(nonbase, [&](Subset s) {
    double pr = 1.0;
    for (int e : elems) pr *= s.contains(e) ? inclusion_probs[e] : 1.0 - inclusion_probs[e];
    r.lhs += pr * h.eval(s | base);
  });
  r.rhs = (1.0 - p_max) * h.eval(base);
  r.holds = r.lhs >= r.rhs - tol;
  return r;
}

namespace {

void check_atoms(const Atoms& a, const char* what) {
  if (a.empty()) throw PreconditionError(std::string(what) + ": empty distribution");
  double total = 0.0;
  for (const auto& [v, p] : a) {
    if (!(v >= 0.0)) throw PreconditionError(std::string(what) + ": negative value");
    if (!(p >= 0.0)) throw PreconditionError(std::string(what) + ": negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw PreconditionError(std::string(what) + ": probabilities must sum to 1");
}

}  // namespace

FactResult disjointify_fact_check(const Atoms& x, const Atoms& y, const Atoms& z, double tol) {
  check_atoms(x, "disjointify_fact_check x");
  check_atoms(y, "disjointify_fact_check y");
  check_atoms(z, "disjointify_fact_check z");
  FactResult r;
  for (const auto& [xv, xp] : x)
    for (const auto& [yv, yp] : y)
      for (const auto& [zv, zp] : z) {
        r.lhs += xp * yp * zp * std::max(xv + yv, xv + zv);
        for (const auto& [xv2, xp2] : x)
          r.rhs += xp * yp * zp * xp2 * std::max(xv + yv, xv2 + zv);
      }
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

ConcentrationResult concentration_experiment(const Instance& inst, const StrategyTree& t,
                                             int samples, std::uint64_t seed, double opt) {
  const auto* xos = dynamic_cast<const XosFunction*>(inst.objective.get());
  if (!xos) throw PreconditionError("concentration_experiment: objective must be XOS");
  if (samples <= 0) throw PreconditionError("concentration_experiment: samples must be positive");
  validate_tree_shape(t, inst.n());

  const int width = xos->width();
  const double threshold = 0.1 * opt;
  const GroundSet& g = inst.ground;

  constexpr int kBlock = 4096;
  const int blocks = (samples + kBlock - 1) / kBlock;
  const Rng root(seed);

  auto run_block = [&](int b) {
    Rng rng = root.split((std::uint64_t)b);
    const int in_block = std::min(kBlock, samples - b * kBlock);
    std::vector<long> exceed(width, 0);
    for (int s = 0; s < in_block; ++s) {
      Subset active, path;
      int v = t.root();
      while (!t.node(v).leaf()) {
        const int e = t.node(v).elt;
        path = path.with(e);
        if (rng.bernoulli(g.p(e))) {
          active = active.with(e);
          v = t.node(v).yes;
        } else {
          v = t.node(v).no;
        }
      }
      for (int i = 0; i < width; ++i) {
        double realized = 0.0, mean = 0.0;
        for_each_element(path, [&](int e) {
          mean += g.p(e) * xos->coef(i, e);
          if (active.contains(e)) realized += xos->coef(i, e);
        });
        if (std::abs(realized - mean) > threshold) ++exceed[i];
      }
    }
    return exceed;
  };

  std::vector<std::future<std::vector<long>>> futures;
  futures.reserve(blocks);
  for (int b = 0; b < blocks; ++b)
    futures.push_back(std::async(std::launch::async, run_block, b));

  ConcentrationResult result;
  result.samples = samples;
  result.threshold = threshold;
  std::vector<long> total(width, 0);
  for (auto& fut : futures) {
    const auto part = fut.get();
    for (int i = 0; i < width; ++i) total[i] += part[i];
  }
  result.exceed_freq.resize(width);
  for (int i = 0; i < width; ++i) result.exceed_freq[i] = double(total[i]) / samples;
  return result;
}

GapReport gap_report(const Instance& inst, double lambda) {
  const auto start = std::chrono::steady_clock::now();
  GapReport report;
  report.family = inst.meta.family;
  report.seed = inst.meta.seed;
  report.n = inst.n();

  const auto adap = opt_adaptive(inst);
  report.adap_opt = adap.value;
  report.dp_states = adap.states_explored;
  report.natural_nonadaptive = natural_nonadaptive(adap.tree, *inst.objective, inst.ground);
  report.nonadap_opt = opt_nonadaptive(inst).value;

  if (inst.objective->fn_class() == FnClass::monotone_submodular &&
      (inst.constraint->kind() == ConstraintKind::cardinality ||
       inst.constraint->kind() == ConstraintKind::partition_matroid))
    report.greedy = greedy_nonadaptive(*inst.objective, inst.ground, *inst.constraint).value;

  if (const auto* xos = dynamic_cast<const XosFunction*>(inst.objective.get())) {
    const double lam = lambda > 0.0 ? lambda : xos_lambda_desk(xos->width());
    const auto alg1 = xos_algorithm1(*xos, inst.ground, *inst.constraint, lam);
    report.xos_alg1 = alg1.value;
    report.xos_oracle_calls = alg1.oracle_calls;
  }

  constexpr double kTol = 1e-9;
  if (report.nonadap_opt > report.adap_opt + kTol)
    report.violations.push_back("nonadaptive optimum exceeds adaptive optimum");
  if (report.natural_nonadaptive > report.nonadap_opt + kTol)
    report.violations.push_back("natural mimic exceeds nonadaptive optimum");
  if (report.greedy && *report.greedy > report.nonadap_opt + kTol)
    report.violations.push_back("greedy exceeds nonadaptive optimum");
  if (report.xos_alg1 && *report.xos_alg1 > report.nonadap_opt + kTol)
    report.violations.push_back("oracle algorithm exceeds nonadaptive optimum");

  switch (inst.objective->fn_class()) {
    case FnClass::monotone_submodular:
      report.bound_divisor = 3.0;
      break;
    case FnClass::submodular:
      report.bound_divisor = 40.0;
      break;
    default:
      break;
  }
  if (report.bound_divisor &&
      report.nonadap_opt < report.adap_opt / *report.bound_divisor - kTol) {
    report.bound_ok = false;
    report.violations.push_back("class factor bound violated");
  }

  report.gap_ratio = report.nonadap_opt > 0.0
                         ? report.adap_opt / report.nonadap_opt
                         : (report.adap_opt > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace probing
