#pragma once

#include <optional>
#include <string>

#include "probing/set_function.hpp"

namespace probing {

// Exhaustive verifiers are capped at this ground size (the submodularity
// check walks all 4^n subset pairs).
inline constexpr int kMaxVerifyN = 12;

struct VerifyResult {
  bool ok = true;
  // First violating witness in scan order; meaning depends on the check:
  // (A, B) for submodularity, (S, S+e) for monotonicity, (S, S) otherwise.
  Subset a, b;
  std::string to_string() const;
};

// f(A) + f(B) >= f(A|B) + f(A&B) for all pairs, within tol.
VerifyResult verify_submodular(const SetFunction& f, double tol = 1e-9);

// f(S + e) >= f(S) for every cover, within tol.
VerifyResult verify_monotone(const SetFunction& f, double tol = 1e-9);

// f(S) >= 0 for every subset, within tol.
VerifyResult verify_nonnegative(const SetFunction& f, double tol = 1e-9);

// Checks the declared class tag of f: monotone_submodular and submodular
// imply non-negativity; xos requires f to equal its own f^max pointwise.
VerifyResult audit_fn_class(const SetFunction& f, double tol = 1e-9);

// For non-negative-coefficient XOS, f^max(f, S) = f(S) on every subset.
VerifyResult xos_of_fmax(const XosFunction& f, double tol = 1e-9);

}  // namespace probing
