#include "probing/verify.hpp"

#include <cmath>
#include <vector>

#include "probing/fmax.hpp"

namespace probing {

std::string VerifyResult::to_string() const {
  if (ok) return "ok";
  return "violated at " + a.to_string() + " / " + b.to_string();
}

namespace {

void check_verify_size(const SetFunction& f, const char* what) {
  if (f.n() > kMaxVerifyN)
    throw EnumerationLimitError(std::string(what) + ": n exceeds " +
                                std::to_string(kMaxVerifyN));
}

std::vector<double> full_table(const SetFunction& f) {
  const std::size_t size = std::size_t{1} << f.n();
  std::vector<double> t(size);
  for (std::uint32_t m = 0; m < size; ++m) t[m] = f.eval(Subset::of_bits(m));
  return t;
}

}  // namespace

VerifyResult verify_submodular(const SetFunction& f, double tol) {
  check_verify_size(f, "verify_submodular");
  const auto t = full_table(f);
  const std::uint32_t size = std::uint32_t(t.size());
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = 0; b < size; ++b)
      if (t[a] + t[b] + tol < t[a | b] + t[a & b])
        return {false, Subset::of_bits(a), Subset::of_bits(b)};
  return {};
}

VerifyResult verify_monotone(const SetFunction& f, double tol) {
  check_verify_size(f, "verify_monotone");
  const auto t = full_table(f);
  const std::uint32_t size = std::uint32_t(t.size());
  for (std::uint32_t s = 0; s < size; ++s)
    for (int e = 0; e < f.n(); ++e) {
      if ((s >> e) & 1u) continue;
      const std::uint32_t up = s | (std::uint32_t{1} << e);
      if (t[up] + tol < t[s]) return {false, Subset::of_bits(s), Subset::of_bits(up)};
    }
  return {};
}

VerifyResult verify_nonnegative(const SetFunction& f, double tol) {
  check_verify_size(f, "verify_nonnegative");
  const std::uint32_t size = std::uint32_t{1} << f.n();
  for (std::uint32_t s = 0; s < size; ++s)
    if (f.eval(Subset::of_bits(s)) < -tol)
      return {false, Subset::of_bits(s), Subset::of_bits(s)};
  return {};
}

VerifyResult audit_fn_class(const SetFunction& f, double tol) {
  switch (f.fn_class()) {
    case FnClass::monotone_submodular: {
      if (auto r = verify_nonnegative(f, tol); !r.ok) return r;
      if (auto r = verify_monotone(f, tol); !r.ok) return r;
      return verify_submodular(f, tol);
    }
    case FnClass::submodular: {
      if (auto r = verify_nonnegative(f, tol); !r.ok) return r;
      return verify_submodular(f, tol);
    }
    case FnClass::xos: {
      if (auto r = verify_nonnegative(f, tol); !r.ok) return r;
      if (const auto* x = dynamic_cast<const XosFunction*>(&f)) {
        const auto r = xos_of_fmax(*x, tol);
        return {r.ok, r.a, r.b};
      }
      return verify_monotone(f, tol);
    }
    case FnClass::arbitrary:
      return verify_nonnegative(f, tol);
  }
  return {};
}

VerifyResult xos_of_fmax(const XosFunction& f, double tol) {
  check_verify_size(f, "xos_of_fmax");
  const std::uint32_t size = std::uint32_t{1} << f.n();
  for (std::uint32_t m = 0; m < size; ++m) {
    const Subset s = Subset::of_bits(m);
    if (std::abs(fmax(f, s) - f.eval(s)) > tol) return {false, s, s};
  }
  return {};
}

}  // namespace probing
