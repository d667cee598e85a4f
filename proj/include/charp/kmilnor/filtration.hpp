#pragma once

#include <cstdint>

#include "charp/kmilnor/symbol.hpp"
#include "charp/kmilnor/valued.hpp"

namespace charp {

/// largest i with v(x - 1) >= i; 0 off the units, infinite-valuation sentinel for x = 1
inline std::int64_t unit_filtration_level(const ValuedField& V, const RatFn& x) {
  if (x.is_zero() || V.valuation(x) != 0) return 0;
  return V.valuation(x - RatFn::from_int(V.field(), 1));
}

struct Step3Data {
  std::int64_t n = 0;
  RatFn a, x;
  DiffForm lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// u = 1 + a pi^n with n >= 2, x = -a (1 - pi) pi^(n-1); compares dlog{u, pi}
/// with dlog{1 + x, 1 - pi - x pi}
inline Step3Data unit_step3(const ValuedField& V, const RatFn& u, const RatFn& pi) {
  const auto& K = V.field();
  if (pi.is_zero() || V.valuation(pi) != 1) throw InvalidArgument("pi is not a uniformizer");
  const RatFn one = RatFn::from_int(K, 1);
  Step3Data out;
  if (u == one) {
    out.n = RatFn::kInfiniteValuation;
    out.a = RatFn(K);
    out.x = RatFn(K);
  } else {
    out.n = unit_filtration_level(V, u);
    if (out.n < 2) throw BadUnit("v(u - 1) = " + std::to_string(out.n) + " < 2");
    out.a = (u - one) / pi.pow(out.n);
    out.x = -(out.a * (one - pi) * pi.pow(out.n - 1));
    if (one - out.x * pi / (one - pi) != u) throw std::logic_error("step-3 rewrite of u failed");
  }
  out.lhs = dlog(K, {u, pi});
  out.rhs = dlog(K, {one + out.x, one - pi - out.x * pi});
  return out;
}

inline bool unit_step3_identity(const ValuedField& V, const RatFn& u, const RatFn& pi) {
  return unit_step3(V, u, pi).holds();
}

/// residue of (x - 1) / t^i
inline RatFn graded_unit_map(const ValuedField& V, const RatFn& x, std::int64_t i) {
  if (i < 1) throw InvalidArgument("graded level must be >= 1");
  const std::int64_t lvl = unit_filtration_level(V, x);
  if (lvl < i) throw LevelTooLow("unit has level " + std::to_string(lvl) + " < " + std::to_string(i));
  return V.residue((x - RatFn::from_int(V.field(), 1)) * V.uniformizer().pow(-i));
}

}  // namespace charp
