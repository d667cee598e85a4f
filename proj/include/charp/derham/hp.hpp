#pragma once

#include <optional>
#include <string>

#include "charp/derham/complex.hpp"

namespace charp {

/// A class in H_p^{d+1}(k) = coker(C^{-1} - pi : Omega^d -> Omega^d / B^d).
/// Omega^d / B^d is one-dimensional over k^p along dt/t, so the class is held
/// as the p-th root c of that coordinate: f dt/t has c = a_0(f).
/// For d = 0 c is the scalar itself, an element of F_q.
struct HpClass {
  RatFieldPtr K;
  int degree = 1;
  RatFn c;
};

enum class HpVerdict { ProvenEqual, ProvenDistinct, Unknown };

inline std::string verdict_name(HpVerdict v) {
  switch (v) {
    case HpVerdict::ProvenEqual: return "proven-equal";
    case HpVerdict::ProvenDistinct: return "proven-distinct";
    default: return "unknown";
  }
}

struct HpComparison {
  HpVerdict verdict = HpVerdict::Unknown;
  /// xi with (C^{-1} - pi)(xi dt_{1..d}/t_{1..d}) = pi(w - w'); for d = 0, xi^p - xi = x - x'
  std::optional<RatFn> witness;
};

inline constexpr int kDefaultWitnessCap = 6;

inline HpClass lambda_k(const DeRhamComplex& C, const DiffForm& w) {
  const int d = C.d();
  if (w.degree() != d) throw DegreeMismatch("lambda_k needs a form of degree " + std::to_string(d));
  const Subset top = d == 0 ? 0 : (Subset{1} << d) - 1;
  RatFn f = w.coeff(top);
  if (d == 0) {
    if (!f.is_constant()) throw InvalidArgument("degree-0 class over F_q needs a constant");
    return HpClass{C.field(), 1, f};
  }
  FormClass cls = C.project(w);
  return HpClass{C.field(), d + 1, cls.coords[0]};
}

/// does (C^{-1} - pi)(xi dt/t) equal the class with coordinate target?
inline bool verify_hp_witness(const DeRhamComplex& C, const RatFn& xi, const RatFn& target) {
  const int d = C.d();
  const auto& K = C.field();
  if (d == 0) return xi.frobenius() - xi == target;
  const Subset top = (Subset{1} << d) - 1;
  DiffForm form = DiffForm::basis(xi, top);
  FormClass lhs = C.inverse_cartier(form) - C.project(form);
  std::vector<RatFn> tc(C.grid(d).size(), RatFn(K));
  tc[0] = target;
  return lhs == C.reduce_coords(d, std::move(tc));
}

/// Decide a == b. d = 0 is exact via the trace; for d >= 1 a witness is searched
/// by peeling off pi_0 roots, at most cap steps, then re-verified.
inline HpComparison compare(const DeRhamComplex& C, const HpClass& a, const HpClass& b,
                            int cap = kDefaultWitnessCap) {
  const auto& K = C.field();
  const auto& F = K->gf();
  RatFn target = a.c - b.c;
  HpComparison out;
  if (C.d() == 0) {
    auto as = artin_schreier(F, target.constant_value());
    if (as.solution) {
      out.verdict = HpVerdict::ProvenEqual;
      out.witness = RatFn::constant(K, *as.solution);
    } else {
      out.verdict = HpVerdict::ProvenDistinct;
    }
    return out;
  }
  // want xi - a_0(xi) = target; xi = c + eta reduces to eta - a_0(eta) = a_0(c)
  RatFn xi(K);
  RatFn cur = target;
  for (int step = 0; step <= cap; ++step) {
    if (cur.is_zero()) break;
    if (cur.is_constant()) {
      // constant xi: xi - xi^{1/p} = cur, i.e. y^p - y = cur with xi = y^p
      auto as = artin_schreier(F, cur.constant_value());
      if (!as.solution) return out;
      xi += RatFn::constant(K, F.frobenius(*as.solution));
      cur = RatFn(K);
      break;
    }
    if (step == cap) return out;
    xi += cur;
    RatFn next = pi0_root(cur);
    if (next == cur) return out;
    cur = next;
  }
  if (!cur.is_zero() || !verify_hp_witness(C, xi, target)) return out;
  out.verdict = HpVerdict::ProvenEqual;
  out.witness = xi;
  return out;
}

inline HpComparison is_zero_class(const DeRhamComplex& C, const HpClass& a, int cap = kDefaultWitnessCap) {
  return compare(C, a, HpClass{a.K, a.degree, RatFn(a.K)}, cap);
}

}  // namespace charp
