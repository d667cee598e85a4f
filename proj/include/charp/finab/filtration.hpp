#pragma once

#include <optional>
#include <vector>

#include "charp/finab/pairing.hpp"

namespace charp {

/// pairing induced by phi on (A_top / A_bottom) x (B_top / B_bottom); the
/// caller guarantees A_bottom _|_ B_top and A_top _|_ B_bottom
inline FinPairing induced_pairing(const FinPairing& phi, const Subquotient& qa, const Subquotient& qb) {
  std::vector<std::vector<QZ>> val(qa.group.rank(), std::vector<QZ>(qb.group.rank()));
  for (std::size_t i = 0; i < qa.group.rank(); ++i)
    for (std::size_t j = 0; j < qb.group.rank(); ++j) val[i][j] = phi(qa.lifts[i], qb.lifts[j]);
  return FinPairing(qa.group, qb.group, val);
}

inline bool orthogonal(const FinPairing& phi, const Subgroup& H, const Subgroup& K) {
  for (const auto& a : H.generators())
    for (const auto& b : K.generators())
      if (!phi(a, b).is_zero()) return false;
  return true;
}

struct FiltrationLevel {
  int i = 0;
  bool graded_left = false, graded_right = false;    // (A_i/A_{i+1}) x (B_i/B_{i-1})
  bool partial_left = false, partial_right = false;  // (A/A_{i+1}) x B_i
};

struct FiltrationReport {
  std::vector<FiltrationLevel> levels;
  bool graded_all_nondegenerate = false;
  std::optional<int> failing_level;  // first level whose graded piece is degenerate
  bool direct_left = false, direct_right = false;
  /// the inductive route's answer agrees with the direct one
  bool consistent() const { return !graded_all_nondegenerate || (direct_left && direct_right); }
};

/// A_0 = A >= A_1 >= ... (missing tail = 0), B_0 <= B_1 <= ... (missing tail = B),
/// B_{-1} = 0 and A_i _|_ B_{i-1}
inline FiltrationReport filtration_propagation_check(const FinPairing& phi, std::vector<Subgroup> Af,
                                                     std::vector<Subgroup> Bf) {
  const FinAb& A = phi.left();
  const FinAb& B = phi.right();
  for (const auto& H : Af)
    if (H.ambient() != A) throw BadFiltration("A-filtration lives in another group");
  for (const auto& H : Bf)
    if (H.ambient() != B) throw BadFiltration("B-filtration lives in another group");
  if (Af.empty() || Af.front() != Subgroup::whole(A)) throw BadFiltration("A_0 must be A");
  const std::size_t n = std::max(Af.size(), Bf.size()) + 1;
  while (Af.size() < n) Af.push_back(Subgroup::trivial(A));
  while (Bf.size() < n) Bf.push_back(Subgroup::whole(B));
  if (!Af.back().is_trivial()) throw BadFiltration("A-filtration does not reach 0");
  if (Bf.back() != Subgroup::whole(B)) throw BadFiltration("B-filtration does not exhaust B");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!Af[i].contains(Af[i + 1])) throw BadFiltration("A-filtration is not decreasing at " + std::to_string(i));
    if (!Bf[i + 1].contains(Bf[i])) throw BadFiltration("B-filtration is not increasing at " + std::to_string(i));
    if (!orthogonal(phi, Af[i + 1], Bf[i]))
      throw BadFiltration("A_" + std::to_string(i + 1) + " is not orthogonal to B_" + std::to_string(i));
  }
  const Subgroup Bzero = Subgroup::trivial(B);
  const Subgroup Awhole = Subgroup::whole(A);

  FiltrationReport rep;
  rep.graded_all_nondegenerate = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    FiltrationLevel lv;
    lv.i = static_cast<int>(i);
    const Subgroup& Bprev = i == 0 ? Bzero : Bf[i - 1];
    auto g = pairing_analysis(induced_pairing(phi, subquotient(Af[i], Af[i + 1]), subquotient(Bf[i], Bprev)));
    lv.graded_left = g.nondeg_left;
    lv.graded_right = g.nondeg_right;
    auto part = pairing_analysis(induced_pairing(phi, subquotient(Awhole, Af[i + 1]), subquotient(Bf[i], Bzero)));
    lv.partial_left = part.nondeg_left;
    lv.partial_right = part.nondeg_right;
    if (!(lv.graded_left && lv.graded_right)) {
      rep.graded_all_nondegenerate = false;
      if (!rep.failing_level) rep.failing_level = lv.i;
    }
    rep.levels.push_back(lv);
  }
  auto d = pairing_analysis(phi);
  rep.direct_left = d.nondeg_left;
  rep.direct_right = d.nondeg_right;
  return rep;
}

}  // namespace charp
