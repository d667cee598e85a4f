#pragma once

#include <array>
#include <string>
#include <vector>

#include "charp/finab/exact.hpp"

namespace charp {

/// Four pairings phi_i : A_i x B_i -> Q/Z with u_i : A_i -> A_{i+1},
/// v_i : B_{i+1} -> B_i and phi_i(a, v_i b) = sign_i phi_{i+1}(u_i a, b)
/// (indices 0..3 here stand for 1..4).
struct PairingLadder {
  std::array<FinPairing, 4> phi;
  std::array<FinHom, 3> u;
  std::array<FinHom, 3> v;
  std::array<int, 3> sign{1, 1, 1};
};

inline void check_ladder(const PairingLadder& L) {
  for (int i = 0; i < 3; ++i) {
    const auto& A = L.phi[i].left();
    const auto& B1 = L.phi[i + 1].right();
    if (L.u[i].domain() != A || L.u[i].codomain() != L.phi[i + 1].left())
      throw InvalidArgument("u_" + std::to_string(i + 1) + " has the wrong groups");
    if (L.v[i].domain() != B1 || L.v[i].codomain() != L.phi[i].right())
      throw InvalidArgument("v_" + std::to_string(i + 1) + " has the wrong groups");
    if (L.sign[i] != 1 && L.sign[i] != -1) throw InvalidArgument("signs must be +1 or -1");
    for (std::size_t a = 0; a < A.rank(); ++a)
      for (std::size_t b = 0; b < B1.rank(); ++b) {
        QZ lhs = L.phi[i](A.generator(a), L.v[i](B1.generator(b)));
        QZ rhs = L.sign[i] * L.phi[i + 1](L.u[i](A.generator(a)), B1.generator(b));
        if (lhs != rhs)
          throw NotCommutative("square " + std::to_string(i + 1) + " fails on generators (" + std::to_string(a) +
                               ", " + std::to_string(b) + ")");
      }
  }
}

struct FourLemmaPart {
  bool hypotheses = false;
  std::vector<std::string> failed;  // names of failing hypotheses
  bool conclusion = false;          // computed directly, whatever the hypotheses
  bool consistent() const { return !hypotheses || conclusion; }
};

struct FourLemmaReport {
  FourLemmaPart right;  // phi_2 nondegenerate on the right
  FourLemmaPart left;   // phi_3 nondegenerate on the left
};

inline FourLemmaReport four_lemma_check(const PairingLadder& L) {
  check_ladder(L);
  std::array<PairingAnalysis, 4> an;
  for (int i = 0; i < 4; ++i) an[i] = pairing_analysis(L.phi[i]);
  auto need = [](FourLemmaPart& p, bool ok, const char* name) {
    if (!ok) p.failed.emplace_back(name);
  };
  FourLemmaReport r;
  need(r.right, an[0].nondeg_right, "phi1 nondegenerate on the right");
  need(r.right, an[2].nondeg_right, "phi3 nondegenerate on the right");
  need(r.right, an[3].nondeg_left, "phi4 nondegenerate on the left");
  need(r.right, L.v[1].image().contains(L.v[0].kernel()), "ker v1 in im v2");
  need(r.right, L.v[1].kernel().contains(L.v[2].image()), "im v3 in ker v2");
  need(r.right, L.u[1].kernel() == L.u[0].image(), "ker u2 = im u1");
  r.right.hypotheses = r.right.failed.empty();
  r.right.conclusion = an[1].nondeg_right;

  need(r.left, an[1].nondeg_left, "phi2 nondegenerate on the left");
  need(r.left, an[3].nondeg_left, "phi4 nondegenerate on the left");
  need(r.left, an[0].nondeg_right, "phi1 nondegenerate on the right");
  need(r.left, L.u[1].image().contains(L.u[2].kernel()), "ker u3 in im u2");
  need(r.left, L.u[1].kernel().contains(L.u[0].image()), "im u1 in ker u2");
  need(r.left, L.v[1].kernel() == L.v[2].image(), "ker v2 = im v3");
  r.left.hypotheses = r.left.failed.empty();
  r.left.conclusion = an[2].nondeg_left;
  return r;
}

/// Exact row A_1 -> A_2 -> A_3 -> A_4, B_i = A_i* with v_i = u_i*, and phi_i a
/// signed evaluation pairing so the squares commute up to the chosen signs.
/// Optionally A_1 and B_4 are padded with a summand the maps and pairings ignore.
inline PairingLadder random_ladder(Rng& rng, long long max_order = 16) {
  ExactTriple t = random_exact_triple(rng, max_order);
  // extend to four terms: A_4 = A_3 / im(g)
  FinHom u3 = projection(t.g.image());
  std::array<FinHom, 3> u{t.f, t.g, u3};
  PairingLadder L;
  std::array<int, 4> sigma{1, 1, 1, 1};
  for (int i = 0; i < 3; ++i) {
    L.sign[i] = rng.coin() ? 1 : -1;
    sigma[i + 1] = sigma[i] * L.sign[i];
  }
  for (int i = 0; i < 4; ++i) {
    const FinAb& A = i == 0 ? u[0].domain() : u[i - 1].codomain();
    // phi_i(a, chi) = sigma_i chi(a): left A, right A*
    std::vector<std::vector<QZ>> val(A.rank(), std::vector<QZ>(A.rank()));
    for (std::size_t k = 0; k < A.rank(); ++k) val[k][k] = QZ(sigma[i], A.factor(k));
    L.phi[i] = FinPairing(A, dual_group(A), val);
  }
  for (int i = 0; i < 3; ++i) {
    L.u[i] = u[i];
    L.v[i] = dual_hom(u[i]);
  }
  if (rng.below(3) == 0) {
    // pad A_1 with a summand in the left kernel
    FinAb extra = random_group(rng, 4);
    DirectSum s = direct_sum(L.phi[0].left(), extra);
    const auto& B = L.phi[0].right();
    std::vector<std::vector<QZ>> val(s.sum.rank(), std::vector<QZ>(B.rank()));
    for (std::size_t k = 0; k < s.sum.rank(); ++k) {
      Elem a = s.pr1(s.sum.generator(k));
      for (std::size_t j = 0; j < B.rank(); ++j) val[k][j] = L.phi[0](a, B.generator(j));
    }
    L.phi[0] = FinPairing(s.sum, B, val);
    L.u[0] = L.u[0].after(s.pr1);
  }
  if (rng.below(3) == 0) {
    // pad B_4 with a summand in the right kernel
    FinAb extra = random_group(rng, 4);
    const auto& A = L.phi[3].left();
    DirectSum s = direct_sum(L.phi[3].right(), extra);
    std::vector<std::vector<QZ>> val(A.rank(), std::vector<QZ>(s.sum.rank()));
    for (std::size_t j = 0; j < s.sum.rank(); ++j) {
      Elem b = s.pr1(s.sum.generator(j));
      for (std::size_t k = 0; k < A.rank(); ++k) val[k][j] = L.phi[3](A.generator(k), b);
    }
    L.phi[3] = FinPairing(A, s.sum, val);
    L.v[2] = L.v[2].after(s.pr1);
  }
  return L;
}

}  // namespace charp
