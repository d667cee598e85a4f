#pragma once

#include <optional>

#include "charp/finab/four_lemma.hpp"
#include "charp/gcoh/cochain.hpp"
#include "charp/report.hpp"

namespace charp {

struct ShapiroReport {
  int n = 0;
  FinHom phi;  // H^n(G, Z[G/H] (x) M) -> H^n(H, M), p_1 o res
  FinHom psi;  // H^n(H, M) -> H^n(G, Z[G/H] (x) M), cores o j_1
  bool phi_psi_id = false;
  bool psi_phi_id = false;
  bool ok() const { return phi_psi_id && psi_phi_id; }
};

inline ShapiroReport shapiro_check(const SubgroupOf& S, const GModule& M, int n) {
  InducedModule ind = induced_module(S, M);
  GModule indH = ind.module.restrict_to(S), MH = M.restrict_to(S);
  GroupCohomology HG = cohomology(ind.module, n), HHind = cohomology(indH, n), HHM = cohomology(MH, n);
  FinHom res = restriction_map(S, HG, HHind);
  FinHom p1 = induced_map(HHind, HHM, ind.p1());
  FinHom j1 = induced_map(HHM, HHind, ind.j1());
  FinHom cores = corestriction_map(S, HHind, HG);
  ShapiroReport r{n, p1.after(res), cores.after(j1)};
  r.phi_psi_id = r.phi.after(r.psi) == FinHom::identity(HHM.group());
  r.psi_phi_id = r.psi.after(r.phi) == FinHom::identity(HG.group());
  return r;
}

/// cores o res = [G:H] on H^n(G, M)
inline bool cores_res_is_index(const SubgroupOf& S, const GModule& M, int n) {
  GroupCohomology HG = cohomology(M, n), HH = cohomology(M.restrict_to(S), n);
  FinHom c = corestriction_map(S, HH, HG).after(restriction_map(S, HG, HH));
  return c == FinHom::multiplication(HG.group(), S.index());
}

/// eta, a degree n and delta_G : H^n(G, eta) -> Q/Z; delta_H is defined as
/// delta_G o cores
class TraceTheory {
 public:
  TraceTheory(GModule eta, int n, std::optional<Character> delta = std::nullopt)
      : eta_(std::move(eta)), n_(n), H_(cohomology(eta_, n)) {
    if (!delta) {
      const FinAb& A = H_.group();
      if (A.rank() > 1) throw InvalidArgument("H^n(G, eta) is not cyclic; pass delta explicitly");
      delta = Character{};
      if (A.rank() == 1) delta->emplace_back(1, A.factor(0));
    }
    check_character(H_.group(), *delta);
    delta_ = *delta;
  }

  const GModule& eta() const { return eta_; }
  int degree() const { return n_; }
  const GroupCohomology& top() const { return H_; }
  const Character& delta_G() const { return delta_; }

  QZ delta(const Cochain& z) const { return evaluate(delta_, H_.class_of(z)); }

  /// delta_H on H^n(H, eta|_H), through the class-level corestriction
  Character delta_on(const SubgroupOf& S, const GroupCohomology& HH) const {
    FinHom c = corestriction_map(S, HH, H_);
    Character chi;
    for (std::size_t k = 0; k < HH.group().rank(); ++k) chi.push_back(evaluate(delta_, c(HH.group().generator(k))));
    return chi;
  }

  /// recheck delta_H(z) = delta_G(cores z) on random cocycles of H, with random
  /// coboundaries added and random transfer representatives
  SampleReport compatibility_check(const SubgroupOf& S, int samples, std::uint64_t seed) const {
    GroupCohomology HH = cohomology(eta_.restrict_to(S), n_);
    Character dH = delta_on(S, HH);
    Rng rng(seed);
    SampleReport rep;
    for (int s = 0; s < samples; ++s) {
      Elem cls = random_element(HH.group(), rng);
      Cochain z = HH.lift(cls);
      Elem b = HH.d_in(random_element(HH.d_in.domain(), rng));
      z.values = HH.cochains.add(z.values, b);
      QZ lhs = evaluate(dH, HH.class_of(z));
      QZ rhs = delta(corestrict_cochain(S, eta_, z, random_reps(S, rng)));
      ++rep.samples;
      if (lhs == rhs) {
        ++rep.passed;
      } else if (!rep.first_failure) {
        rep.first_failure = "sample " + std::to_string(s);
      }
    }
    return rep;
  }

 private:
  GModule eta_;
  int n_;
  GroupCohomology H_;
  Character delta_;
};

/// equivariant beta : M x N -> eta, with M placed in degree `shift` and N in -shift
struct ModulePairing {
  GModule M, N, eta;
  Bilinear beta;
  int shift = 0;

  void check() const {
    if (!is_equivariant(M, N, eta, beta)) throw InvalidArgument("pairing is not G-equivariant");
  }
};

inline ModulePairing shift_pairing(const ModulePairing& P, int s) {
  ModulePairing Q = P;
  Q.shift += s;
  return Q;
}

/// M_1 + M_2, N_1 + N_2 with the orthogonal sum of the pairings
inline ModulePairing orthogonal_sum(const ModulePairing& P, const ModulePairing& Q) {
  if (!(P.eta == Q.eta) || P.shift != Q.shift) throw InvalidArgument("orthogonal sum needs the same eta and shift");
  ModuleSum M = direct_sum(P.M, Q.M), N = direct_sum(P.N, Q.N);
  Bilinear b(M.module.module(), N.module.module(), P.eta.module());
  const FinAb& E = P.eta.module();
  for (std::size_t x = 0; x < M.module.module().rank(); ++x)
    for (std::size_t y = 0; y < N.module.module().rank(); ++y) {
      Elem gx = M.module.module().generator(x), gy = N.module.module().generator(y);
      b.set(x, y, E.add(P.beta(M.maps.pr1(gx), N.maps.pr1(gy)), Q.beta(M.maps.pr2(gx), N.maps.pr2(gy))));
    }
  return {M.module, N.module, P.eta, b, P.shift};
}

/// <x, y> = delta_G(x u y) on H^{i-s}(G, M) x H^{n-i+s}(G, N), times (-1)^{is}
inline FinPairing trace_pairing(const TraceTheory& T, const GroupCohomology& HM, const GroupCohomology& HN,
                                const ModulePairing& P, int i) {
  if (!(P.eta == T.eta())) throw InvalidArgument("pairing lands in a different module than the trace theory");
  Bilinear c = cup_classes(HM, HN, T.top(), P.beta);
  FinPairing f = c.with_character(T.delta_G());
  return (i * P.shift) % 2 ? f.scaled(-1) : f;
}

inline FinPairing trace_pairing(const TraceTheory& T, const ModulePairing& P, int i) {
  const int a = i - P.shift, b = T.degree() - i + P.shift;
  if (a < 0 || b < 0) {
    FinAb A = a < 0 ? FinAb() : cohomology(P.M, a).group();
    FinAb B = b < 0 ? FinAb() : cohomology(P.N, b).group();
    return FinPairing::zero(A, B);
  }
  return trace_pairing(T, cohomology(P.M, a), cohomology(P.N, b), P, i);
}

/// 0 -> M' -> M -> M'' -> 0 from a G-stable S <= M, with the dual sequence
/// 0 -> M''^ -> M^ -> M'^ -> 0 and evaluation pairings into eta = Z/m
struct PairedSequence {
  GModule Mp, M, Mpp;
  FinHom i, p;
  GModule Np, N, Npp;
  FinHom ihat, phat;  // N -> Np and Npp -> N
  ModulePairing Pp, P, Ppp;
};

inline PairedSequence paired_sequence(const GModule& M, const Subgroup& S, const GModule& eta) {
  if (!eta.is_trivial_action() || eta.module().rank() != 1) throw InvalidArgument("eta must be Z/m with trivial action");
  const long long m = eta.module().factor(0);
  Submodule sub = submodule(M, S);
  QuotientModule quo = quotient_module(M, S);
  PairedSequence q;
  q.Mp = sub.module;
  q.M = M;
  q.Mpp = quo.module;
  q.i = sub.incl;
  q.p = quo.proj;
  q.Np = dual_module(q.Mp);
  q.N = dual_module(q.M);
  q.Npp = dual_module(q.Mpp);
  q.ihat = dual_map(q.i);
  q.phat = dual_map(q.p);
  q.Pp = {q.Mp, q.Np, eta, evaluation_into(q.Mp.module(), m)};
  q.P = {q.M, q.N, eta, evaluation_into(q.M.module(), m)};
  q.Ppp = {q.Mpp, q.Npp, eta, evaluation_into(q.Mpp.module(), m)};
  return q;
}

/// H^i(M) -> H^i(M'') -> H^{i+1}(M') -> H^{i+1}(M) against the dual row
/// H^{n-i}(M^) <- H^{n-i}(M''^) <- H^{n-i-1}(M'^) <- H^{n-i-1}(M^); all three
/// squares commute with sign +1 (checked)
inline PairingLadder trace_ladder(const TraceTheory& T, const PairedSequence& q, int i) {
  const int n = T.degree();
  if (i < 0 || n - i - 1 < 0) throw DegreeOutOfRange("ladder needs 0 <= i <= n - 1");
  GroupCohomology A1 = cohomology(q.M, i), A2 = cohomology(q.Mpp, i), A3 = cohomology(q.Mp, i + 1),
                  A4 = cohomology(q.M, i + 1);
  GroupCohomology B1 = cohomology(q.N, n - i), B2 = cohomology(q.Npp, n - i), B3 = cohomology(q.Np, n - i - 1),
                  B4 = cohomology(q.N, n - i - 1);
  PairingLadder L;
  L.phi = {trace_pairing(T, A1, B1, q.P, i), trace_pairing(T, A2, B2, q.Ppp, i),
           trace_pairing(T, A3, B3, q.Pp, i + 1), trace_pairing(T, A4, B4, q.P, i + 1)};
  L.u = {induced_map(A1, A2, q.p), connecting_map(A2, A3, q.M, q.i, q.p), induced_map(A3, A4, q.i)};
  L.v = {induced_map(B2, B1, q.phat), connecting_map(B3, B2, q.N, q.phat, q.ihat), induced_map(B4, B3, q.ihat)};
  check_ladder(L);
  return L;
}

}  // namespace charp
