#pragma once
// Evaluation pairings on two-term complexes and random morphisms between them.

#include "charp/complexes/pairing.hpp"
#include "charp/finab/exact.hpp"

namespace charp {

constexpr long long kEta = 720720;  // lcm(1..16)

inline FinComplex eta_complex() { return FinComplex::single(FinAb::from_cyclic({kEta}), 0); }

// QZ value with denominator dividing kEta, as an element of Z/kEta
inline Elem to_eta(const QZ& q) { return {floor_mod(q.times(kEta), kEta)}; }

inline FinHom hom_from_images(const FinAb& A, const FinAb& B, const std::vector<Elem>& im) {
  IntMat m(B.rank(), A.rank());
  for (std::size_t k = 0; k < A.rank(); ++k)
    for (std::size_t r = 0; r < B.rank(); ++r) m(r, k) = im[k][r];
  return FinHom(A, B, m);
}

inline FinComplex two_term(const FinHom& f, int lo) { return FinComplex(lo, {f.domain(), f.codomain()}, {f}); }

// M = [A -f-> B] in degrees 0, 1 against N = [B* -f*-> A*] in degrees -1, 0:
// phi^{0,0} = evaluation, phi^{1,-1} = -evaluation
inline ChainPairing evaluation_pairing(const FinHom& f) {
  ChainPairing P{two_term(f, 0), two_term(dual_hom(f), -1), eta_complex(), {}};
  const FinAb E = FinAb::from_cyclic({kEta});
  const FinAb& A = f.domain();
  const FinAb& B = f.codomain();
  FinPairing evA = FinPairing::evaluation(A), evB = FinPairing::evaluation(B);
  Bilinear p00(A, dual_group(A), E), p1m(B, dual_group(B), E);
  for (std::size_t x = 0; x < A.rank(); ++x)
    for (std::size_t y = 0; y < A.rank(); ++y) p00.set(x, y, to_eta(evA(A.generator(y), A.generator(x))));
  for (std::size_t x = 0; x < B.rank(); ++x)
    for (std::size_t y = 0; y < B.rank(); ++y)
      p1m.set(x, y, E.scale(-1, to_eta(evB(B.generator(y), B.generator(x)))));
  P.phi.emplace(std::make_pair(0, 0), p00);
  P.phi.emplace(std::make_pair(1, -1), p1m);
  return P;
}

// (alpha, beta) : [A1 -> B1] -> [A2 -> B2] and its transpose
inline PairingMorphism evaluation_morphism(const FinHom& f1, const FinHom& f2, const FinHom& alpha, const FinHom& beta) {
  PairingMorphism m{evaluation_pairing(f1), evaluation_pairing(f2), {}, {}};
  m.u = ChainMap{m.P1.M, m.P2.M, {{0, alpha}, {1, beta}}};
  m.u_dual = ChainMap{m.P2.N, m.P1.N, {{-1, dual_hom(beta)}, {0, dual_hom(alpha)}}};
  return m;
}

// a random commuting square, by one of three recipes
inline PairingMorphism random_morphism(Rng& rng) {
  const long long mo = 8;
  switch (rng.below(3)) {
    case 0: {
      // A2 = A1 + A', alpha = in1, f2 = (beta f1, g)
      FinAb A1 = random_group(rng, mo), Ap = random_group(rng, mo), B1 = random_group(rng, mo),
            B2 = random_group(rng, mo);
      FinHom f1 = random_hom(A1, B1, rng), beta = random_hom(B1, B2, rng), g = random_hom(Ap, B2, rng);
      DirectSum A2 = direct_sum(A1, Ap);
      std::vector<Elem> im;
      for (std::size_t k = 0; k < A2.sum.rank(); ++k) {
        Elem x = A2.sum.generator(k);
        im.push_back(B2.add(beta(f1(A2.pr1(x))), g(A2.pr2(x))));
      }
      return evaluation_morphism(f1, hom_from_images(A2.sum, B2, im), A2.in1, beta);
    }
    case 1: {
      // B1 = B2, beta = id, f1 = f2 alpha
      FinAb A1 = random_group(rng, mo), A2 = random_group(rng, mo), B = random_group(rng, mo);
      FinHom alpha = random_hom(A1, A2, rng), f2 = random_hom(A2, B, rng);
      return evaluation_morphism(f2.after(alpha), f2, alpha, FinHom::identity(B));
    }
    default: {
      FinAb A1 = random_group(rng, mo), A2 = random_group(rng, mo), B1 = random_group(rng, mo),
            B2 = random_group(rng, mo);
      return evaluation_morphism(random_hom(A1, B1, rng), random_hom(A2, B2, rng), FinHom::zero(A1, A2),
                                 FinHom::zero(B1, B2));
    }
  }
}

}  // namespace charp
