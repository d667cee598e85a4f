#pragma once

#include "charp/finab/pairing.hpp"
#include "charp/random.hpp"

namespace charp {

inline bool is_exact_at(const FinHom& f, const FinHom& g) {
  if (f.codomain() != g.domain()) throw InvalidArgument("maps do not compose");
  return f.image() == g.kernel();
}

/// for A -f-> B -g-> C exact at B, checks C* -> B* -> A* exact at B*
inline bool exact_dualization_check(const FinHom& f, const FinHom& g) {
  if (!is_exact_at(f, g)) throw NotExact("input sequence is not exact at the middle term");
  return is_exact_at(dual_hom(g), dual_hom(f));
}

/// random group with order <= max_order
inline FinAb random_group(Rng& rng, long long max_order) {
  std::vector<long long> cyc;
  long long ord = 1;
  const int parts = static_cast<int>(rng.range(0, 3));
  for (int i = 0; i < parts; ++i) {
    long long n = rng.range(2, 8);
    if (ord * n > max_order) break;
    cyc.push_back(n);
    ord *= n;
  }
  return FinAb::from_cyclic(cyc);
}

inline Elem random_element(const FinAb& A, Rng& rng) {
  Elem x(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) x[i] = static_cast<long long>(rng.below(static_cast<std::uint64_t>(A.factor(i))));
  return x;
}

/// random well-defined hom: generator j goes to a random element killed by n_j
inline FinHom random_hom(const FinAb& A, const FinAb& B, Rng& rng) {
  IntMat M(B.rank(), A.rank());
  for (std::size_t j = 0; j < A.rank(); ++j) {
    Elem y = random_element(B, rng);
    const long long scale = B.exponent() / std::gcd(B.exponent(), A.factor(j));
    for (std::size_t i = 0; i < B.rank(); ++i) M(i, j) = y[i] * scale;
  }
  return FinHom(A, B, M);
}

inline Subgroup random_subgroup(const FinAb& A, Rng& rng) {
  std::vector<Elem> g;
  const auto n = rng.range(0, 2);
  for (int i = 0; i < n; ++i) g.push_back(random_element(A, rng));
  return Subgroup(A, g);
}

/// the inclusion H -> A, H presented as a FinAb
inline FinHom inclusion(const Subgroup& H) {
  Subquotient q = as_group(H);
  IntMat M(H.ambient().rank(), q.group.rank());
  for (std::size_t j = 0; j < q.group.rank(); ++j)
    for (std::size_t i = 0; i < H.ambient().rank(); ++i) M(i, j) = q.lifts[j][i];
  return FinHom(q.group, H.ambient(), M);
}

/// the projection A -> A/K
inline FinHom projection(const Subgroup& K) {
  Subquotient q = quotient(K);
  const auto& A = K.ambient();
  IntMat M(q.group.rank(), A.rank());
  for (std::size_t j = 0; j < A.rank(); ++j) {
    Elem c = q.coords(A.generator(j));
    for (std::size_t i = 0; i < q.group.rank(); ++i) M(i, j) = c[i];
  }
  return FinHom(A, q.group, M);
}

/// direct sum A + B with inclusions and projections
struct DirectSum {
  FinAb sum;
  FinHom in1, in2, pr1, pr2;
};

inline DirectSum direct_sum(const FinAb& A, const FinAb& B) {
  // the naive product Z/n_1 x ... x Z/m_1 x ..., then normalized
  std::vector<long long> cyc = A.factors();
  for (long long m : B.factors()) cyc.push_back(m);
  IntMat R(cyc.size(), cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) R(i, i) = cyc[i];
  Snf s = snf(R);
  std::vector<long long> f;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (s.D(i, i) > 1) {
      f.push_back(s.D(i, i));
      keep.push_back(i);
    }
  FinAb S(f);
  // naive coordinates x -> U x (kept rows); generator r of S -> Uinv column keep[r]
  const std::size_t ka = A.rank(), kb = B.rank();
  IntMat in1(S.rank(), ka), in2(S.rank(), kb), pr1(ka, S.rank()), pr2(kb, S.rank());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t j = 0; j < ka; ++j) in1(r, j) = s.U(keep[r], j);
    for (std::size_t j = 0; j < kb; ++j) in2(r, j) = s.U(keep[r], ka + j);
    for (std::size_t i = 0; i < ka; ++i) pr1(i, r) = s.Uinv(i, keep[r]);
    for (std::size_t i = 0; i < kb; ++i) pr2(i, r) = s.Uinv(ka + i, keep[r]);
  }
  return {S, FinHom(A, S, in1), FinHom(B, S, in2), FinHom(S, A, pr1), FinHom(S, B, pr2)};
}

/// A -f-> B -g-> C exact at B
struct ExactTriple {
  FinHom f, g;
};

/// B random, f the inclusion of a random subgroup H (through a random surjection
/// onto H), g the projection B -> B/H followed by an inclusion into (B/H) + Z/c
inline ExactTriple random_exact_triple(Rng& rng, long long max_order) {
  FinAb B = random_group(rng, max_order);
  Subgroup H = random_subgroup(B, rng);
  FinHom inc = inclusion(H);
  // precompose with a surjection from H + extra
  FinAb extra = random_group(rng, std::max<long long>(1, max_order / std::max<long long>(1, H.order())));
  DirectSum src = direct_sum(inc.domain(), extra);
  FinHom f = inc.after(src.pr1);
  FinHom proj = projection(H);
  FinAb tail = random_group(rng, std::max<long long>(1, max_order / std::max<long long>(1, proj.codomain().order())));
  DirectSum dst = direct_sum(proj.codomain(), tail);
  FinHom g = dst.in1.after(proj);
  return {f, g};
}

}  // namespace charp
