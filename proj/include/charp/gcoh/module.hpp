#pragma once

#include "charp/complexes/pairing.hpp"
#include "charp/gcoh/group.hpp"

namespace charp {

/// finite abelian group M with G acting through rho(g)
class GModule {
 public:
  GModule() = default;
  GModule(FinGroup G, FinAb M, std::vector<FinHom> rho) : G_(std::move(G)), M_(std::move(M)), rho_(std::move(rho)) {
    if (static_cast<int>(rho_.size()) != G_.order()) throw InvalidArgument("one action matrix per group element");
    for (const auto& r : rho_)
      if (r.domain() != M_ || r.codomain() != M_) throw InvalidArgument("action matrix on the wrong group");
    if (!(rho_[G_.identity()] == FinHom::identity(M_))) throw InvalidArgument("identity does not act trivially");
    for (int a = 0; a < G_.order(); ++a)
      for (int b = 0; b < G_.order(); ++b)
        if (!(rho_[G_.mul(a, b)] == rho_[a].after(rho_[b])))
          throw InvalidArgument("rho(gh) != rho(g) rho(h) at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }

  static GModule trivial(const FinGroup& G, const FinAb& A) {
    return GModule(G, A, std::vector<FinHom>(G.order(), FinHom::identity(A)));
  }

  const FinGroup& group() const { return G_; }
  const FinAb& module() const { return M_; }
  const FinHom& rho(int g) const { return rho_[g]; }
  Elem act(int g, const Elem& x) const { return rho_[g](x); }

  bool is_trivial_action() const {
    for (const auto& r : rho_)
      if (!(r == FinHom::identity(M_))) return false;
    return true;
  }

  GModule restrict_to(const SubgroupOf& S) const {
    if (S.G != G_) throw InvalidArgument("subgroup of a different group");
    std::vector<FinHom> r;
    for (int h : S.incl) r.push_back(rho_[h]);
    return GModule(S.H, M_, r);
  }

  friend bool operator==(const GModule& a, const GModule& b) {
    if (a.G_ != b.G_ || a.M_ != b.M_) return false;
    for (std::size_t g = 0; g < a.rho_.size(); ++g)
      if (!(a.rho_[g] == b.rho_[g])) return false;
    return true;
  }

 private:
  FinGroup G_;
  FinAb M_;
  std::vector<FinHom> rho_;
};

inline bool is_equivariant(const GModule& M, const GModule& N, const FinHom& f) {
  if (f.domain() != M.module() || f.codomain() != N.module()) return false;
  for (int g = 0; g < M.group().order(); ++g)
    if (!(f.after(M.rho(g)) == N.rho(g).after(f))) return false;
  return true;
}

/// beta(g x, g y) = g beta(x, y) on generators
inline bool is_equivariant(const GModule& M, const GModule& N, const GModule& P, const Bilinear& beta) {
  for (int g = 0; g < M.group().order(); ++g)
    for (std::size_t a = 0; a < M.module().rank(); ++a)
      for (std::size_t b = 0; b < N.module().rank(); ++b) {
        Elem x = M.module().generator(a), y = N.module().generator(b);
        if (beta(M.act(g, x), N.act(g, y)) != P.act(g, beta.at(a, b))) return false;
      }
  return true;
}

/// G-stable subgroup S of M as a module, with its inclusion
struct Submodule {
  GModule module;
  FinHom incl;
  Subquotient coords;
};

inline Submodule submodule(const GModule& M, const Subgroup& S) {
  for (int g = 0; g < M.group().order(); ++g)
    for (const auto& x : S.generators())
      if (!S.contains(M.act(g, x))) throw NotSubgroup("subgroup is not G-stable");
  Subquotient q = as_group(S);
  IntMat inc(M.module().rank(), q.group.rank());
  for (std::size_t j = 0; j < q.group.rank(); ++j)
    for (std::size_t i = 0; i < M.module().rank(); ++i) inc(i, j) = q.lifts[j][i];
  std::vector<FinHom> rho;
  for (int g = 0; g < M.group().order(); ++g) {
    IntMat r(q.group.rank(), q.group.rank());
    for (std::size_t j = 0; j < q.group.rank(); ++j) {
      Elem y = q.coords(M.act(g, q.lifts[j]));
      for (std::size_t i = 0; i < y.size(); ++i) r(i, j) = y[i];
    }
    rho.emplace_back(q.group, q.group, r);
  }
  return {GModule(M.group(), q.group, rho), FinHom(q.group, M.module(), inc), q};
}

/// M / S for a G-stable S, with the projection
struct QuotientModule {
  GModule module;
  FinHom proj;
  Subquotient coords;
};

inline QuotientModule quotient_module(const GModule& M, const Subgroup& S) {
  for (int g = 0; g < M.group().order(); ++g)
    for (const auto& x : S.generators())
      if (!S.contains(M.act(g, x))) throw NotSubgroup("subgroup is not G-stable");
  Subquotient q = quotient(S);
  IntMat pr(q.group.rank(), M.module().rank());
  for (std::size_t j = 0; j < M.module().rank(); ++j) {
    Elem y = q.coords(M.module().generator(j));
    for (std::size_t i = 0; i < y.size(); ++i) pr(i, j) = y[i];
  }
  std::vector<FinHom> rho;
  for (int g = 0; g < M.group().order(); ++g) {
    IntMat r(q.group.rank(), q.group.rank());
    for (std::size_t j = 0; j < q.group.rank(); ++j) {
      Elem y = q.coords(M.act(g, q.lifts[j]));
      for (std::size_t i = 0; i < y.size(); ++i) r(i, j) = y[i];
    }
    rho.emplace_back(q.group, q.group, r);
  }
  return {GModule(M.group(), q.group, rho), FinHom(M.module(), q.group, pr), q};
}

/// G-submodule generated by xs
inline Subgroup generated_submodule(const GModule& M, const std::vector<Elem>& xs) {
  std::vector<Elem> g;
  for (int h = 0; h < M.group().order(); ++h)
    for (const auto& x : xs) g.push_back(M.act(h, x));
  return Subgroup(M.module(), g);
}

/// Pontryagin dual with (g chi)(x) = chi(g^{-1} x), in dual coordinates
inline GModule dual_module(const GModule& M) {
  std::vector<FinHom> rho;
  for (int g = 0; g < M.group().order(); ++g) rho.push_back(dual_hom(M.rho(M.group().inv(g))));
  return GModule(M.group(), dual_group(M.module()), rho);
}

/// f^ : N^ -> M^ for an equivariant f : M -> N
inline FinHom dual_map(const FinHom& f) { return dual_hom(f); }

/// evaluation M x M^ -> Z/m (trivial action); m must be a multiple of exp(M)
inline Bilinear evaluation_into(const FinAb& M, long long m) {
  if (m % M.exponent() != 0) throw InvalidArgument("modulus is not a multiple of the exponent");
  FinAb E = m > 1 ? FinAb({m}) : FinAb();
  Bilinear b(M, dual_group(M), E);
  for (std::size_t i = 0; i < M.rank(); ++i) {
    if (E.is_trivial()) break;
    Character chi = dual_character(M, M.generator(i));
    b.set(i, i, {chi[i].times(m)});
  }
  return b;
}

struct ModuleSum {
  GModule module;
  DirectSum maps;
};

inline ModuleSum direct_sum(const GModule& M, const GModule& N) {
  DirectSum s = direct_sum(M.module(), N.module());
  std::vector<FinHom> rho;
  for (int g = 0; g < M.group().order(); ++g) {
    IntMat r(s.sum.rank(), s.sum.rank());
    for (std::size_t j = 0; j < s.sum.rank(); ++j) {
      Elem x = s.sum.generator(j);
      Elem y = s.sum.add(s.in1(M.act(g, s.pr1(x))), s.in2(N.act(g, s.pr2(x))));
      for (std::size_t i = 0; i < y.size(); ++i) r(i, j) = y[i];
    }
    rho.emplace_back(s.sum, s.sum, r);
  }
  return {GModule(M.group(), s.sum, rho), s};
}

/// Z[G/H] (x) M with g([c] (x) x) = [g c] (x) g x, coordinate k * m + c for
/// factor k of M and left coset c
struct InducedModule {
  SubgroupOf S;
  GModule base;        // M over G
  GModule module;      // Z[G/H] (x) M
  FinHom norm;         // M -> Z[G/H] (x) M, x -> sum_c [c] (x) x
  FinHom augmentation; // Z[G/H] (x) M -> M, [c] (x) x -> x
  QuotientModule X;    // X (x) M = coker(norm)
  Submodule Xo;        // X° (x) M = ker(augmentation)
  int cosets = 1;

  Elem embed(int c, const Elem& x) const {
    Elem y = module.module().zero();
    for (std::size_t k = 0; k < x.size(); ++k) y[k * cosets + c] = x[k];
    return y;
  }
  Elem component(const Elem& y, int c) const {
    Elem x(base.module().rank());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = y[k * cosets + c];
    return x;
  }
  /// H-linear j_1 : M -> Z[G/H] (x) M and p_1 back, through the coset H
  FinHom j1() const {
    IntMat m(module.module().rank(), base.module().rank());
    const int c = S.trivial_coset();
    for (std::size_t k = 0; k < base.module().rank(); ++k) m(k * cosets + c, k) = 1;
    return FinHom(base.module(), module.module(), m);
  }
  FinHom p1() const {
    IntMat m(base.module().rank(), module.module().rank());
    const int c = S.trivial_coset();
    for (std::size_t k = 0; k < base.module().rank(); ++k) m(k, k * cosets + c) = 1;
    return FinHom(module.module(), base.module(), m);
  }
  bool first_sequence_exact() const {
    return norm.is_injective() && X.proj.is_surjective() && X.proj.kernel() == norm.image();
  }
  bool second_sequence_exact() const {
    return Xo.incl.is_injective() && augmentation.is_surjective() && augmentation.kernel() == Xo.incl.image();
  }
};

inline InducedModule induced_module(const SubgroupOf& S, const GModule& M) {
  if (S.G != M.group()) throw InvalidArgument("module over a different group");
  const FinGroup& G = S.G;
  const auto reps = S.left_reps();
  const int m = static_cast<int>(reps.size());
  const std::size_t r = M.module().rank();
  std::vector<long long> f;
  for (std::size_t k = 0; k < r; ++k)
    for (int c = 0; c < m; ++c) f.push_back(M.module().factor(k));
  FinAb I(f);
  std::vector<FinHom> rho;
  for (int g = 0; g < G.order(); ++g) {
    IntMat a(I.rank(), I.rank());
    const FinHom& rg = M.rho(g);
    for (int c = 0; c < m; ++c) {
      const int gc = S.left_coset(G.mul(g, reps[c]));
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t k2 = 0; k2 < r; ++k2) a(k2 * m + gc, k * m + c) = rg.matrix()(k2, k);
    }
    rho.emplace_back(I, I, a);
  }
  InducedModule ind{S, M, GModule(G, I, rho), {}, {}, {}, {}, m};
  IntMat nm(I.rank(), r), au(r, I.rank());
  for (std::size_t k = 0; k < r; ++k)
    for (int c = 0; c < m; ++c) {
      nm(k * m + c, k) = 1;
      au(k, k * m + c) = 1;
    }
  ind.norm = FinHom(M.module(), I, nm);
  ind.augmentation = FinHom(I, M.module(), au);
  ind.X = quotient_module(ind.module, ind.norm.image());
  ind.Xo = submodule(ind.module, ind.augmentation.kernel());
  return ind;
}

/// Z/m[G/H] with G permuting the cosets
inline GModule permutation_module(const SubgroupOf& S, long long m) {
  return induced_module(S, GModule::trivial(S.G, FinAb({m}))).module;
}

/// trivial Z/m, a permutation module Z/m[G/H], or a sum of two of these
inline GModule random_module(const FinGroup& G, Rng& rng, const std::vector<long long>& moduli) {
  auto subs = G.subgroups();
  auto one = [&]() {
    const long long m = moduli[rng.below(moduli.size())];
    if (rng.coin()) return GModule::trivial(G, FinAb({m}));
    return permutation_module(subgroup_of(G, subs[rng.below(subs.size())]), m);
  };
  GModule M = one();
  if (rng.below(4) == 0) M = direct_sum(M, one()).module;
  return M;
}

}  // namespace charp
