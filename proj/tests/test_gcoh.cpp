#include <gtest/gtest.h>

#include <map>
#include <set>

#include "charp/gcoh/battery.hpp"
#include "charp/gcoh/trace.hpp"

using namespace charp;

namespace {

// |Z^1| by assigning values on generators and extending f(gh) = f(g) + g f(h);
// |B^1| = |M| / |M^G|
long long h1_order_by_enumeration(const GModule& M, const std::vector<int>& gens) {
  const FinGroup& G = M.group();
  const FinAb& A = M.module();
  const auto elems = A.elements();
  long long cocycles = 0;
  std::vector<std::size_t> pick(gens.size(), 0);
  for (;;) {
    std::map<int, Elem> f{{G.identity(), A.zero()}};
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q)
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const int g = queue[q], h = G.mul(g, gens[k]);
        Elem v = A.add(f[g], M.act(g, elems[pick[k]]));
        auto it = f.find(h);
        if (it == f.end()) {
          f[h] = v;
          queue.push_back(h);
        } else if (it->second != v) {
          ok = false;
        }
      }
    // the generator values themselves must agree with f on the generators
    for (std::size_t k = 0; k < gens.size() && ok; ++k) ok = f[gens[k]] == elems[pick[k]];
    cocycles += ok;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == elems.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  long long fixed = 0;
  for (const auto& x : elems) {
    bool inv = true;
    for (int g = 0; g < G.order() && inv; ++g) inv = M.act(g, x) == x;
    fixed += inv;
  }
  return cocycles * fixed / A.order();
}

Cochain random_cochain(const GModule& M, int n, Rng& rng) {
  return {n, random_element(cochain_group(M, n), rng)};
}

}  // namespace

TEST(FinGroup, TablesAndValidation) {
  FinGroup S3 = FinGroup::symmetric(3);
  EXPECT_EQ(S3.order(), 6);
  EXPECT_EQ(S3.subgroups().size(), 6u);  // 1, three of order 2, A_3, S_3
  FinGroup Z6 = FinGroup::cyclic(6);
  EXPECT_EQ(Z6.element_order(2), 3);
  EXPECT_EQ(FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2)).subgroups().size(), 5u);
  // a non-associative loop of order 5
  std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FinGroup(bad, 0), InvalidArgument);
  EXPECT_THROW(FinGroup({{0, 1}, {1, 1}}, 0), InvalidArgument);
  EXPECT_THROW(subgroup_of(Z6, {0, 1}), NotSubgroup);
  EXPECT_THROW(subgroup_of(Z6, {1, 2, 3}), NotSubgroup);
  SubgroupOf S = subgroup_of(Z6, {0, 2, 4});
  EXPECT_EQ(S.index(), 2);
  EXPECT_EQ(S.left_reps(), (std::vector<int>{0, 1}));
  EXPECT_EQ(S.left_coset(5), 1);
}

TEST(GModule, ActionValidation) {
  FinGroup Z2 = FinGroup::cyclic(2);
  FinAb A({4});
  EXPECT_NO_THROW(GModule(Z2, A, {FinHom::identity(A), FinHom::multiplication(A, -1)}));
  EXPECT_THROW(GModule(Z2, A, {FinHom::identity(A), FinHom::multiplication(A, 2)}), InvalidArgument);
  EXPECT_THROW(GModule(Z2, A, {FinHom::multiplication(A, -1), FinHom::identity(A)}), InvalidArgument);
  FinAb B({3});
  FinGroup Z4 = FinGroup::cyclic(4);
  // generator acting by -1 on Z/3 has order 2, fine for Z/4
  std::vector<FinHom> rho;
  for (int g = 0; g < 4; ++g) rho.push_back(FinHom::multiplication(B, g % 2 ? -1 : 1));
  EXPECT_TRUE(GModule(Z4, B, rho).restrict_to(subgroup_of(Z4, {0, 2})).is_trivial_action());
}

TEST(Cohomology, FixedPointsInDegreeZero) {
  Rng rng(1);
  for (const auto& G : {FinGroup::cyclic(2), FinGroup::cyclic(4), FinGroup::symmetric(3)})
    for (int t = 0; t < 5; ++t) {
      GModule M = random_module(G, rng, {2, 3, 4});
      long long fixed = 0;
      for (const auto& x : M.module().elements()) {
        bool inv = true;
        for (int g = 0; g < G.order() && inv; ++g) inv = M.act(g, x) == x;
        fixed += inv;
      }
      EXPECT_EQ(cohomology(M, 0).group().order(), fixed);
    }
}

TEST(Cohomology, CyclicGroupsWithCyclicCoefficients) {
  for (int n = 1; n <= 6; ++n) {
    GModule M = trivial_cyclic(FinGroup::cyclic(n), n);
    std::vector<long long> expect = n > 1 ? std::vector<long long>{n} : std::vector<long long>{};
    EXPECT_EQ(cohomology(M, 1).group().factors(), expect) << n;
    EXPECT_EQ(cohomology(M, 2).group().factors(), expect) << n;
    // Hom(Z/n, Z/n) has n elements
    EXPECT_EQ(h1_order_by_enumeration(M, {n > 1 ? 1 : 0}), n);
  }
  EXPECT_TRUE(cohomology(trivial_cyclic(FinGroup::cyclic(2), 3), 1).group().is_trivial());
  EXPECT_TRUE(cohomology(trivial_cyclic(FinGroup::cyclic(2), 3), 2).group().is_trivial());
}

TEST(Cohomology, FirstDegreeMatchesCrossedHomEnumeration) {
  Rng rng(2);
  std::vector<std::pair<FinGroup, std::vector<int>>> groups{
      {FinGroup::cyclic(2), {1}}, {FinGroup::cyclic(3), {1}}, {FinGroup::cyclic(4), {1}},
      {FinGroup::symmetric(3), {1, 2}}, {FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2)), {1, 2}}};
  for (const auto& [G, gens] : groups)
    for (int t = 0; t < 6; ++t) {
      GModule M = random_module(G, rng, {2, 3, 4});
      if (M.module().order() > 64) continue;
      EXPECT_EQ(cohomology(M, 1).group().order(), h1_order_by_enumeration(M, gens));
    }
}

TEST(Cohomology, SignTwistOnZ3) {
  // Z/2 acting by -1 on Z/3: all cohomology vanishes (coprime orders), H^0 = 0
  FinGroup Z2 = FinGroup::cyclic(2);
  FinAb A({3});
  GModule M(Z2, A, {FinHom::identity(A), FinHom::multiplication(A, -1)});
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(cohomology(M, n).group().is_trivial()) << n;
  // Z/2 acting by -1 on Z/4: H^1 = {x : x = -x} / (2 Z/4) ... Z/4[2]/2Z/4 is trivial; H^2 = Z/4^G / N = Z/2
  FinAb B({4});
  GModule N(Z2, B, {FinHom::identity(B), FinHom::multiplication(B, -1)});
  EXPECT_EQ(cohomology(N, 1).group().order(), h1_order_by_enumeration(N, {1}));
  EXPECT_EQ(cohomology(N, 2).group().factors(), std::vector<long long>{2});
}

TEST(Cohomology, BudgetGuard) {
  GModule M = trivial_cyclic(FinGroup::symmetric(3), 2);
  setenv("CHARP_BUDGET", "100", 1);
  EXPECT_THROW(cohomology(M, 2), BudgetExceeded);
  unsetenv("CHARP_BUDGET");
  EXPECT_NO_THROW(cohomology(M, 2));
  EXPECT_THROW(cohomology(M, -1), DegreeOutOfRange);
}

TEST(Cochains, DifferentialSquaresToZeroAndMatchesMatrix) {
  Rng rng(3);
  for (const auto& G : {FinGroup::cyclic(3), FinGroup::symmetric(3)}) {
    GModule M = random_module(G, rng, {2, 3});
    for (int n = 0; n <= 2; ++n) {
      Cochain f = random_cochain(M, n, rng);
      Cochain df = coboundary(M, f);
      EXPECT_EQ(df.values, coboundary_map(M, n)(f.values));
      EXPECT_TRUE(cochain_group(M, n + 2).is_zero(coboundary(M, df).values));
    }
  }
}

TEST(Cup, UnitAndLeibniz) {
  Rng rng(4);
  FinGroup G = FinGroup::symmetric(3);
  GModule M = permutation_module(subgroup_of(G, G.subgroups()[1]), 2);
  GModule Z2 = trivial_cyclic(G, 2);
  Bilinear act(M.module(), Z2.module(), M.module());  // x * c
  for (std::size_t k = 0; k < M.module().rank(); ++k) act.set(k, 0, M.module().generator(k));
  ASSERT_TRUE(is_equivariant(M, Z2, M, act));
  Cochain one = make_cochain(Z2, 0, [](const std::vector<int>&) { return Elem{1}; });
  for (int i = 0; i <= 2; ++i) {
    Cochain f = random_cochain(M, i, rng);
    EXPECT_EQ(cup(M, f, Z2, one, M, act).values, f.values);
    for (int j = 0; j + i <= 2; ++j) {
      Cochain g = random_cochain(Z2, j, rng);
      Cochain lhs = coboundary(M, cup(M, f, Z2, g, M, act));
      Cochain a = cup(M, coboundary(M, f), Z2, g, M, act);
      Cochain b = cup(M, f, Z2, coboundary(Z2, g), M, act);
      const FinAb C = cochain_group(M, i + j + 1);
      EXPECT_EQ(lhs.values, C.add(a.values, C.scale(i % 2 ? -1 : 1, b.values)));
    }
  }
}

TEST(Cup, PolynomialGeneratorOverZ2) {
  GModule M = trivial_cyclic(FinGroup::cyclic(2), 2);
  GroupCohomology H1 = cohomology(M, 1), H2 = cohomology(M, 2), H3 = cohomology(M, 3), H4 = cohomology(M, 4);
  Bilinear mul = multiplication_pairing(2);
  ASSERT_EQ(H1.group().order(), 2);
  Elem x2 = cup_classes(H1, H1, H2, mul).at(0, 0);
  EXPECT_FALSE(H2.group().is_zero(x2));
  // x^3 and x^4 are nonzero as well
  Cochain xx = cup(M, H1.generator(0), M, H1.generator(0), M, mul);
  Cochain xxx = cup(M, xx, M, H1.generator(0), M, mul);
  EXPECT_FALSE(H3.group().is_zero(H3.class_of(xxx)));
  EXPECT_FALSE(H4.group().is_zero(H4.class_of(cup(M, xx, M, xx, M, mul))));
  // over Z/3 with G = Z/3 the square of the degree-one class vanishes
  GModule N = trivial_cyclic(FinGroup::cyclic(3), 3);
  GroupCohomology K1 = cohomology(N, 1), K2 = cohomology(N, 2);
  EXPECT_TRUE(K2.group().is_zero(cup_classes(K1, K1, K2, multiplication_pairing(3)).at(0, 0)));
}

TEST(Cup, GradedCommutativityOnClasses) {
  Rng rng(5);
  int pairs = 0;
  std::vector<FinGroup> groups{FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4),
                               FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2)), FinGroup::symmetric(3)};
  while (pairs < 50) {
    const FinGroup& G = groups[rng.below(groups.size())];
    const long long m = std::vector<long long>{2, 3, 4, 6}[rng.below(4)];
    GModule M = random_module(G, rng, {m});
    if (M.module().rank() != 1 && G.order() > 4) continue;
    GModule Mh = dual_module(M), E = trivial_cyclic(G, m);
    Bilinear beta = evaluation_into(M.module(), m), betaT = transpose(beta);
    const int maxdeg = G.order() > 4 ? 2 : 3;
    const int i = static_cast<int>(rng.below(maxdeg + 1));
    const int j = static_cast<int>(rng.below(maxdeg - i + 1));
    GroupCohomology Hi = cohomology(M, i), Hj = cohomology(Mh, j), Ht = cohomology(E, i + j);
    Elem a = random_element(Hi.group(), rng), b = random_element(Hj.group(), rng);
    // random representatives, not just the stored lifts
    Cochain fa = Hi.lift(a), fb = Hj.lift(b);
    fa.values = Hi.cochains.add(fa.values, Hi.d_in(random_element(Hi.d_in.domain(), rng)));
    fb.values = Hj.cochains.add(fb.values, Hj.d_in(random_element(Hj.d_in.domain(), rng)));
    Elem ab = Ht.class_of(cup(M, fa, Mh, fb, E, beta));
    Elem ba = Ht.class_of(cup(Mh, fb, M, fa, E, betaT));
    EXPECT_EQ(ab, Ht.group().scale((i * j) % 2 ? -1 : 1, ba)) << "i=" << i << " j=" << j;
    ++pairs;
  }
}

TEST(ResCores, TrivialSubgroupIsIdentity) {
  FinGroup S3 = FinGroup::symmetric(3);
  SubgroupOf S = subgroup_of(S3, S3.generated({1, 2}));
  GModule M = permutation_module(subgroup_of(S3, S3.subgroups()[1]), 2);
  for (int n = 0; n <= 2; ++n) {
    GroupCohomology HG = cohomology(M, n), HH = cohomology(M.restrict_to(S), n);
    EXPECT_TRUE(restriction_map(S, HG, HH) == FinHom::identity(HG.group()));
    EXPECT_TRUE(corestriction_map(S, HH, HG) == FinHom::identity(HG.group()));
  }
}

TEST(ResCores, Z4OverZ2WithTwoTorsionCoefficients) {
  FinGroup Z4 = FinGroup::cyclic(4);
  SubgroupOf S = subgroup_of(Z4, {0, 2});
  GModule M = trivial_cyclic(Z4, 2);
  GroupCohomology HG = cohomology(M, 1), HH = cohomology(M.restrict_to(S), 1);
  FinHom c = corestriction_map(S, HH, HG).after(restriction_map(S, HG, HH));
  EXPECT_FALSE(HG.group().is_trivial());
  EXPECT_TRUE(c == FinHom::zero(HG.group(), HG.group()));
}

TEST(ResCores, BatteryIndexIdentity) {
  Rng rng(6);
  for (const auto& b : battery()) {
    SubgroupOf S = subgroup_of(b.G, b.H);
    std::vector<GModule> mods{trivial_cyclic(b.G, 2), trivial_cyclic(b.G, 3), trivial_cyclic(b.G, 4),
                              permutation_module(S, 2), random_module(b.G, rng, {2, 3})};
    for (const auto& M : mods)
      for (int n = 1; n <= 2; ++n) EXPECT_TRUE(cores_res_is_index(S, M, n)) << b.name << " n=" << n;
  }
}

TEST(ResCores, TransferIndependentOfRepresentatives) {
  Rng rng(7);
  for (const auto& b : battery()) {
    SubgroupOf S = subgroup_of(b.G, b.H);
    GModule M = random_module(b.G, rng, {2, 3});
    for (int n = 0; n <= 2; ++n) {
      GroupCohomology HG = cohomology(M, n), HH = cohomology(M.restrict_to(S), n);
      FinHom base = corestriction_map(S, HH, HG);
      for (int t = 0; t < 3; ++t) EXPECT_TRUE(corestriction_map(S, HH, HG, random_reps(S, rng)) == base) << b.name;
    }
  }
}

TEST(ResCores, CorestrictionIsACochainMap) {
  Rng rng(8);
  for (const auto& b : battery()) {
    SubgroupOf S = subgroup_of(b.G, b.H);
    GModule M = random_module(b.G, rng, {2, 3});
    GModule MH = M.restrict_to(S);
    for (int n = 0; n <= 1; ++n) {
      Cochain f = random_cochain(MH, n, rng);
      EXPECT_EQ(corestrict_cochain(S, M, coboundary(MH, f)).values, coboundary(M, corestrict_cochain(S, M, f)).values);
    }
  }
}

TEST(Induced, WholeGroupAndSmallCases) {
  FinGroup Z6 = FinGroup::cyclic(6);
  GModule M = trivial_cyclic(Z6, 3);
  InducedModule whole = induced_module(subgroup_of(Z6, {0, 1, 2, 3, 4, 5}), M);
  EXPECT_EQ(whole.module.module(), M.module());
  EXPECT_TRUE(whole.X.module.module().is_trivial());
  EXPECT_TRUE(whole.norm == FinHom::identity(M.module()));

  FinGroup Z2 = FinGroup::cyclic(2);
  InducedModule reg = induced_module(subgroup_of(Z2, {0}), trivial_cyclic(Z2, 2));
  EXPECT_EQ(reg.module.module().order(), 4);
  EXPECT_TRUE(reg.first_sequence_exact());
  EXPECT_TRUE(reg.second_sequence_exact());

  Rng rng(9);
  for (const auto& H : {std::vector<int>{0, 2, 4}, std::vector<int>{0, 3}, std::vector<int>{0}}) {
    GModule N = random_module(Z6, rng, {2, 3});
    InducedModule ind = induced_module(subgroup_of(Z6, H), N);
    EXPECT_TRUE(ind.first_sequence_exact());
    EXPECT_TRUE(ind.second_sequence_exact());
    EXPECT_TRUE(is_equivariant(N, ind.module, ind.norm));
    EXPECT_TRUE(is_equivariant(ind.module, N, ind.augmentation));
  }
}

TEST(Induced, QuotientRestrictedToSubgroupIsPermutationLattice) {
  // X (x) M -> (x_c - x_H) over the non-trivial cosets is an H-isomorphism
  for (const auto& b : battery())
    for (long long m : {2LL, 3LL}) {
      SubgroupOf S = subgroup_of(b.G, b.H);
      InducedModule ind = induced_module(S, trivial_cyclic(b.G, m));
      const int k = ind.cosets, c0 = S.trivial_coset();
      EXPECT_EQ(ind.X.module.module().order(), [&] {
        long long o = 1;
        for (int i = 1; i < k; ++i) o *= m;
        return o;
      }());
      std::vector<int> others;
      for (int c = 0; c < k; ++c)
        if (c != c0) others.push_back(c);
      FinAb T(std::vector<long long>(others.size(), m));
      // H permutes the non-trivial cosets
      auto reps = S.left_reps();
      std::vector<FinHom> rho;
      for (int h : S.incl) {
        IntMat a(T.rank(), T.rank());
        for (std::size_t j = 0; j < others.size(); ++j) {
          int c = S.left_coset(b.G.mul(h, reps[others[j]]));
          a(static_cast<std::size_t>(std::find(others.begin(), others.end(), c) - others.begin()), j) = 1;
        }
        rho.emplace_back(T, T, a);
      }
      GModule TH(S.H, T, rho);
      IntMat psi(T.rank(), ind.module.module().rank());
      for (std::size_t j = 0; j < others.size(); ++j) {
        psi(j, others[j]) = 1;
        psi(j, c0) = -1;
      }
      FinHom Psi(ind.module.module(), T, psi);
      EXPECT_TRUE(is_equivariant(ind.module.restrict_to(S), TH, Psi)) << b.name;
      EXPECT_TRUE(ind.norm.image() == Psi.kernel()) << b.name;
      // induced map on X (x) M
      IntMat q(T.rank(), ind.X.module.module().rank());
      for (std::size_t j = 0; j < ind.X.module.module().rank(); ++j) {
        Elem y = Psi(ind.X.coords.lifts[j]);
        for (std::size_t i = 0; i < y.size(); ++i) q(i, j) = y[i];
      }
      FinHom Q(ind.X.module.module(), T, q);
      EXPECT_TRUE(Q.is_injective() && Q.is_surjective()) << b.name;
      EXPECT_TRUE(is_equivariant(ind.X.module.restrict_to(S), TH, Q)) << b.name;
    }
}

TEST(Shapiro, WholeGroupAndRegularModule) {
  FinGroup Z4 = FinGroup::cyclic(4);
  GModule M = trivial_cyclic(Z4, 2);
  SubgroupOf whole = subgroup_of(Z4, {0, 1, 2, 3});
  for (int n = 0; n <= 2; ++n) {
    ShapiroReport r = shapiro_check(whole, M, n);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.phi == FinHom::identity(r.phi.domain()));
  }
  FinGroup Z2 = FinGroup::cyclic(2);
  SubgroupOf one = subgroup_of(Z2, {0});
  for (int n = 1; n <= 3; ++n) {
    InducedModule reg = induced_module(one, trivial_cyclic(Z2, 2));
    EXPECT_TRUE(cohomology(reg.module, n).group().is_trivial()) << n;
    EXPECT_TRUE(shapiro_check(one, trivial_cyclic(Z2, 2), n).ok());
  }
}

TEST(Shapiro, BatteryCompositesAreInverse) {
  Rng rng(10);
  for (const auto& b : battery()) {
    SubgroupOf S = subgroup_of(b.G, b.H);
    for (int n = 1; n <= 2; ++n) {
      for (const auto& M : {trivial_cyclic(b.G, 2), random_module(b.G, rng, {2, 3})}) {
        if (M.module().order() * S.index() > 64) continue;
        ShapiroReport r = shapiro_check(S, M, n);
        EXPECT_TRUE(r.ok()) << b.name << " n=" << n;
      }
    }
  }
}

TEST(Trace, UnitOfCupAgainstFixedPoints) {
  FinGroup Z4 = FinGroup::cyclic(4);
  GModule eta = trivial_cyclic(Z4, 4);
  TraceTheory T(eta, 2);
  ModulePairing P{eta, eta, eta, multiplication_pairing(4)};
  P.check();
  FinPairing f = trace_pairing(T, P, 2);
  ASSERT_EQ(f.left().order(), 4);
  ASSERT_EQ(f.right().order(), 4);
  // <x, c> = c delta(x)
  for (const auto& x : f.left().elements())
    for (const auto& c : f.right().elements())
      EXPECT_EQ(f(x, c), c[0] * evaluate(T.delta_G(), x));
}

TEST(Trace, Z2DegreeOnePairingIsPerfect) {
  FinGroup Z2 = FinGroup::cyclic(2);
  GModule eta = trivial_cyclic(Z2, 2);
  TraceTheory T(eta, 2);
  ModulePairing P{eta, eta, eta, multiplication_pairing(2)};
  FinPairing f = trace_pairing(T, P, 1);
  EXPECT_EQ(f.left().order(), 2);
  EXPECT_TRUE(pairing_analysis(f).perfect);
}

TEST(Trace, ShiftAndOrthogonalSum) {
  Rng rng(11);
  for (const auto& G : {FinGroup::cyclic(2), FinGroup::cyclic(4), FinGroup::symmetric(3)}) {
    GModule eta = trivial_cyclic(G, 2);
    TraceTheory T(eta, 2);
    for (int t = 0; t < 3; ++t) {
      GModule M = random_module(G, rng, {2});
      if (M.module().rank() > 3) continue;
      ModulePairing P{M, dual_module(M), eta, evaluation_into(M.module(), 2)};
      P.check();
      for (int i = 0; i <= 2; ++i) {
        FinPairing a = trace_pairing(T, P, i), b = trace_pairing(T, shift_pairing(P, 1), i + 1);
        EXPECT_TRUE(a.scaled((i + 1) % 2 ? -1 : 1).values() == b.values());
        PairingAnalysis x = pairing_analysis(a), y = pairing_analysis(b);
        EXPECT_EQ(x.perfect, y.perfect);
        EXPECT_EQ(x.left_kernel.order(), y.left_kernel.order());
      }
      GModule M2 = trivial_cyclic(G, 2);
      ModulePairing Q{M2, M2, eta, multiplication_pairing(2)};
      ModulePairing PQ = orthogonal_sum(P, Q);
      PQ.check();
      for (int i = 0; i <= 2; ++i) {
        PairingAnalysis s = pairing_analysis(trace_pairing(T, PQ, i));
        PairingAnalysis p = pairing_analysis(trace_pairing(T, P, i)), q = pairing_analysis(trace_pairing(T, Q, i));
        EXPECT_EQ(s.left_kernel.order(), p.left_kernel.order() * q.left_kernel.order());
        EXPECT_EQ(s.right_kernel.order(), p.right_kernel.order() * q.right_kernel.order());
        EXPECT_EQ(s.perfect, p.perfect && q.perfect);
      }
    }
  }
}

TEST(Trace, SubgroupTracesFactorThroughCorestriction) {
  for (const auto& b : battery())
    for (long long m : {2LL, 3LL}) {
      GModule eta = trivial_cyclic(b.G, m);
      TraceTheory T(eta, 2);
      SubgroupOf S = subgroup_of(b.G, b.H);
      SampleReport r = T.compatibility_check(S, 10, 3);
      EXPECT_TRUE(r.ok()) << b.name << " m=" << m;
    }
}

TEST(Trace, FourLemmaPropagation) {
  Rng rng(12);
  std::vector<std::pair<FinGroup, long long>> cases{
      {FinGroup::cyclic(2), 2}, {FinGroup::cyclic(3), 3}, {FinGroup::cyclic(4), 2}, {FinGroup::cyclic(4), 4}};
  int right = 0, left = 0;
  for (int t = 0; t < 50; ++t) {
    const auto& [G, m] = cases[rng.below(cases.size())];
    GModule eta = trivial_cyclic(G, m);
    TraceTheory T(eta, 2);
    GModule M = random_module(G, rng, {m});
    Subgroup S = generated_submodule(M, {random_element(M.module(), rng)});
    PairedSequence q = paired_sequence(M, S, eta);
    const int i = static_cast<int>(rng.below(2));
    PairingLadder L = trace_ladder(T, q, i);
    FourLemmaReport r = four_lemma_check(L);
    EXPECT_TRUE(r.right.consistent()) << t;
    EXPECT_TRUE(r.left.consistent()) << t;
    EXPECT_EQ(r.right.conclusion, pairing_analysis(L.phi[1]).nondeg_right);
    EXPECT_EQ(r.left.conclusion, pairing_analysis(L.phi[2]).nondeg_left);
    right += r.right.hypotheses;
    left += r.left.hypotheses;
  }
  EXPECT_GT(right, 0);
  EXPECT_GT(left, 0);
}
