#pragma once

#include <vector>

#include "charp/finab/pairing.hpp"

namespace charp {

/// finitely generated A = Z^g / (columns of relations), free rank allowed
struct FgAb {
  std::size_t gens = 0;
  IntMat relations;  // gens x s
};

/// phi : A x B -> Q/Z by values phi(e_i, h_j) on generators
struct FgPairing {
  FgAb A;
  FinAb B;
  std::vector<std::vector<QZ>> values;

  QZ operator()(const std::vector<long long>& x, const Elem& b) const {
    QZ s;
    for (std::size_t i = 0; i < A.gens; ++i)
      for (std::size_t j = 0; j < B.rank(); ++j) s += (x[i] * b[j]) * values[i][j];
    return s;
  }
};

struct DualTopology {
  Subgroup right_kernel;              // in B
  FinAb completion;                   // (B / right kernel)*
  IntMat j;                           // completion coordinates of j(e_i), column i
  std::vector<Lattice> basic_opens;   // ker phi(-, S) in Z^g for subgroups S of B; each contains the relations
  Lattice ker_j;                      // in Z^g
  Lattice left_kernel;                // in Z^g
  bool ker_j_is_left_kernel = false;
  bool j_surjective = false;
  bool b_onto_continuous_dual = false;  // |B / rker| = |A / lker|
};

namespace detail {

/// {x in Z^g : phi(x, b) = 0 for b in S} as a lattice (finite index since B is finite)
inline Lattice annihilator(const FgPairing& phi, const std::vector<Elem>& S) {
  const std::size_t g = phi.A.gens;
  const long long N = phi.B.exponent();
  if (S.empty()) return Lattice(g, 1, {});
  // x -> (phi(x, s) * N mod N)_s
  IntMat M(S.size(), g);
  for (std::size_t k = 0; k < S.size(); ++k)
    for (std::size_t i = 0; i < g; ++i) {
      std::vector<long long> e(g, 0);
      e[i] = 1;
      M(k, i) = phi(e, S[k]).times(N);
    }
  IntMat aug(S.size(), g + S.size());
  for (std::size_t k = 0; k < S.size(); ++k) {
    for (std::size_t i = 0; i < g; ++i) aug(k, i) = M(k, i);
    aug(k, g + k) = N;
  }
  IntMat K = integer_kernel(aug);
  std::vector<std::vector<long long>> gens;
  for (std::size_t c = 0; c < K.cols; ++c) {
    std::vector<long long> x(g);
    for (std::size_t i = 0; i < g; ++i) x[i] = K(i, c);
    gens.push_back(x);
  }
  return Lattice(g, N, gens);
}

}  // namespace detail

inline DualTopology dual_topology_completion(const FgPairing& phi, long long max_enumeration = 4096) {
  const std::size_t g = phi.A.gens;
  const FinAb& B = phi.B;
  if (phi.values.size() != g) throw InvalidArgument("pairing rows do not match the generators of A");
  for (const auto& row : phi.values)
    if (row.size() != B.rank()) throw InvalidArgument("pairing columns do not match B");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < B.rank(); ++j)
      if (!(B.factor(j) * phi.values[i][j]).is_zero()) throw InvalidArgument("pairing value not killed by n_j");
  for (std::size_t c = 0; c < phi.A.relations.cols; ++c)
    for (std::size_t j = 0; j < B.rank(); ++j)
      if (!phi(phi.A.relations.column(c), B.generator(j)).is_zero())
        throw InvalidArgument("pairing does not vanish on the relations of A");
  if (B.order() > max_enumeration) throw BudgetExceeded("B too large to enumerate its subgroups");

  DualTopology out;
  // right kernel: b with phi(e_i, b) = 0 for all i
  {
    const long long N = B.exponent();
    if (N == 1 || g == 0) {
      out.right_kernel = Subgroup::whole(B);
    } else {
      FinAb target(std::vector<long long>(g, N));
      IntMat M(g, B.rank());
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < B.rank(); ++j) M(i, j) = phi.values[i][j].times(N);
      out.right_kernel = FinHom(B, target, M).kernel();
    }
  }
  Subquotient Q = quotient(out.right_kernel);
  out.completion = dual_group(Q.group);
  out.j = IntMat(Q.group.rank(), g);
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<long long> e(g, 0);
    e[i] = 1;
    for (std::size_t k = 0; k < Q.group.rank(); ++k) out.j(k, i) = phi(e, Q.lifts[k]).times(Q.group.factor(k));
  }
  // ker j
  {
    const std::size_t kq = Q.group.rank();
    IntMat aug(kq, g + kq);
    for (std::size_t k = 0; k < kq; ++k) {
      for (std::size_t i = 0; i < g; ++i) aug(k, i) = out.j(k, i);
      aug(k, g + k) = Q.group.factor(k);
    }
    IntMat K = integer_kernel(aug);
    std::vector<std::vector<long long>> gens;
    for (std::size_t c = 0; c < K.cols; ++c) {
      std::vector<long long> x(g);
      for (std::size_t i = 0; i < g; ++i) x[i] = K(i, c);
      gens.push_back(x);
    }
    out.ker_j = Lattice(g, Q.group.exponent(), gens);
  }
  std::vector<Elem> all_gens;
  for (std::size_t j = 0; j < B.rank(); ++j) all_gens.push_back(B.generator(j));
  out.left_kernel = detail::annihilator(phi, all_gens);
  out.ker_j_is_left_kernel = out.ker_j == out.left_kernel;
  {
    std::vector<Elem> cols;
    for (std::size_t i = 0; i < g; ++i) cols.push_back(out.j.column(i));
    out.j_surjective = out.completion.is_trivial() || Subgroup(out.completion, cols).order() == out.completion.order();
  }
  out.b_onto_continuous_dual = Q.group.order() == out.left_kernel.index();

  // subgroups of B by closure of the cyclic ones under sums
  std::vector<Subgroup> subs;
  auto add_sub = [&](const Subgroup& S) {
    for (const auto& x : subs)
      if (x == S) return false;
    subs.push_back(S);
    return true;
  };
  for (const auto& x : B.elements()) add_sub(Subgroup(B, {x}));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t k = 0; k < i; ++k) add_sub(subs[i] + subs[k]);
  for (const auto& S : subs) {
    Lattice L = detail::annihilator(phi, S.generators());
    bool fresh = true;
    for (const auto& x : out.basic_opens) fresh = fresh && !(x == L);
    if (fresh) out.basic_opens.push_back(L);
  }
  return out;
}

}  // namespace charp
