#pragma once

#include <cstdlib>
#include <map>
#include <string>

#include "charp/gcoh/module.hpp"

namespace charp {

/// CHARP_BUDGET overrides the default cost guard of 10^7 table entries
inline long double cost_budget(long double fallback = 1e7L) {
  if (const char* s = std::getenv("CHARP_BUDGET")) {
    char* end = nullptr;
    long double v = std::strtold(s, &end);
    if (end != s && v > 0) return v;
  }
  return fallback;
}

inline long long tuple_count(int order, int n) {
  long long t = 1;
  for (int k = 0; k < n; ++k) t *= order;
  return t;
}

/// g_1..g_n of tuple index t, g_1 most significant
inline std::vector<int> decode_tuple(long long t, int order, int n) {
  std::vector<int> g(n);
  for (int k = n - 1; k >= 0; --k) {
    g[k] = static_cast<int>(t % order);
    t /= order;
  }
  return g;
}

inline long long encode_tuple(const std::vector<int>& g, int order) {
  long long t = 0;
  for (int x : g) t = t * order + x;
  return t;
}

/// inhomogeneous n-cochains G^n -> M as one element of M^{|G|^n}; coordinate
/// k * |G|^n + t holds factor k of the value at tuple t
inline FinAb cochain_group(const GModule& M, int n) {
  const long long T = tuple_count(M.group().order(), n);
  std::vector<long long> f;
  for (long long x : M.module().factors())
    for (long long t = 0; t < T; ++t) f.push_back(x);
  return FinAb(f);
}

struct Cochain {
  int degree = 0;
  Elem values;
};

inline Elem cochain_value(const GModule& M, const Cochain& f, long long t) {
  const long long T = tuple_count(M.group().order(), f.degree);
  Elem x(M.module().rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = f.values[k * T + t];
  return x;
}

inline void set_cochain_value(const GModule& M, Cochain& f, long long t, const Elem& x) {
  const long long T = tuple_count(M.group().order(), f.degree);
  for (std::size_t k = 0; k < x.size(); ++k) f.values[k * T + t] = x[k];
}

/// cochain from a function of the tuple
template <class F>
Cochain make_cochain(const GModule& M, int n, F&& value) {
  Cochain c{n, cochain_group(M, n).zero()};
  const int o = M.group().order();
  for (long long t = 0; t < tuple_count(o, n); ++t) set_cochain_value(M, c, t, M.module().reduce(value(decode_tuple(t, o, n))));
  return c;
}

/// (df)(g_1..g_{n+1}) = g_1 f(g_2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{n+1} f(g_1..g_n)
inline Cochain coboundary(const GModule& M, const Cochain& f) {
  const FinGroup& G = M.group();
  const int n = f.degree, o = G.order();
  const FinAb& A = M.module();
  return make_cochain(M, n + 1, [&](const std::vector<int>& g) {
    std::vector<int> sub(g.begin() + 1, g.end());
    Elem s = M.act(g[0], cochain_value(M, f, encode_tuple(sub, o)));
    for (int i = 1; i <= n; ++i) {
      std::vector<int> h;
      for (int k = 0; k < n + 1; ++k) {
        if (k == i - 1) {
          h.push_back(G.mul(g[k], g[k + 1]));
          ++k;
        } else {
          h.push_back(g[k]);
        }
      }
      s = A.add(s, A.scale(i % 2 ? -1 : 1, cochain_value(M, f, encode_tuple(h, o))));
    }
    std::vector<int> head(g.begin(), g.end() - 1);
    return A.add(s, A.scale((n + 1) % 2 ? -1 : 1, cochain_value(M, f, encode_tuple(head, o))));
  });
}

/// d_n : C^n -> C^{n+1} as a hom
inline FinHom coboundary_map(const GModule& M, int n) {
  const FinGroup& G = M.group();
  const int o = G.order();
  const FinAb Cn = cochain_group(M, n), Cn1 = cochain_group(M, n + 1);
  const long long T = tuple_count(o, n), T1 = tuple_count(o, n + 1);
  const std::size_t r = M.module().rank();
  IntMat D(Cn1.rank(), Cn.rank());
  for (long long u = 0; u < T1; ++u) {
    auto g = decode_tuple(u, o, n + 1);
    // g_1 f(g_2..g_{n+1})
    {
      std::vector<int> sub(g.begin() + 1, g.end());
      const long long t = encode_tuple(sub, o);
      const IntMat& R = M.rho(g[0]).matrix();
      for (std::size_t k2 = 0; k2 < r; ++k2)
        for (std::size_t k = 0; k < r; ++k) D(k2 * T1 + u, k * T + t) += R(k2, k);
    }
    for (int i = 1; i <= n + 1; ++i) {
      std::vector<int> h;
      if (i <= n) {
        for (int k = 0; k < n + 1; ++k) {
          if (k == i - 1) {
            h.push_back(G.mul(g[k], g[k + 1]));
            ++k;
          } else {
            h.push_back(g[k]);
          }
        }
      } else {
        h.assign(g.begin(), g.end() - 1);
      }
      const long long t = encode_tuple(h, o);
      for (std::size_t k = 0; k < r; ++k) D(k * T1 + u, k * T + t) += i % 2 ? -1 : 1;
    }
  }
  return FinHom(Cn, Cn1, D);
}

/// H^n(G, M) = ker d_n / im d_{n-1} with cocycle lifts
struct GroupCohomology {
  GModule M;
  int n = 0;
  FinAb cochains;
  FinHom d_in, d_out;
  Subquotient H;

  const FinAb& group() const { return H.group; }
  bool is_cocycle(const Cochain& f) const { return f.degree == n && cochains.is_zero(d_out(f.values)); }
  Elem class_of(const Cochain& f) const {
    if (f.degree != n) throw DegreeMismatch("cochain of degree " + std::to_string(f.degree));
    return H.coords(f.values);
  }
  Cochain lift(const Elem& cls) const {
    Elem v = cochains.zero();
    for (std::size_t k = 0; k < cls.size(); ++k) v = cochains.add(v, cochains.scale(cls[k], H.lifts[k]));
    return {n, v};
  }
  Cochain generator(std::size_t k) const { return {n, H.lifts[k]}; }
};

inline void check_cohomology_budget(const GModule& M, int n) {
  long double cost = static_cast<long double>(M.module().order());
  for (int k = 0; k <= n; ++k) cost *= M.group().order();
  if (cost > cost_budget())
    throw BudgetExceeded("|G|^" + std::to_string(n + 1) + " |M| = " + std::to_string(static_cast<double>(cost)) +
                         " exceeds the budget");
}

inline GroupCohomology cohomology(const GModule& M, int n) {
  if (n < 0) throw DegreeOutOfRange("negative cohomological degree");
  check_cohomology_budget(M, n);
  GroupCohomology h{M, n, cochain_group(M, n), {}, coboundary_map(M, n), {}};
  h.d_in = n == 0 ? FinHom::zero(FinAb(), h.cochains) : coboundary_map(M, n - 1);
  h.H = subquotient(h.d_out.kernel(), h.d_in.image());
  return h;
}

/// (f u g)(g_1..g_{i+j}) = beta(f(g_1..g_i), (g_1..g_i) g(g_{i+1}..g_{i+j}))
inline Cochain cup(const GModule& M, const Cochain& f, const GModule& N, const Cochain& g, const GModule& P,
                   const Bilinear& beta) {
  const FinGroup& G = M.group();
  const int o = G.order(), i = f.degree, j = g.degree;
  return make_cochain(P, i + j, [&](const std::vector<int>& x) {
    std::vector<int> a(x.begin(), x.begin() + i), b(x.begin() + i, x.end());
    int prod = G.identity();
    for (int y : a) prod = G.mul(prod, y);
    return beta(cochain_value(M, f, encode_tuple(a, o)), N.act(prod, cochain_value(N, g, encode_tuple(b, o))));
  });
}

/// cup on classes as a bilinear H^i(M) x H^j(N) -> H^{i+j}(P)
inline Bilinear cup_classes(const GroupCohomology& HM, const GroupCohomology& HN, const GroupCohomology& HP,
                            const Bilinear& beta) {
  if (HP.n != HM.n + HN.n) throw DegreeMismatch("cup lands in degree " + std::to_string(HM.n + HN.n));
  Bilinear out(HM.group(), HN.group(), HP.group());
  for (std::size_t a = 0; a < HM.group().rank(); ++a)
    for (std::size_t b = 0; b < HN.group().rank(); ++b)
      out.set(a, b, HP.class_of(cup(HM.M, HM.generator(a), HN.M, HN.generator(b), HP.M, beta)));
  return out;
}

/// beta^T(y, x) = beta(x, y)
inline Bilinear transpose(const Bilinear& beta) {
  Bilinear t(beta.right(), beta.left(), beta.target());
  for (std::size_t a = 0; a < beta.left().rank(); ++a)
    for (std::size_t b = 0; b < beta.right().rank(); ++b) t.set(b, a, beta.at(a, b));
  return t;
}

/// multiplication Z/n x Z/n -> Z/n
inline Bilinear multiplication_pairing(long long n) {
  FinAb A = n > 1 ? FinAb({n}) : FinAb();
  Bilinear b(A, A, A);
  if (n > 1) b.set(0, 0, {1});
  return b;
}

/// f o cochain, pointwise
inline Cochain push_forward(const GModule& M, const GModule& N, const FinHom& f, const Cochain& c) {
  const int o = M.group().order();
  return make_cochain(N, c.degree, [&](const std::vector<int>& g) { return f(cochain_value(M, c, encode_tuple(g, o))); });
}

/// H^n(f) for an equivariant f : M -> N
inline FinHom induced_map(const GroupCohomology& HM, const GroupCohomology& HN, const FinHom& f) {
  if (!is_equivariant(HM.M, HN.M, f)) throw InvalidArgument("map of modules is not G-linear");
  IntMat m(HN.group().rank(), HM.group().rank());
  for (std::size_t k = 0; k < HM.group().rank(); ++k) {
    Elem y = HN.class_of(push_forward(HM.M, HN.M, f, HM.generator(k)));
    for (std::size_t r = 0; r < y.size(); ++r) m(r, k) = y[r];
  }
  return FinHom(HM.group(), HN.group(), m);
}

/// res : C^n(G, M) -> C^n(H, M|_H), restriction to H^n
inline Cochain restrict_cochain(const SubgroupOf& S, const GModule& M, const Cochain& f) {
  const int o = S.G.order();
  GModule MH = M.restrict_to(S);
  return make_cochain(MH, f.degree, [&](const std::vector<int>& h) {
    std::vector<int> g;
    for (int x : h) g.push_back(S.incl[x]);
    return cochain_value(M, f, encode_tuple(g, o));
  });
}

/// coset representatives used by the transfer: left_reps for G/H, and
/// right_rep[g] in Hg
struct TransferChoice {
  std::vector<int> left_reps;
  std::vector<int> right_rep;
};

inline TransferChoice smallest_reps(const SubgroupOf& S) {
  TransferChoice c{S.left_reps(), {}};
  for (int g = 0; g < S.G.order(); ++g) c.right_rep.push_back(S.rep_of_right(g));
  return c;
}

/// random representatives, for checking independence of the choice
inline TransferChoice random_reps(const SubgroupOf& S, Rng& rng) {
  TransferChoice c = smallest_reps(S);
  for (int& r : c.left_reps) r = S.G.mul(r, S.incl[rng.below(S.incl.size())]);
  std::map<int, int> pick;  // smallest element of Hg -> chosen representative
  for (int g = 0; g < S.G.order(); ++g) {
    int key = c.right_rep[g];
    if (!pick.count(key)) pick[key] = S.G.mul(S.incl[rng.below(S.incl.size())], key);
    c.right_rep[g] = pick[key];
  }
  return c;
}

/// cores on cochains through homogeneous cochains: with a_0 = 1, a_k = g_1..g_k,
/// (cor f)(g_1..g_n) = sum_s s X(s^{-1} a_0, .., s^{-1} a_n), where
/// X(b_0..b_n) = h_0 f(h_0^{-1} h_1, .., h_{n-1}^{-1} h_n), h_k = b_k r(b_k)^{-1}
/// and r(b) the chosen representative of Hb
inline Cochain corestrict_cochain(const SubgroupOf& S, const GModule& M, const Cochain& f,
                                  const TransferChoice& choice) {
  const FinGroup& G = S.G;
  const int o = G.order(), oh = S.H.order(), n = f.degree;
  GModule MH = M.restrict_to(S);
  const FinAb& A = M.module();
  auto hpart = [&](int b) { return G.mul(b, G.inv(choice.right_rep[b])); };
  return make_cochain(M, n, [&](const std::vector<int>& g) {
    std::vector<int> a{G.identity()};
    for (int x : g) a.push_back(G.mul(a.back(), x));
    Elem s = A.zero();
    for (int sig : choice.left_reps) {
      std::vector<int> h;
      for (int x : a) h.push_back(hpart(G.mul(G.inv(sig), x)));
      std::vector<int> arg;
      for (int k = 0; k < n; ++k) arg.push_back(S.pos[G.mul(G.inv(h[k]), h[k + 1])]);
      Elem v = MH.act(S.pos[h[0]], cochain_value(MH, f, encode_tuple(arg, oh)));
      s = A.add(s, M.act(sig, v));
    }
    return s;
  });
}

inline Cochain corestrict_cochain(const SubgroupOf& S, const GModule& M, const Cochain& f) {
  return corestrict_cochain(S, M, f, smallest_reps(S));
}

/// res : H^n(G, M) -> H^n(H, M); HH must be the cohomology of M|_H
inline FinHom restriction_map(const SubgroupOf& S, const GroupCohomology& HG, const GroupCohomology& HH) {
  IntMat m(HH.group().rank(), HG.group().rank());
  for (std::size_t k = 0; k < HG.group().rank(); ++k) {
    Elem y = HH.class_of(restrict_cochain(S, HG.M, HG.generator(k)));
    for (std::size_t r = 0; r < y.size(); ++r) m(r, k) = y[r];
  }
  return FinHom(HG.group(), HH.group(), m);
}

inline FinHom corestriction_map(const SubgroupOf& S, const GroupCohomology& HH, const GroupCohomology& HG,
                                const TransferChoice& choice) {
  IntMat m(HG.group().rank(), HH.group().rank());
  for (std::size_t k = 0; k < HH.group().rank(); ++k) {
    Elem y = HG.class_of(corestrict_cochain(S, HG.M, HH.generator(k), choice));
    for (std::size_t r = 0; r < y.size(); ++r) m(r, k) = y[r];
  }
  return FinHom(HH.group(), HG.group(), m);
}

inline FinHom corestriction_map(const SubgroupOf& S, const GroupCohomology& HH, const GroupCohomology& HG) {
  return corestriction_map(S, HH, HG, smallest_reps(S));
}

/// delta : H^n(M'') -> H^{n+1}(M') for 0 -> M' -i-> M -p-> M'' -> 0
inline FinHom connecting_map(const GroupCohomology& Hpp, const GroupCohomology& Hp, const GModule& M, const FinHom& i,
                             const FinHom& p) {
  if (Hp.n != Hpp.n + 1) throw DegreeMismatch("connecting map raises the degree by one");
  const FinAb& Mp = Hp.M.module();
  if (Mp.order() > 4096) throw BudgetExceeded("submodule too large to invert the inclusion by enumeration");
  std::map<Elem, Elem> back;
  for (const auto& x : Mp.elements()) back[i(x)] = x;
  // a set-theoretic lift M'' -> M through lifts of the generators
  const FinAb& Mpp = Hpp.M.module();
  std::vector<Elem> glift;
  for (std::size_t k = 0; k < Mpp.rank(); ++k) {
    Elem target = Mpp.generator(k);
    bool found = false;
    for (const auto& x : M.module().elements())
      if (p(x) == target) {
        glift.push_back(x);
        found = true;
        break;
      }
    if (!found) throw NotExact("projection is not surjective");
  }
  const int o = M.group().order();
  IntMat m(Hp.group().rank(), Hpp.group().rank());
  for (std::size_t k = 0; k < Hpp.group().rank(); ++k) {
    Cochain z = Hpp.generator(k);
    Cochain lz = make_cochain(M, z.degree, [&](const std::vector<int>& g) {
      Elem y = cochain_value(Hpp.M, z, encode_tuple(g, o));
      Elem x = M.module().zero();
      for (std::size_t j = 0; j < y.size(); ++j) x = M.module().add(x, M.module().scale(y[j], glift[j]));
      return x;
    });
    Cochain dz = coboundary(M, lz);
    Cochain w = make_cochain(Hp.M, dz.degree, [&](const std::vector<int>& g) {
      auto it = back.find(cochain_value(M, dz, encode_tuple(g, o)));
      if (it == back.end()) throw NotExact("coboundary of the lift leaves the submodule");
      return it->second;
    });
    Elem y = Hp.class_of(w);
    for (std::size_t r = 0; r < y.size(); ++r) m(r, k) = y[r];
  }
  return FinHom(Hpp.group(), Hp.group(), m);
}

}  // namespace charp
