#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "charp/fields/rational_function.hpp"

namespace charp {

/// number of exponent tuples m in {0..p-1}^d
inline std::size_t pmon_count(std::uint32_t p, int d) {
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) n *= p;
  return n;
}

/// index of m in lexicographic order (m_1 most significant)
inline std::size_t pmon_index(std::uint32_t p, const std::vector<int>& m) {
  std::size_t idx = 0;
  for (int x : m) idx = idx * p + static_cast<std::size_t>(x);
  return idx;
}

inline std::vector<int> pmon_tuple(std::uint32_t p, int d, std::size_t idx) {
  std::vector<int> m(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = static_cast<int>(idx % p);
    idx /= p;
  }
  return m;
}

inline Monomial pmon_monomial(std::uint32_t p, int d, std::size_t idx) {
  Monomial mono;
  auto m = pmon_tuple(p, d, idx);
  for (int i = 0; i < d; ++i) {
    mono.e[i] = m[static_cast<std::size_t>(i)];
    mono.deg += mono.e[i];
  }
  return mono;
}

/// f = sum_m a[m]^p t^m, with a indexed by pmon_index
struct PMonDecomp {
  std::uint32_t p = 2;
  int d = 0;
  std::vector<RatFn> a;

  const RatFn& at(const std::vector<int>& m) const { return a[pmon_index(p, m)]; }

  std::map<std::vector<int>, RatFn> nonzero() const {
    std::map<std::vector<int>, RatFn> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) out.emplace(pmon_tuple(p, d, i), a[i]);
    return out;
  }
};

inline PMonDecomp p_monomial_decompose(const RatFn& f) {
  const auto& K = f.field();
  const auto& R = K->ring();
  const std::uint32_t p = K->p();
  const int d = K->d();
  PMonDecomp out{p, d, std::vector<RatFn>(pmon_count(p, d), RatFn(K))};
  if (f.is_zero()) return out;
  const bool poly = f.is_polynomial();
  Poly P = poly ? f.num() : R.mul(f.num(), R.pow(f.den(), p - 1));
  std::vector<std::vector<Term>> parts(out.a.size());
  for (const auto& t : P.terms) {
    std::size_t idx = 0;
    Term s{};
    for (int i = 0; i < d; ++i) {
      const std::int32_t r = t.m.e[i] % static_cast<std::int32_t>(p);
      idx = idx * p + static_cast<std::size_t>(r);
      s.m.e[i] = (t.m.e[i] - r) / static_cast<std::int32_t>(p);
      s.m.deg += s.m.e[i];
    }
    s.c = K->gf().pth_root(t.c);
    parts[idx].push_back(s);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    Poly root = R.collect(std::move(parts[i]));
    out.a[i] = poly ? RatFn(K, std::move(root), R.one(), RatFn::Canonical{}) : RatFn(K, std::move(root), f.den());
  }
  return out;
}

inline RatFn pmon_reconstruct(const PMonDecomp& dec) {
  const auto& K = dec.a.front().field();
  RatFn sum(K);
  for (std::size_t i = 0; i < dec.a.size(); ++i) {
    if (dec.a[i].is_zero()) continue;
    sum += dec.a[i].frobenius() * RatFn::monomial(K, pmon_monomial(dec.p, dec.d, i));
  }
  return sum;
}

/// p-th root; canonical forms of p-th powers have both parts p-th powers
inline RatFn pth_root(const RatFn& f) {
  const auto& R = f.field()->ring();
  auto n = R.pth_root(f.num());
  auto d = R.pth_root(f.den());
  if (!n || !d) throw NotAPthPower("element is not in k^p");
  return RatFn(f.field(), std::move(*n), std::move(*d), RatFn::Canonical{});
}

inline bool is_pth_power(const RatFn& f) {
  const auto& R = f.field()->ring();
  return R.pth_root(f.num()).has_value() && R.pth_root(f.den()).has_value();
}

/// the m = 0 coefficient a_0 (so that pi_0(f) = a_0^p)
inline RatFn pi0_root(const RatFn& f) {
  if (f.is_zero()) return f;
  if (f.field()->d() == 0) return pth_root(f);
  return p_monomial_decompose(f).a[0];
}

/// pi_0(f) = a_0^p, an element of k^p
inline RatFn pi0(const RatFn& f) { return pi0_root(f).frobenius(); }

}  // namespace charp
