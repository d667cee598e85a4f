#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charp/fields/galois_field.hpp"
#include "charp/random.hpp"

namespace charp {

inline constexpr int kMaxVars = 6;

struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};
  std::int32_t deg = 0;

  static Monomial var(int i, std::int32_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] + b.e[i];
    m.deg = a.deg + b.deg;
    return m;
  }
  friend Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] - b.e[i];
    m.deg = a.deg - b.deg;
    return m;
  }
  bool divides(const Monomial& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
};

/// grlex: total degree first, then lex with t_1 > t_2 > ...
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  return a.e > b.e;
}

struct Term {
  Monomial m;
  GaloisField::Code c;
};

/// terms sorted in decreasing grlex order, no zero coefficients
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].m.deg == 0); }
  const Term& lead() const { return terms.front(); }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].m == b.terms[i].m) || a.terms[i].c != b.terms[i].c) return false;
    return true;
  }
};

/// Polynomial arithmetic over F_q in n <= kMaxVars variables.
class PolyRing {
 public:
  PolyRing(FieldPtr F, int nvars) : F_(std::move(F)), n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("too many variables");
    if (nvars >= 2) init_probe();
  }

  const GaloisField& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  int nvars() const { return n_; }

  Poly zero() const { return {}; }
  Poly constant(GaloisField::Code c) const {
    Poly r;
    if (c != 0) r.terms.push_back({Monomial{}, c});
    return r;
  }
  Poly one() const { return constant(1); }
  Poly var(int i) const {
    Poly r;
    r.terms.push_back({Monomial::var(i), 1});
    return r;
  }
  Poly monomial(const Monomial& m, GaloisField::Code c) const {
    Poly r;
    if (c != 0) r.terms.push_back({m, c});
    return r;
  }

  Poly add(const Poly& a, const Poly& b) const { return merge(a, b, false); }
  Poly sub(const Poly& a, const Poly& b) const { return merge(a, b, true); }

  Poly neg(const Poly& a) const {
    Poly r = a;
    for (auto& t : r.terms) t.c = F_->neg(t.c);
    return r;
  }

  Poly scale(const Poly& a, GaloisField::Code c) const {
    if (c == 0) return {};
    Poly r = a;
    for (auto& t : r.terms) t.c = F_->mul(t.c, c);
    return r;
  }

  Poly mul_term(const Poly& a, const Monomial& m, GaloisField::Code c) const {
    if (c == 0) return {};
    Poly r = a;
    for (auto& t : r.terms) {
      t.m = t.m + m;
      t.c = F_->mul(t.c, c);
    }
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms.size() == 1) return mul_term(b, a.terms[0].m, a.terms[0].c);
    if (b.terms.size() == 1) return mul_term(a, b.terms[0].m, b.terms[0].c);
    std::vector<Term> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
      for (const auto& y : b.terms) raw.push_back({x.m + y.m, F_->mul(x.c, y.c)});
    return collect(std::move(raw));
  }

  Poly pow(const Poly& a, std::int64_t k) const {
    Poly r = one(), base = a;
    while (k > 0) {
      if (k & 1) r = mul(r, base);
      k >>= 1;
      if (k) base = mul(base, base);
    }
    return r;
  }

  /// leading coefficient made 1
  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, F_->inv(a.lead().c));
  }

  /// a / b when b divides a exactly
  std::optional<Poly> divexact(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw DivisionByZero("polynomial division by 0");
    if (b.terms.size() == 1) {
      const auto& lt = b.terms[0];
      GaloisField::Code ic = F_->inv(lt.c);
      Poly q = a;
      for (auto& t : q.terms) {
        if (!lt.m.divides(t.m)) return std::nullopt;
        t.m = t.m - lt.m;
        t.c = F_->mul(t.c, ic);
      }
      return q;
    }
    Poly r = a;
    std::vector<Term> q;
    const auto& lb = b.lead();
    GaloisField::Code ilb = F_->inv(lb.c);
    while (!r.is_zero()) {
      const auto& lr = r.lead();
      if (!lb.m.divides(lr.m)) return std::nullopt;
      Term t{lr.m - lb.m, F_->mul(lr.c, ilb)};
      q.push_back(t);
      r = sub(r, mul_term(b, t.m, t.c));
    }
    Poly out;
    out.terms = std::move(q);
    return out;
  }

  Poly divide(const Poly& a, const Poly& b) const {
    auto q = divexact(a, b);
    if (!q) throw InvalidArgument("inexact polynomial division");
    return *q;
  }

  int top_var(const Poly& a) const {
    int v = -1;
    for (const auto& t : a.terms)
      for (int i = n_ - 1; i > v; --i)
        if (t.m.e[i] != 0) {
          v = i;
          break;
        }
    return v;
  }

  std::int32_t degree_in(const Poly& a, int v) const {
    std::int32_t d = 0;
    for (const auto& t : a.terms) d = std::max(d, t.m.e[v]);
    return d;
  }

  std::int32_t order_in(const Poly& a, int v) const {
    if (a.is_zero()) return 0;
    std::int32_t d = a.terms[0].m.e[v];
    for (const auto& t : a.terms) d = std::min(d, t.m.e[v]);
    return d;
  }

  /// coefficients of a as a polynomial in t_v; entry k multiplies t_v^k
  std::vector<Poly> coeffs_in(const Poly& a, int v) const {
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(a, v)) + 1);
    for (const auto& t : a.terms) {
      Term s = t;
      s.m.deg -= s.m.e[v];
      auto k = static_cast<std::size_t>(s.m.e[v]);
      s.m.e[v] = 0;
      buckets[k].push_back(s);
    }
    std::vector<Poly> out(buckets.size());
    for (std::size_t k = 0; k < buckets.size(); ++k) {
      out[k].terms = std::move(buckets[k]);
      std::sort(out[k].terms.begin(), out[k].terms.end(),
                [](const Term& x, const Term& y) { return grlex_greater(x.m, y.m); });
    }
    return out;
  }

  Poly coeff_in(const Poly& a, int v, std::int32_t k) const {
    std::vector<Term> raw;
    for (const auto& t : a.terms)
      if (t.m.e[v] == k) {
        Term s = t;
        s.m.deg -= k;
        s.m.e[v] = 0;
        raw.push_back(s);
      }
    return sorted(std::move(raw));
  }

  Poly derivative(const Poly& a, int v) const {
    std::vector<Term> raw;
    for (const auto& t : a.terms) {
      if (t.m.e[v] == 0) continue;
      GaloisField::Code k = F_->from_int(t.m.e[v]);
      if (k == 0) continue;
      Term s{t.m, F_->mul(t.c, k)};
      s.m.e[v] -= 1;
      s.m.deg -= 1;
      raw.push_back(s);
    }
    return sorted(std::move(raw));
  }

  /// t_v * d/dt_v
  Poly log_derivative_numer(const Poly& a, int v) const {
    std::vector<Term> raw;
    for (const auto& t : a.terms) {
      GaloisField::Code k = F_->from_int(t.m.e[v]);
      if (k == 0) continue;
      raw.push_back({t.m, F_->mul(t.c, k)});
    }
    Poly r;
    r.terms = std::move(raw);  // same monomials, same order
    return r;
  }

  Poly frobenius(const Poly& a) const {
    const auto p = static_cast<std::int32_t>(F_->p());
    Poly r = a;
    for (auto& t : r.terms) {
      for (int i = 0; i < kMaxVars; ++i) t.m.e[i] *= p;
      t.m.deg *= p;
      t.c = F_->frobenius(t.c);
    }
    return r;
  }

  /// p-th root of a polynomial whose exponents are all divisible by p
  std::optional<Poly> pth_root(const Poly& a) const {
    const auto p = static_cast<std::int32_t>(F_->p());
    Poly r = a;
    for (auto& t : r.terms) {
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.m.e[i] % p != 0) return std::nullopt;
        t.m.e[i] /= p;
      }
      t.m.deg /= p;
      t.c = F_->pth_root(t.c);
    }
    return r;
  }

  /// a with t_v set to 0
  Poly at_zero(const Poly& a, int v) const {
    Poly r;
    for (const auto& t : a.terms)
      if (t.m.e[v] == 0) r.terms.push_back(t);
    return r;
  }

  /// monic gcd; zero only when both inputs are zero
  Poly gcd(const Poly& a, const Poly& b) const {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return one();
    if (a.terms.size() == 1 || b.terms.size() == 1) return monomial_gcd(a, b);
    if (a == b) return monic(a);
    int v = std::max(top_var(a), top_var(b));
    std::int32_t da = degree_in(a, v), db = degree_in(b, v);
    if (da == 0) return gcd(a, content(b, v));
    if (db == 0) return gcd(content(a, v), b);
    if (coprime_in(a, b, v)) return gcd(content(a, v), content(b, v));
    Poly ca = content(a, v), cb = content(b, v);
    Poly pa = divide(a, ca), pb = divide(b, cb);
    Poly c = gcd(ca, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
      if (degree_in(pb, v) == 0) {
        pa = one();
        break;
      }
      Poly r = prem(pa, pb, v);
      pa = std::move(pb);
      pb = r.is_zero() ? r : primitive_part(r, v);
    }
    return monic(mul(c, pa));
  }

  Poly content(const Poly& a, int v) const {
    if (degree_in(a, v) == 0) return monic(a);
    auto cs = coeffs_in(a, v);
    Poly g;
    for (const auto& c : cs) {
      if (c.is_zero()) continue;
      g = g.is_zero() ? monic(c) : gcd(g, c);
      if (g.is_constant()) return one();
    }
    return g;
  }

  Poly primitive_part(const Poly& a, int v) const { return divide(a, content(a, v)); }

  /// pseudo-remainder of a by b in t_v
  Poly prem(Poly a, const Poly& b, int v) const {
    const std::int32_t n = degree_in(b, v);
    Poly lb = coeff_in(b, v, n);
    while (!a.is_zero()) {
      std::int32_t m = degree_in(a, v);
      if (m < n) break;
      Poly la = coeff_in(a, v, m);
      a = sub(mul(lb, a), mul(mul_term(la, Monomial::var(v, m - n), 1), b));
    }
    return a;
  }

  Poly collect(std::vector<Term> raw) const {
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return grlex_greater(x.m, y.m); });
    Poly r;
    for (const auto& t : raw) {
      if (!r.terms.empty() && r.terms.back().m == t.m) {
        r.terms.back().c = F_->add(r.terms.back().c, t.c);
        if (r.terms.back().c == 0) r.terms.pop_back();
      } else if (t.c != 0) {
        r.terms.push_back(t);
      }
    }
    return r;
  }

 private:
  Poly sorted(std::vector<Term> raw) const { return collect(std::move(raw)); }

  // Specialization test: evaluate every variable except v at points of a larger
  // field E containing F_q. If lc_v(a) survives and the univariate gcd of the
  // images is 1, then gcd(a, b) has degree 0 in v.
  void init_probe() {
    const std::uint32_t p = F_->p(), e = F_->e();
    std::uint32_t E = e;
    std::uint64_t order = F_->q();
    while (order < 4096) {
      E += e;
      order = 1;
      for (std::uint32_t i = 0; i < E; ++i) order *= p;
    }
    if (order > GaloisField::kMaxOrder) return;
    big_ = GaloisField::make(static_cast<std::uint32_t>(order));
    embed_.assign(F_->q(), 0);
    GaloisField::Code beta = 0;
    if (e > 1) {
      // a root of the modulus of F_q inside E
      const auto& mod = F_->modulus();
      bool found = false;
      for (GaloisField::Code x = 1; x < big_->q() && !found; ++x) {
        GaloisField::Code acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = big_->add(big_->mul(acc, x), mod[i]);
        if (acc == 0) {
          beta = x;
          found = true;
        }
      }
      if (!found) {
        big_.reset();
        return;
      }
    }
    for (GaloisField::Code c = 0; c < F_->q(); ++c) {
      auto dg = F_->digits(c);
      GaloisField::Code acc = 0;
      for (std::size_t i = dg.size(); i-- > 0;) acc = big_->add(big_->mul(acc, beta), dg[i]);
      embed_[c] = acc;
    }
  }

  std::vector<GaloisField::Code> specialize(const Poly& a, int v, const std::vector<GaloisField::Code>& pt) const {
    std::vector<GaloisField::Code> u(static_cast<std::size_t>(degree_in(a, v)) + 1, 0);
    for (const auto& t : a.terms) {
      GaloisField::Code x = embed_[t.c];
      for (int i = 0; i < n_ && x != 0; ++i)
        if (i != v && t.m.e[i] != 0) x = big_->mul(x, big_->pow(pt[static_cast<std::size_t>(i)], t.m.e[i]));
      auto k = static_cast<std::size_t>(t.m.e[v]);
      u[k] = big_->add(u[k], x);
    }
    return u;
  }

  /// degree of the univariate gcd over E
  std::size_t univariate_gcd_degree(std::vector<GaloisField::Code> a, std::vector<GaloisField::Code> b) const {
    auto trim = [](std::vector<GaloisField::Code>& f) {
      while (!f.empty() && f.back() == 0) f.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
      while (a.size() >= b.size() && !a.empty()) {
        GaloisField::Code f = big_->div(a.back(), b.back());
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = big_->sub(a[i + shift], big_->mul(f, b[i]));
        trim(a);
      }
      std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
  }

  bool coprime_in(const Poly& a, const Poly& b, int v) const {
    if (!big_) return false;
    Rng rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(a.terms.size()) << 20) ^ b.terms.size());
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<GaloisField::Code> pt(static_cast<std::size_t>(n_), 0);
      for (auto& x : pt) x = static_cast<GaloisField::Code>(1 + rng.below(big_->q() - 1));
      auto ua = specialize(a, v, pt);
      if (ua.back() == 0) continue;
      if (univariate_gcd_degree(std::move(ua), specialize(b, v, pt)) == 0) return true;
    }
    return false;
  }

  Poly monomial_gcd(const Poly& a, const Poly& b) const {
    Monomial m = a.terms[0].m;
    for (const auto* p : {&a, &b})
      for (const auto& t : p->terms)
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
    m.deg = 0;
    for (int i = 0; i < kMaxVars; ++i) m.deg += m.e[i];
    return monomial(m, 1);
  }

  Poly merge(const Poly& a, const Poly& b, bool negate_b) const {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    auto bc = [&](GaloisField::Code c) { return negate_b ? F_->neg(c) : c; };
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() || (i < a.terms.size() && grlex_greater(a.terms[i].m, b.terms[j].m))) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() || grlex_greater(b.terms[j].m, a.terms[i].m)) {
        r.terms.push_back({b.terms[j].m, bc(b.terms[j].c)});
        ++j;
      } else {
        GaloisField::Code c = F_->add(a.terms[i].c, bc(b.terms[j].c));
        if (c != 0) r.terms.push_back({a.terms[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  FieldPtr F_;
  int n_;
  FieldPtr big_;
  std::vector<GaloisField::Code> embed_;
};

}  // namespace charp
