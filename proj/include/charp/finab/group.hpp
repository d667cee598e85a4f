#pragma once

#include <string>
#include <vector>

#include "charp/finab/snf.hpp"

namespace charp {

using Elem = std::vector<long long>;

/// Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k, each n_i >= 2
class FinAb {
 public:
  FinAb() = default;
  explicit FinAb(std::vector<long long> factors) : n_(std::move(factors)) {
    for (std::size_t i = 0; i < n_.size(); ++i) {
      if (n_[i] < 2) throw InvalidArgument("invariant factor " + std::to_string(n_[i]) + " < 2");
      if (i > 0 && n_[i] % n_[i - 1] != 0) throw InvalidArgument("invariant factors do not form a divisibility chain");
    }
  }

  /// any list of cyclic orders; normalized through SNF
  static FinAb from_cyclic(const std::vector<long long>& orders) {
    IntMat R(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) R(i, i) = orders[i];
    return from_relations(R);
  }

  /// Z^g / (column span of R); throws if the quotient is infinite
  static FinAb from_relations(const IntMat& R) {
    std::vector<long long> f;
    Snf s = snf(R);
    auto d = s.diagonal();
    if (d.size() < R.rows) throw InvalidArgument("relations leave free rank");
    for (long long x : d) {
      if (x == 0) throw InvalidArgument("relations leave free rank");
      if (x > 1) f.push_back(x);
    }
    return FinAb(std::move(f));
  }

  const std::vector<long long>& factors() const { return n_; }
  std::size_t rank() const { return n_.size(); }
  long long factor(std::size_t i) const { return n_[i]; }
  long long order() const {
    long long o = 1;
    for (long long x : n_) o *= x;
    return o;
  }
  long long exponent() const { return n_.empty() ? 1 : n_.back(); }
  bool is_trivial() const { return n_.empty(); }

  Elem zero() const { return Elem(n_.size(), 0); }
  Elem generator(std::size_t i) const {
    Elem e = zero();
    e[i] = 1;
    return e;
  }
  Elem reduce(Elem x) const {
    if (x.size() != n_.size()) throw InvalidArgument("element of wrong length");
    for (std::size_t i = 0; i < n_.size(); ++i) x[i] = floor_mod(x[i], n_[i]);
    return x;
  }
  Elem add(const Elem& x, const Elem& y) const {
    Elem z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return reduce(z);
  }
  Elem scale(long long c, const Elem& x) const {
    Elem z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return reduce(z);
  }
  bool is_zero(const Elem& x) const { return reduce(x) == zero(); }

  /// all elements, in mixed-radix order
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    Elem cur = zero();
    for (;;) {
      out.push_back(cur);
      std::size_t i = n_.size();
      while (i > 0) {
        --i;
        if (++cur[i] < n_[i]) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
      if (n_.empty()) return out;
    }
  }

  std::string text() const {
    if (n_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < n_.size(); ++i) s += (i ? " x " : "") + std::string("Z/") + std::to_string(n_[i]);
    return s;
  }

  friend bool operator==(const FinAb& a, const FinAb& b) { return a.n_ == b.n_; }
  friend bool operator!=(const FinAb& a, const FinAb& b) { return !(a == b); }

 private:
  std::vector<long long> n_;
};

/// subgroup H of A, stored as the lattice H~ + N in Z^k (N the relation lattice)
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const FinAb& A, const std::vector<Elem>& gens) : A_(A) {
    for (const auto& x : gens)
      if (x.size() != A.rank()) throw InvalidArgument("subgroup generator of wrong length");
    L_ = Lattice(A.rank(), A.exponent(), relations_plus(A, gens));
  }
  static Subgroup whole(const FinAb& A) {
    std::vector<Elem> g;
    for (std::size_t i = 0; i < A.rank(); ++i) g.push_back(A.generator(i));
    return Subgroup(A, g);
  }
  static Subgroup trivial(const FinAb& A) { return Subgroup(A, {}); }
  static Subgroup from_lattice(const FinAb& A, Lattice L) {
    Subgroup s;
    s.A_ = A;
    s.L_ = std::move(L);
    return s;
  }

  const FinAb& ambient() const { return A_; }
  const Lattice& lattice() const { return L_; }

  /// a generating set (the Hermite basis rows, reduced)
  std::vector<Elem> generators() const {
    std::vector<Elem> out;
    for (const auto& b : L_.basis()) {
      Elem x = A_.reduce(b);
      if (!A_.is_zero(x)) out.push_back(x);
    }
    return out;
  }

  long long order() const { return A_.order() / L_.index(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Elem& x) const { return L_.contains(x); }
  bool contains(const Subgroup& o) const { return L_.contains(o.L_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.A_ == b.A_ && a.L_ == b.L_; }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

  friend Subgroup operator+(const Subgroup& a, const Subgroup& b) {
    auto g = a.generators();
    for (auto& x : b.generators()) g.push_back(x);
    return Subgroup(a.A_, g);
  }

 private:
  static std::vector<std::vector<long long>> relations_plus(const FinAb& A, const std::vector<Elem>& gens) {
    std::vector<std::vector<long long>> g(gens.begin(), gens.end());
    for (std::size_t i = 0; i < A.rank(); ++i) {
      std::vector<long long> r(A.rank(), 0);
      r[i] = A.factor(i);
      g.push_back(std::move(r));
    }
    return g;
  }

  FinAb A_;
  Lattice L_;
};

/// f : A -> B, column j of M is f(generator j)
class FinHom {
 public:
  FinHom() = default;
  FinHom(FinAb dom, FinAb cod, IntMat M) : dom_(std::move(dom)), cod_(std::move(cod)), M_(std::move(M)) {
    if (M_.rows != cod_.rank() || M_.cols != dom_.rank()) throw InvalidArgument("hom matrix has the wrong shape");
    for (std::size_t i = 0; i < M_.rows; ++i)
      for (std::size_t j = 0; j < M_.cols; ++j) M_(i, j) = floor_mod(M_(i, j), cod_.factor(i));
    for (std::size_t j = 0; j < M_.cols; ++j)
      if (!cod_.is_zero(cod_.scale(dom_.factor(j), M_.column(j))))
        throw InvalidArgument("hom is not well defined on generator " + std::to_string(j));
  }
  static FinHom zero(const FinAb& A, const FinAb& B) { return FinHom(A, B, IntMat(B.rank(), A.rank())); }
  static FinHom identity(const FinAb& A) { return FinHom(A, A, IntMat::identity(A.rank())); }
  /// multiplication by c
  static FinHom multiplication(const FinAb& A, long long c) {
    IntMat M = IntMat::identity(A.rank());
    for (auto& x : M.a) x *= c;
    return FinHom(A, A, M);
  }

  const FinAb& domain() const { return dom_; }
  const FinAb& codomain() const { return cod_; }
  const IntMat& matrix() const { return M_; }

  Elem operator()(const Elem& x) const {
    Elem y(cod_.rank(), 0);
    for (std::size_t i = 0; i < M_.rows; ++i)
      for (std::size_t j = 0; j < M_.cols; ++j) y[i] += M_(i, j) * x[j];
    return cod_.reduce(y);
  }

  /// this o f
  FinHom after(const FinHom& f) const {
    if (f.cod_ != dom_) throw InvalidArgument("composing homs with mismatched groups");
    return FinHom(f.dom_, cod_, M_ * f.M_);
  }

  Subgroup image() const {
    std::vector<Elem> g;
    for (std::size_t j = 0; j < M_.cols; ++j) g.push_back(M_.column(j));
    return Subgroup(cod_, g);
  }

  Subgroup kernel() const {
    // B embeds in (Z/e)^kb by scaling coordinate i by e / n_i; the kernel lattice
    // is read off the Hermite form of [image | identity] mod e
    const std::size_t ka = dom_.rank(), kb = cod_.rank();
    const long long e = cod_.exponent();
    if (e == 1) return Subgroup::whole(dom_);
    std::vector<std::vector<long long>> rows;
    for (std::size_t j = 0; j < ka; ++j) {
      std::vector<long long> r(kb + ka, 0);
      for (std::size_t i = 0; i < kb; ++i) r[i] = M_(i, j) * (e / cod_.factor(i));
      r[kb + j] = 1;
      rows.push_back(std::move(r));
    }
    Lattice L(kb + ka, e, rows);
    std::vector<Elem> g;
    for (std::size_t c = kb; c < kb + ka; ++c)
      g.push_back(dom_.reduce(Elem(L.basis()[c].begin() + static_cast<long>(kb), L.basis()[c].end())));
    return Subgroup(dom_, g);
  }

  bool is_injective() const { return kernel().is_trivial(); }
  bool is_surjective() const { return image().order() == cod_.order(); }

  friend bool operator==(const FinHom& a, const FinHom& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.M_ == b.M_;
  }

 private:
  FinAb dom_, cod_;
  IntMat M_;
};

/// H/K for K <= H <= A, with coordinates and lifts
struct Subquotient {
  FinAb group;
  Subgroup top, bottom;
  IntMat to_coords;           // group.rank() x (basis of top): coefficients -> group coordinates
  std::vector<Elem> lifts;    // element of A lifting each generator of group

  /// coordinates in `group` of x in top
  Elem coords(const Elem& x) const {
    auto c = top.lattice().solve(x);
    if (!c) throw NotSubgroup("element is not in the subgroup");
    Elem y(group.rank(), 0);
    for (std::size_t i = 0; i < group.rank(); ++i)
      for (std::size_t j = 0; j < c->size(); ++j) y[i] += to_coords(i, j) * (*c)[j];
    return group.reduce(y);
  }
};

inline Subquotient subquotient(const Subgroup& H, const Subgroup& K) {
  if (!H.contains(K)) throw NotSubgroup("bottom is not contained in top");
  const auto& A = H.ambient();
  const std::size_t k = A.rank();
  const auto& hb = H.lattice().basis();
  // relations: K's Hermite basis written in H's
  IntMat R(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = H.lattice().solve(K.lattice().basis()[j]);
    for (std::size_t i = 0; i < k; ++i) R(i, j) = (*c)[i];
  }
  const long long e = A.exponent();
  Snf s = snf_mod(R, e);
  auto d = s.diagonal();
  for (auto& x : d)
    if (x == 0) x = e;
  std::vector<long long> f;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 1) {
      f.push_back(d[i]);
      keep.push_back(i);
    }
  Subquotient q{FinAb(f), H, K, IntMat(keep.size(), k), {}};
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) q.to_coords(r, j) = s.U(keep[r], j);
    Elem lift(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) lift[i] += s.Uinv(j, keep[r]) * hb[j][i];
    q.lifts.push_back(A.reduce(lift));
  }
  return q;
}

inline Subquotient quotient(const Subgroup& K) { return subquotient(Subgroup::whole(K.ambient()), K); }
inline Subquotient as_group(const Subgroup& H) { return subquotient(H, Subgroup::trivial(H.ambient())); }

}  // namespace charp
