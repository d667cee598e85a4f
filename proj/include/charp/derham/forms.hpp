#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "charp/fields/rational_function.hpp"

namespace charp {

/// subset of {0..d-1} as a bitmask; index i stands for t_{i+1}
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i)
    if ((s >> i) & 1u) out.push_back(i);
  return out;
}

inline Subset subset_of(const std::vector<int>& idx) {
  Subset s = 0;
  for (int i : idx) {
    if (i < 0 || i >= kMaxVars) throw InvalidArgument("subset index out of range");
    if ((s >> i) & 1u) throw InvalidArgument("repeated subset index");
    s |= Subset{1} << i;
  }
  return s;
}

/// lexicographic order on sorted index lists
struct SubsetLess {
  bool operator()(Subset a, Subset b) const {
    for (int i = 0; i < 32; ++i) {
      bool ia = (a >> i) & 1u, ib = (b >> i) & 1u;
      if (ia == ib) continue;
      // first difference: the list holding the smaller element wins,
      // unless the other list has already ended
      if (ia) return (b >> i) != 0;
      return (a >> i) == 0;
    }
    return false;
  }
};

/// all r-subsets of {0..d-1} in lexicographic order
inline std::vector<Subset> subsets_of_size(int d, int r) {
  std::vector<Subset> out;
  if (r < 0 || r > d) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(subset_of(cur));
      return;
    }
    for (int i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

/// sum_I a_I dt_I/t_I of fixed degree
class DiffForm {
 public:
  using Terms = std::map<Subset, RatFn, SubsetLess>;

  DiffForm() = default;
  DiffForm(RatFieldPtr K, int degree) : K_(std::move(K)), degree_(degree) {}

  static DiffForm function(const RatFn& f) {
    DiffForm w(f.field(), 0);
    w.add_term(0, f);
    return w;
  }
  static DiffForm basis(const RatFn& a, Subset I) {
    DiffForm w(a.field(), subset_size(I));
    w.add_term(I, a);
    return w;
  }
  /// dt_I/t_I
  static DiffForm dlog_basis(const RatFieldPtr& K, Subset I) { return basis(RatFn::from_int(K, 1), I); }

  const RatFieldPtr& field() const { return K_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RatFn coeff(Subset I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? RatFn(K_) : it->second;
  }

  void add_term(Subset I, const RatFn& a) {
    if (subset_size(I) != degree_) throw DegreeMismatch("term of wrong degree");
    if (I >> K_->d()) throw InvalidArgument("subset index beyond d");
    if (a.is_zero()) return;
    auto it = terms_.find(I);
    if (it == terms_.end()) {
      terms_.emplace(I, a);
      return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  friend DiffForm operator+(const DiffForm& a, const DiffForm& b) {
    check_same(a, b);
    DiffForm r = a;
    for (const auto& [I, c] : b.terms_) r.add_term(I, c);
    return r;
  }
  friend DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }
  DiffForm operator-() const {
    DiffForm r = *this;
    for (auto& [I, c] : r.terms_) c = -c;
    return r;
  }
  DiffForm& operator+=(const DiffForm& b) { return *this = *this + b; }

  /// f * omega
  DiffForm scaled(const RatFn& f) const {
    DiffForm r(K_, degree_);
    if (f.is_zero()) return r;
    for (const auto& [I, c] : terms_) r.terms_.emplace(I, c * f);
    return r;
  }

 private:
  static void check_same(const DiffForm& a, const DiffForm& b) {
    if (a.degree_ != b.degree_) throw DegreeMismatch("adding forms of degrees " + std::to_string(a.degree_) + " and " +
                                                     std::to_string(b.degree_));
  }

  RatFieldPtr K_;
  int degree_ = 0;
  Terms terms_;
};

/// sign of dt_I ^ dt_J relative to dt_{I u J}; 0 if they overlap
inline int wedge_sign(Subset I, Subset J) {
  if (I & J) return 0;
  int inv = 0;
  for (int j : subset_indices(J)) inv += std::popcount(I >> (j + 1));
  return (inv % 2) ? -1 : 1;
}

inline DiffForm wedge(const DiffForm& w, const DiffForm& h) {
  DiffForm out(w.field(), w.degree() + h.degree());
  for (const auto& [I, a] : w.terms())
    for (const auto& [J, b] : h.terms()) {
      int s = wedge_sign(I, J);
      if (s == 0) continue;
      RatFn c = a * b;
      out.add_term(I | J, s > 0 ? c : -c);
    }
  return out;
}

inline DiffForm exterior_d(const DiffForm& w) {
  const auto& K = w.field();
  DiffForm out(K, w.degree() + 1);
  for (const auto& [I, a] : w.terms())
    for (int j = 0; j < K->d(); ++j) {
      if ((I >> j) & 1u) continue;
      RatFn c = a.log_derivative(j);
      if (c.is_zero()) continue;
      Subset J = Subset{1} << j;
      out.add_term(I | J, wedge_sign(J, I) > 0 ? c : -c);
    }
  return out;
}

/// dx/x = sum_j (t_j d_j x / x) dt_j/t_j
inline DiffForm dlog_element(const RatFn& x) {
  if (x.is_zero()) throw ZeroEntry("dlog of 0");
  const auto& K = x.field();
  DiffForm out(K, 1);
  RatFn ix = x.inv();
  for (int j = 0; j < K->d(); ++j) {
    RatFn c = x.log_derivative(j);
    if (!c.is_zero()) out.add_term(Subset{1} << j, c * ix);
  }
  return out;
}

/// dx_1/x_1 ^ ... ^ dx_r/x_r (the empty product is the 0-form 1)
inline DiffForm dlog(const RatFieldPtr& K, const std::vector<RatFn>& entries) {
  for (const auto& x : entries)
    if (x.is_zero()) throw ZeroEntry("symbol entry is 0");
  DiffForm out = DiffForm::function(RatFn::from_int(K, 1));
  for (const auto& x : entries) out = wedge(out, dlog_element(x));
  return out;
}

}  // namespace charp
