#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "charp/error.hpp"

namespace charp {

/// finite group on 0..n-1 given by its multiplication table
class FinGroup {
 public:
  FinGroup() : mul_{{0}}, inv_{0} {}
  FinGroup(std::vector<std::vector<int>> table, int identity) : mul_(std::move(table)), e_(identity) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw InvalidArgument("empty group table");
    for (const auto& row : mul_) {
      if (static_cast<int>(row.size()) != n) throw InvalidArgument("group table is not square");
      for (int x : row)
        if (x < 0 || x >= n) throw InvalidArgument("group table entry out of range");
    }
    if (e_ < 0 || e_ >= n) throw InvalidArgument("identity index out of range");
    for (int a = 0; a < n; ++a)
      if (mul_[e_][a] != a || mul_[a][e_] != a) throw InvalidArgument("identity is not neutral");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw InvalidArgument("multiplication is not associative");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul_[a][b] == e_ && mul_[b][a] == e_) inv_[a] = b;
    for (int a = 0; a < n; ++a)
      if (inv_[a] < 0) throw InvalidArgument("element " + std::to_string(a) + " has no inverse");
  }

  static FinGroup cyclic(int n) {
    if (n < 1) throw InvalidArgument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FinGroup(t, 0);
  }

  /// permutations of {0..k-1} in lexicographic order, (st)(x) = s(t(x))
  static FinGroup symmetric(int k) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> c(k);
        for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
        t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    return FinGroup(t, 0);
  }

  /// G x H with (g, h) at index g * |H| + h
  static FinGroup product(const FinGroup& G, const FinGroup& H) {
    const int n = G.order(), m = H.order();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n * m; ++a)
      for (int b = 0; b < n * m; ++b) t[a][b] = G.mul(a / m, b / m) * m + H.mul(a % m, b % m);
    return FinGroup(t, G.identity() * m + H.identity());
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return e_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != e_; x = mul(x, a)) ++k;
    return k;
  }

  /// smallest subgroup containing gens, sorted
  std::vector<int> generated(const std::vector<int>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<int> list{e_};
    in[e_] = true;
    for (std::size_t k = 0; k < list.size(); ++k)
      for (int g : gens) {
        int x = mul(list[k], g);
        if (!in[x]) {
          in[x] = true;
          list.push_back(x);
        }
      }
    std::sort(list.begin(), list.end());
    return list;
  }

  /// every subgroup, as sorted element lists, smallest first
  std::vector<std::vector<int>> subgroups() const {
    std::vector<std::vector<int>> all{{e_}};
    for (int g = 0; g < order(); ++g) {
      auto c = generated({g});
      if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
    }
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        std::vector<int> u = all[a];
        u.insert(u.end(), all[b].begin(), all[b].end());
        auto c = generated(u);
        if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
      }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return all;
  }

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.mul_ == b.mul_ && a.e_ == b.e_; }
  friend bool operator!=(const FinGroup& a, const FinGroup& b) { return !(a == b); }

 private:
  std::vector<std::vector<int>> mul_;
  int e_ = 0;
  std::vector<int> inv_;
};

/// H <= G: H as a group on 0..|H|-1 with incl[h] its element of G
struct SubgroupOf {
  FinGroup G, H;
  std::vector<int> incl;
  std::vector<int> pos;  // element of G -> index in H, or -1

  int index() const { return G.order() / H.order(); }
  bool contains(int g) const { return pos[g] >= 0; }

  /// smallest element of gH
  int rep_of_left(int g) const {
    int best = G.order();
    for (int h : incl) best = std::min(best, G.mul(g, h));
    return best;
  }
  /// smallest element of Hg
  int rep_of_right(int g) const {
    int best = G.order();
    for (int h : incl) best = std::min(best, G.mul(h, g));
    return best;
  }
  /// left cosets gH by their smallest elements, increasing
  std::vector<int> left_reps() const {
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g)
      if (rep_of_left(g) == g) reps.push_back(g);
    return reps;
  }
  /// index of gH in left_reps()
  int left_coset(int g) const {
    auto reps = left_reps();
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep_of_left(g)) - reps.begin());
  }
  int trivial_coset() const { return left_coset(G.identity()); }
};

inline SubgroupOf subgroup_of(const FinGroup& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int n = G.order();
  for (int x : elems)
    if (x < 0 || x >= n) throw NotSubgroup("element index out of range");
  SubgroupOf s{G, FinGroup(), elems, std::vector<int>(n, -1)};
  for (std::size_t k = 0; k < elems.size(); ++k) s.pos[elems[k]] = static_cast<int>(k);
  if (elems.empty() || s.pos[G.identity()] < 0) throw NotSubgroup("subset misses the identity");
  if (n % static_cast<int>(elems.size()) != 0) throw NotSubgroup("subset order does not divide the group order");
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int c = s.pos[G.mul(elems[a], elems[b])];
      if (c < 0) throw NotSubgroup("subset is not closed under multiplication");
      t[a][b] = c;
    }
  s.H = FinGroup(t, s.pos[G.identity()]);
  return s;
}

}  // namespace charp
