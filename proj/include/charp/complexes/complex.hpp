#pragma once

#include <map>
#include <string>
#include <vector>

#include "charp/finab/exact.hpp"

namespace charp {

/// bounded cochain complex of finite abelian groups, M^lo .. M^hi,
/// d^i : M^i -> M^{i+1}
class FinComplex {
 public:
  FinComplex() = default;
  FinComplex(int lo, std::vector<FinAb> groups, std::vector<FinHom> diffs)
      : lo_(lo), groups_(std::move(groups)), diffs_(std::move(diffs)) {
    if (diffs_.size() + 1 != groups_.size() && !(groups_.empty() && diffs_.empty()))
      throw InvalidArgument("a complex with n groups needs n - 1 differentials");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (diffs_[k].domain() != groups_[k] || diffs_[k].codomain() != groups_[k + 1])
        throw InvalidArgument("differential " + std::to_string(lo_ + static_cast<int>(k)) + " has the wrong groups");
    for (int i = lo_; i < hi(); ++i)
      if (!diff(i + 1).after(diff(i)).image().is_trivial())
        throw InvalidArgument("d o d != 0 in degree " + std::to_string(i));
  }

  /// A in degree n
  static FinComplex single(const FinAb& A, int n) { return FinComplex(n, {A}, {}); }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(groups_.size()) - 1; }
  bool empty() const { return groups_.empty(); }

  FinAb group(int i) const {
    if (i < lo_ || i > hi()) return FinAb();
    return groups_[static_cast<std::size_t>(i - lo_)];
  }
  FinHom diff(int i) const {
    if (i < lo_ || i >= hi()) return FinHom::zero(group(i), group(i + 1));
    return diffs_[static_cast<std::size_t>(i - lo_)];
  }

  Subgroup cocycles(int i) const { return diff(i).kernel(); }
  Subgroup coboundaries(int i) const { return diff(i - 1).image(); }
  Subquotient cohomology(int i) const { return subquotient(cocycles(i), coboundaries(i)); }

  bool is_acyclic() const {
    for (int i = lo_; i <= hi(); ++i)
      if (!cohomology(i).group.is_trivial()) return false;
    return true;
  }

  friend bool operator==(const FinComplex& a, const FinComplex& b) {
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    for (int i = lo; i <= hi; ++i)
      if (a.group(i) != b.group(i) || !(a.diff(i) == b.diff(i))) return false;
    return true;
  }

 private:
  int lo_ = 0;
  std::vector<FinAb> groups_;
  std::vector<FinHom> diffs_;
};

/// degreewise maps f^i : M^i -> N^i
struct ChainMap {
  FinComplex src, dst;
  std::map<int, FinHom> maps;

  FinHom at(int i) const {
    auto it = maps.find(i);
    if (it != maps.end()) return it->second;
    return FinHom::zero(src.group(i), dst.group(i));
  }

  bool commutes() const {
    const int lo = std::min(src.lo(), dst.lo()) - 1, hi = std::max(src.hi(), dst.hi()) + 1;
    for (int i = lo; i <= hi; ++i)
      if (!(dst.diff(i).after(at(i)) == at(i + 1).after(src.diff(i)))) return false;
    return true;
  }

  static ChainMap identity(const FinComplex& M) {
    ChainMap f{M, M, {}};
    for (int i = M.lo(); i <= M.hi(); ++i) f.maps.emplace(i, FinHom::identity(M.group(i)));
    return f;
  }
  static ChainMap zero(const FinComplex& M, const FinComplex& N) { return ChainMap{M, N, {}}; }

  ChainMap after(const ChainMap& g) const {
    ChainMap h{g.src, dst, {}};
    for (int i = std::min(g.src.lo(), dst.lo()); i <= std::max(g.src.hi(), dst.hi()); ++i)
      h.maps.emplace(i, at(i).after(g.at(i)));
    return h;
  }
};

/// H^i(f) : H^i(M) -> H^i(N)
inline FinHom on_cohomology(const ChainMap& f, int i) {
  Subquotient a = f.src.cohomology(i), b = f.dst.cohomology(i);
  IntMat m(b.group.rank(), a.group.rank());
  for (std::size_t k = 0; k < a.group.rank(); ++k) {
    Elem y = b.coords(f.at(i)(a.lifts[k]));
    for (std::size_t r = 0; r < y.size(); ++r) m(r, k) = y[r];
  }
  return FinHom(a.group, b.group, m);
}

inline bool is_quasi_isomorphism(const ChainMap& f) {
  const int lo = std::min(f.src.lo(), f.dst.lo()), hi = std::max(f.src.hi(), f.dst.hi());
  for (int i = lo; i <= hi; ++i) {
    FinHom h = on_cohomology(f, i);
    if (!h.is_injective() || !h.is_surjective()) return false;
  }
  return true;
}

/// M[s]^i = M^{i-s}, d_{M[s]} = (-1)^s d_M
inline FinComplex shift(const FinComplex& M, int s) {
  if (M.empty()) return M;
  std::vector<FinAb> g;
  std::vector<FinHom> d;
  for (int i = M.lo(); i <= M.hi(); ++i) g.push_back(M.group(i));
  for (int i = M.lo(); i < M.hi(); ++i) d.push_back(s % 2 ? FinHom::multiplication(M.group(i + 1), -1).after(M.diff(i)) : M.diff(i));
  return FinComplex(M.lo() + s, g, d);
}

inline ChainMap shift(const ChainMap& f, int s) {
  ChainMap g{shift(f.src, s), shift(f.dst, s), {}};
  for (const auto& [i, h] : f.maps) g.maps.emplace(i + s, h);
  return g;
}

/// C^i = M_1^{i+1} + M_2^i, d(a, b) = (-d a, d b - u(a)); sums[i] holds the
/// inclusions and projections in that order of summands
struct Cone {
  FinComplex complex;
  std::map<int, DirectSum> sums;

  const DirectSum& sum(int i) const { return sums.at(i); }
};

inline Cone cone(const ChainMap& u) {
  if (!u.commutes()) throw NotChainMap("u is not a chain map");
  const FinComplex& M1 = u.src;
  const FinComplex& M2 = u.dst;
  int lo = std::min(M1.lo() - 1, M2.lo()), hi = std::max(M1.hi() - 1, M2.hi());
  if (M1.empty()) lo = M2.lo(), hi = M2.hi();
  if (M2.empty()) lo = M1.lo() - 1, hi = M1.hi() - 1;
  Cone c;
  std::vector<FinAb> g;
  for (int i = lo; i <= hi; ++i) {
    c.sums.emplace(i, direct_sum(M1.group(i + 1), M2.group(i)));
    g.push_back(c.sums.at(i).sum);
  }
  std::vector<FinHom> d;
  for (int i = lo; i < hi; ++i) {
    const DirectSum& s = c.sums.at(i);
    const DirectSum& t = c.sums.at(i + 1);
    const FinAb& C = s.sum;
    IntMat M(t.sum.rank(), C.rank());
    for (std::size_t k = 0; k < C.rank(); ++k) {
      Elem a = s.pr1(C.generator(k)), b = s.pr2(C.generator(k));
      Elem na = M1.group(i + 2).scale(-1, M1.diff(i + 1)(a));
      Elem nb = M2.group(i + 1).add(M2.diff(i)(b), M2.group(i + 1).scale(-1, u.at(i + 1)(a)));
      Elem y = t.sum.add(t.in1(na), t.in2(nb));
      for (std::size_t r = 0; r < y.size(); ++r) M(r, k) = y[r];
    }
    d.push_back(FinHom(C, t.sum, M));
  }
  c.complex = FinComplex(lo, g, d);
  return c;
}

}  // namespace charp
