#pragma once
// Independent reference computations used by the tests. Deliberately naive.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

/// F_p[z]/(m) multiplication by schoolbook polynomial arithmetic on digit vectors
inline std::vector<std::uint32_t> gf_mul(std::uint32_t p, const std::vector<std::uint32_t>& m,
                                         const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
  const std::size_t e = m.size() - 1;
  std::vector<std::uint64_t> prod(2 * e + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t i = prod.size(); i-- > e;) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= e; ++j) prod[i - e + j] = (prod[i - e + j] + p * p - (c * m[j]) % p) % p;
  }
  return std::vector<std::uint32_t>(prod.begin(), prod.begin() + static_cast<long>(e));
}

/// rank over F_p of an integer matrix (entries reduced mod p)
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  auto md = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1, b = md(x), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (md(a[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::int64_t iv = inv(a[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || !md(a[r][c])) continue;
      std::int64_t f = md(a[r][c]) * iv % p;
      for (int k = 0; k < cols; ++k) a[r][k] = md(a[r][k] - f * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

namespace oracle {

/// (dim Omega^r, z_r, b_r) over k^p for k = F_p(t_1..t_d), computed in the
/// basis t^a dt_I (a in Z^d, I sorted) by plain dictionary bookkeeping
struct DeRhamDims {
  std::int64_t dim_omega, z, b;
};

inline std::int64_t d_matrix_rank(std::int64_t p, int d, int r) {
  if (r < 0 || r >= d) return 0;
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // exponent, index list
  std::vector<std::vector<int>> exps(1, std::vector<int>());
  for (int i = 0; i < d; ++i) {
    std::vector<std::vector<int>> next;
    for (auto e : exps)
      for (int v = 0; v < p; ++v) {
        e.push_back(v);
        next.push_back(e);
        e.pop_back();
      }
    exps = next;
  }
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (static_cast<int>(s.size()) == r) subsets.push_back(s);
  }
  std::vector<std::vector<std::pair<Key, std::int64_t>>> cols;
  std::vector<Key> keys;
  for (const auto& m : exps)
    for (const auto& I : subsets) {
      // t^m dt_I/t_I = t^{m - 1_I} dt_I
      std::vector<int> a = m;
      for (int i : I) a[static_cast<std::size_t>(i)] -= 1;
      std::vector<std::pair<Key, std::int64_t>> col;
      for (int j = 0; j < d; ++j) {
        bool in = false;
        for (int i : I) in = in || i == j;
        if (in || a[static_cast<std::size_t>(j)] % p == 0) continue;
        std::vector<int> b = a;
        b[static_cast<std::size_t>(j)] -= 1;
        std::vector<int> J = I;
        J.push_back(j);
        // bubble j into place, counting transpositions
        int sign = 1;
        for (std::size_t k = J.size() - 1; k > 0 && J[k] < J[k - 1]; --k) {
          std::swap(J[k], J[k - 1]);
          sign = -sign;
        }
        Key key{b, J};
        bool seen = false;
        for (const auto& k : keys) seen = seen || k == key;
        if (!seen) keys.push_back(key);
        col.push_back({key, sign * a[static_cast<std::size_t>(j)]});
      }
      cols.push_back(col);
    }
  std::vector<std::vector<std::int64_t>> mat(keys.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [key, v] : cols[c])
      for (std::size_t k = 0; k < keys.size(); ++k)
        if (keys[k] == key) mat[k][c] += v;
  return rank_mod_p(mat, p);
}

inline DeRhamDims derham_dims(std::int64_t p, int d, int r) {
  std::int64_t binom = 1;
  for (int i = 1; i <= r; ++i) binom = binom * (d - r + i) / i;
  if (r > d) binom = 0;
  std::int64_t pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  std::int64_t dim = pd * binom;
  std::int64_t z = dim - d_matrix_rank(p, d, r);
  std::int64_t b = d_matrix_rank(p, d, r - 1);
  return {dim, z, b};
}

}  // namespace oracle
