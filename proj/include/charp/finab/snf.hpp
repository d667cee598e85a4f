#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "charp/error.hpp"

namespace charp {

/// dense integer matrix, row-major
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  /// from nested rows; all rows must have `cols` entries
  static IntMat from_rows(const std::vector<std::vector<long long>>& v, std::size_t cols) {
    IntMat m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].size() != cols) throw InvalidArgument("ragged integer matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i][j];
    }
    return m;
  }
  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  long long& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw InvalidArgument("integer matrix shape mismatch");
    IntMat m(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const long long v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols; ++j) m(i, j) += v * y(k, j);
      }
    return m;
  }

  IntMat transpose() const {
    IntMat m(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  std::vector<long long> column(std::size_t j) const {
    std::vector<long long> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<long long> row(std::size_t i) const { return {a.begin() + i * cols, a.begin() + (i + 1) * cols}; }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
  }
};

inline long long floor_mod(long long x, long long n) {
  if (n == 0) return x;
  long long r = x % n;
  return r < 0 ? r + n : r;
}

/// g = gcd(x, y) >= 0 with s x + t y = g
inline long long ext_gcd(long long x, long long y, long long& s, long long& t) {
  long long s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (y != 0) {
    long long q = x / y;
    std::tie(x, y) = std::make_pair(y, x - q * y);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (x < 0) {
    x = -x;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return x;
}

/// U M V = D with U, V unimodular, D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// Uinv is U^{-1}.
struct Snf {
  IntMat D, U, Uinv, V;
  std::vector<long long> diagonal() const {
    std::vector<long long> d;
    for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D(i, i));
    return d;
  }
  std::size_t rank() const {
    std::size_t r = 0;
    for (long long x : diagonal()) r += x != 0;
    return r;
  }
};

inline Snf snf(const IntMat& M) {
  const std::size_t m = M.rows, n = M.cols;
  Snf s{M, IntMat::identity(m), IntMat::identity(m), IntMat::identity(n)};
  IntMat& D = s.D;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(s.U(i, c), s.U(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(s.Uinv(r, i), s.Uinv(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(s.V(r, i), s.V(r, j));
  };
  // row_i += q row_j
  auto add_row = [&](std::size_t i, std::size_t j, long long q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) D(i, c) += q * D(j, c);
    for (std::size_t c = 0; c < m; ++c) s.U(i, c) += q * s.U(j, c);
    for (std::size_t r = 0; r < m; ++r) s.Uinv(r, j) -= q * s.Uinv(r, i);
  };
  // col_i += q col_j
  auto add_col = [&](std::size_t i, std::size_t j, long long q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) D(r, i) += q * D(r, j);
    for (std::size_t r = 0; r < n; ++r) s.V(r, i) += q * s.V(r, j);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the remaining block
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (bi == m || std::llabs(D(i, j)) < std::llabs(D(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        add_row(i, t, -(D(i, t) / D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        add_col(j, t, -(D(t, j) / D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t ri = t, cj = t;
        long long best = std::llabs(D(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && std::llabs(D(i, t)) < best) {
            best = std::llabs(D(i, t));
            ri = i;
            cj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && std::llabs(D(t, j)) < best) {
            best = std::llabs(D(t, j));
            ri = t;
            cj = j;
          }
        swap_rows(t, ri);
        swap_cols(t, cj);
        continue;
      }
      // divisibility: pull in a row whose entries the pivot does not divide
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, bad, 1);
    }
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < m; ++c) s.U(t, c) = -s.U(t, c);
      for (std::size_t r = 0; r < m; ++r) s.Uinv(r, t) = -s.Uinv(r, t);
    }
  }
  return s;
}

/// Smith form over Z/e: U M V = D mod e with U, V invertible mod e, Uinv = U^{-1}
/// mod e, and D diagonal with entries dividing e (0 stands for e) in divisibility order.
inline Snf snf_mod(const IntMat& M, long long e) {
  if (e <= 0) throw InvalidArgument("snf_mod needs a positive modulus");
  const std::size_t m = M.rows, n = M.cols;
  Snf s{M, IntMat::identity(m), IntMat::identity(m), IntMat::identity(n)};
  IntMat& D = s.D;
  for (auto& x : D.a) x = floor_mod(x, e);
  auto mulmod = [e](long long a, long long b) { return static_cast<long long>((__int128)a * b % e); };
  // rows (i, j) <- [[a, b], [c, d]] (rows i, j), det = 1
  auto rows2 = [&](std::size_t i, std::size_t j, long long a, long long b, long long c, long long d) {
    for (std::size_t k = 0; k < n; ++k) {
      long long x = D(i, k), y = D(j, k);
      D(i, k) = floor_mod(mulmod(a, x) + mulmod(b, y), e);
      D(j, k) = floor_mod(mulmod(c, x) + mulmod(d, y), e);
    }
    for (std::size_t k = 0; k < m; ++k) {
      long long x = s.U(i, k), y = s.U(j, k);
      s.U(i, k) = floor_mod(mulmod(a, x) + mulmod(b, y), e);
      s.U(j, k) = floor_mod(mulmod(c, x) + mulmod(d, y), e);
      // Uinv <- Uinv [[d, -b], [-c, a]] on columns i, j
      long long p = s.Uinv(k, i), q = s.Uinv(k, j);
      s.Uinv(k, i) = floor_mod(mulmod(p, d) - mulmod(q, c), e);
      s.Uinv(k, j) = floor_mod(mulmod(q, a) - mulmod(p, b), e);
    }
  };
  auto cols2 = [&](std::size_t i, std::size_t j, long long a, long long b, long long c, long long d) {
    for (std::size_t k = 0; k < m; ++k) {
      long long x = D(k, i), y = D(k, j);
      D(k, i) = floor_mod(mulmod(a, x) + mulmod(b, y), e);
      D(k, j) = floor_mod(mulmod(c, x) + mulmod(d, y), e);
    }
    for (std::size_t k = 0; k < n; ++k) {
      long long x = s.V(k, i), y = s.V(k, j);
      s.V(k, i) = floor_mod(mulmod(a, x) + mulmod(b, y), e);
      s.V(k, j) = floor_mod(mulmod(c, x) + mulmod(d, y), e);
    }
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(s.U(i, c), s.U(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(s.Uinv(r, i), s.Uinv(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(s.V(r, i), s.V(r, j));
  };
  auto gcd_e = [e](long long x) { return std::gcd(x, e); };
  // unit u with u x = gcd(x, e) mod e
  auto normalizer = [e](long long x) {
    long long g = std::gcd(x, e), xs = x / g, es = e / g, a, b;
    ext_gcd(floor_mod(xs, es), es, a, b);
    long long u = floor_mod(a, es);
    while (std::gcd(u, e) != 1) u += es;
    return u;
  };
  auto inverse = [e](long long u) {
    long long a, b;
    ext_gcd(floor_mod(u, e), e, a, b);
    return floor_mod(a, e);
  };
  // combine pivot (t,t) with entry x at (i,t): rows; or (t,j): cols
  auto eliminate_row = [&](std::size_t t, std::size_t i) {
    long long g = D(t, t), x = D(i, t);
    if (x == 0) return;
    if (x % g == 0) {
      rows2(t, i, 1, 0, floor_mod(-(x / g), e), 1);
      return;
    }
    long long a, b, h = ext_gcd(g, x, a, b);
    rows2(t, i, floor_mod(a, e), floor_mod(b, e), floor_mod(-(x / h), e), floor_mod(g / h, e));
  };
  auto eliminate_col = [&](std::size_t t, std::size_t j) {
    long long g = D(t, t), x = D(t, j);
    if (x == 0) return;
    if (x % g == 0) {
      cols2(t, j, 1, 0, floor_mod(-(x / g), e), 1);
      return;
    }
    long long a, b, h = ext_gcd(g, x, a, b);
    cols2(t, j, floor_mod(a, e), floor_mod(b, e), floor_mod(-(x / h), e), floor_mod(g / h, e));
  };
  auto normalize_pivot = [&](std::size_t t) {
    long long u = normalizer(D(t, t));
    if (u != 1) {
      long long ui = inverse(u);
      for (std::size_t c = 0; c < n; ++c) D(t, c) = mulmod(D(t, c), u);
      for (std::size_t c = 0; c < m; ++c) s.U(t, c) = mulmod(s.U(t, c), u);
      for (std::size_t r = 0; r < m; ++r) s.Uinv(r, t) = mulmod(s.Uinv(r, t), ui);
    }
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (bi == m || gcd_e(D(i, j)) < gcd_e(D(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      normalize_pivot(t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        eliminate_row(t, i);
        if (D(t, t) != gcd_e(D(t, t))) normalize_pivot(t);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        eliminate_col(t, j);
        if (D(t, t) != gcd_e(D(t, t))) normalize_pivot(t);
      }
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = D(i, t) == 0;
      for (std::size_t j = t + 1; j < n && clean; ++j) clean = D(t, j) == 0;
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      rows2(t, bad, 1, 1, 0, 1);
    }
  }
  return s;
}

/// basis (as columns) of {x in Z^n : M x = 0}
inline IntMat integer_kernel(const IntMat& M) {
  Snf s = snf(M);
  const std::size_t r = s.rank();
  IntMat K(M.cols, M.cols - r);
  for (std::size_t j = r; j < M.cols; ++j)
    for (std::size_t i = 0; i < M.cols; ++i) K(i, j - r) = s.V(i, j);
  return K;
}

/// Full-rank lattice L in Z^k with e Z^k inside L, stored as its Hermite basis:
/// rows b_0..b_{k-1}, b_c has zeros before c, positive pivot b_c[c] dividing e,
/// and 0 <= b_r[c] < b_c[c] for r < c. The form is unique, so == is lattice equality.
class Lattice {
 public:
  Lattice() = default;

  /// span(gens) + e Z^k
  Lattice(std::size_t k, long long e, const std::vector<std::vector<long long>>& gens) : k_(k), e_(e) {
    if (e <= 0) throw InvalidArgument("lattice modulus must be positive");
    std::vector<std::vector<long long>> rows;
    for (const auto& g : gens) {
      if (g.size() != k) throw InvalidArgument("lattice generator of wrong length");
      std::vector<long long> r(k);
      for (std::size_t i = 0; i < k; ++i) r[i] = floor_mod(g[i], e);
      rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<long long> r(k, 0);
      r[i] = e;
      rows.push_back(std::move(r));
    }
    basis_.assign(k, std::vector<long long>(k, 0));
    std::vector<bool> used(rows.size(), false);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i] || rows[i][c] == 0) continue;
        if (piv == rows.size()) {
          piv = i;
          continue;
        }
        long long s, t;
        long long x = rows[piv][c], y = rows[i][c];
        long long g = ext_gcd(x, y, s, t);
        std::vector<long long> a(k), b(k);
        for (std::size_t j = c; j < k; ++j) {
          a[j] = s * rows[piv][j] + t * rows[i][j];
          b[j] = (x / g) * rows[i][j] - (y / g) * rows[piv][j];
        }
        for (std::size_t j = c + 1; j < k; ++j) {
          a[j] = floor_mod(a[j], e);
          b[j] = floor_mod(b[j], e);
        }
        rows[piv] = std::move(a);
        rows[i] = std::move(b);
      }
      used[piv] = true;
      if (rows[piv][c] < 0)
        for (std::size_t j = c; j < k; ++j) rows[piv][j] = -rows[piv][j];
      basis_[c] = rows[piv];
    }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < c; ++r) {
        long long q = basis_[r][c] / basis_[c][c];
        if (floor_mod(basis_[r][c], basis_[c][c]) != basis_[r][c] - q * basis_[c][c]) --q;
        for (std::size_t j = c; j < k; ++j) basis_[r][j] -= q * basis_[c][j];
      }
  }

  std::size_t dim() const { return k_; }
  long long modulus() const { return e_; }
  const std::vector<std::vector<long long>>& basis() const { return basis_; }

  /// [Z^k : L]
  long long index() const {
    long long n = 1;
    for (std::size_t c = 0; c < k_; ++c) n *= basis_[c][c];
    return n;
  }

  /// coefficients c with x = sum c_i b_i, if x lies in L
  std::optional<std::vector<long long>> solve(std::vector<long long> x) const {
    std::vector<long long> c(k_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
      if (x[j] % basis_[j][j] != 0) return std::nullopt;
      c[j] = x[j] / basis_[j][j];
      for (std::size_t i = j; i < k_; ++i) x[i] -= c[j] * basis_[j][i];
    }
    return c;
  }

  bool contains(const std::vector<long long>& x) const { return solve(x).has_value(); }
  bool contains(const Lattice& o) const {
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.k_ == b.k_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  std::size_t k_ = 0;
  long long e_ = 1;
  std::vector<std::vector<long long>> basis_;
};

}  // namespace charp
