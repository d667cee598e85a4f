#pragma once

#include <cstddef>
#include <vector>

#include "charp/fields/galois_field.hpp"

namespace charp {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// reduced row echelon form; pivots[i] is the pivot column of rows[i]
template <class S>
struct Rref {
  Matrix<S> rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

/// Gauss-Jordan over any field type exposing is_zero(), inv(), *, -
template <class S>
Rref<S> rref(Matrix<S> m, std::size_t ncols) {
  Rref<S> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    S iv = m[r][c].inv();
    for (std::size_t k = c; k < ncols; ++k)
      if (!m[r][k].is_zero()) m[r][k] = m[r][k] * iv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      S f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!m[r][k].is_zero()) m[i][k] = m[i][k] - f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m, std::size_t ncols) {
  return rref(m, ncols).rank();
}

/// basis of {x : m x = 0}
template <class S>
Matrix<S> nullspace(const Matrix<S>& m, std::size_t ncols, const S& zero, const S& one) {
  auto R = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : R.pivots) is_pivot[c] = true;
  Matrix<S> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> x(ncols, zero);
    x[f] = one;
    for (std::size_t i = 0; i < R.rows.size(); ++i) x[R.pivots[i]] = zero - R.rows[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& m, std::size_t ncols) {
  Matrix<S> t(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    t[j].reserve(m.size());
    for (const auto& row : m) t[j].push_back(row[j]);
  }
  return t;
}

// ---- constant matrices over F_q stored as codes ----

using CodeMatrix = Matrix<GaloisField::Code>;

struct CodeRref {
  CodeMatrix rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

inline CodeRref rref_codes(const GaloisField& F, CodeMatrix m, std::size_t ncols) {
  CodeRref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    auto iv = F.inv(m[r][c]);
    for (std::size_t k = c; k < ncols; ++k) m[r][k] = F.mul(m[r][k], iv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      auto f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (m[r][k] != 0) m[i][k] = F.sub(m[i][k], F.mul(f, m[r][k]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline CodeMatrix nullspace_codes(const GaloisField& F, const CodeMatrix& m, std::size_t ncols) {
  auto R = rref_codes(F, m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : R.pivots) is_pivot[c] = true;
  CodeMatrix out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaloisField::Code> x(ncols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < R.rows.size(); ++i) x[R.pivots[i]] = F.neg(R.rows[i][f]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace charp
