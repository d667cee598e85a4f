#pragma once

#include <vector>

#include "charp/derham/complex.hpp"
#include "charp/linalg.hpp"

namespace charp {

/// phi_K : k^L x k^R -> Omega^d = k dt/t, given by its matrix over k
struct LinearPairingSpec {
  RatFieldPtr K;
  Matrix<RatFn> phi;
  std::size_t left_dim() const { return phi.size(); }
  std::size_t right_dim() const { return phi.empty() ? 0 : phi[0].size(); }
};

struct KernelComparison {
  std::size_t kernel_dim_k = 0;         // over k, for phi_K
  std::size_t joint_kernel_dim_kp = 0;  // over k^p, for the family (z_m)_m
  bool contained = false;               // k^p-span of the phi_K kernel lies in the joint kernel
  bool equal = false;
};

struct LinearPairingReport {
  KernelComparison left, right;
  bool phi_nondegenerate = false;
  bool joint_nondegenerate = false;
};

namespace detail {

inline RatFn t_power(const RatFieldPtr& K, const std::vector<int>& a, const std::vector<int>& m) {
  RatFn out = RatFn::from_int(K, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int e = a[i] - m[i];
    if (e != 0) out = out * RatFn::var(K, static_cast<int>(i)).pow(e);
  }
  return out;
}

/// rows (a, i) for x = t^a e_i, columns (m, j) for z_m(x, e_j) = pi_0(t^{-m} phi(x, e_j)), as p-th roots
inline Matrix<RatFn> joint_matrix(const RatFieldPtr& K, const Matrix<RatFn>& phi, bool transpose_phi) {
  const auto p = K->p();
  const int d = K->d();
  const std::size_t n = pmon_count(p, d);
  const std::size_t L = transpose_phi ? (phi.empty() ? 0 : phi[0].size()) : phi.size();
  const std::size_t R = transpose_phi ? phi.size() : (phi.empty() ? 0 : phi[0].size());
  Matrix<RatFn> J(n * L, std::vector<RatFn>(n * R, RatFn(K)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < n; ++m) {
      RatFn s = t_power(K, pmon_tuple(p, d, a), pmon_tuple(p, d, m));
      for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < R; ++j) {
          const RatFn& v = transpose_phi ? phi[j][i] : phi[i][j];
          if (!v.is_zero()) J[a * L + i][m * R + j] = pi0_root(s * v);
        }
    }
  return J;
}

inline KernelComparison compare_kernels(const RatFieldPtr& K, const Matrix<RatFn>& phi, bool right) {
  const auto p = K->p();
  const int d = K->d();
  const std::size_t n = pmon_count(p, d);
  Matrix<RatFn> M = right ? transpose(phi, phi.empty() ? 0 : phi[0].size()) : phi;
  const std::size_t L = M.size(), R = M.empty() ? 0 : M[0].size();
  KernelComparison out;
  // left kernel over k: x with x^T M = 0
  RatFn zero(K), one = RatFn::from_int(K, 1);
  Matrix<RatFn> ker = L == 0 ? Matrix<RatFn>{} : nullspace(transpose(M, R), L, zero, one);
  if (R == 0) {
    ker.clear();
    for (std::size_t i = 0; i < L; ++i) {
      std::vector<RatFn> e(L, zero);
      e[i] = one;
      ker.push_back(e);
    }
  }
  out.kernel_dim_k = ker.size();
  Matrix<RatFn> J = joint_matrix(K, phi, right);
  const std::size_t cols = n * R;
  const std::size_t rk = (J.empty() || cols == 0) ? 0 : rank(J, cols);
  out.joint_kernel_dim_kp = n * L - rk;
  out.contained = true;
  for (const auto& v : ker)
    for (std::size_t a = 0; a < n && out.contained; ++a) {
      // k^p-coordinates (roots) of t^a v
      std::vector<RatFn> u(n * L, zero);
      RatFn ta = t_power(K, pmon_tuple(p, d, a), std::vector<int>(static_cast<std::size_t>(d), 0));
      for (std::size_t i = 0; i < L; ++i) {
        auto dec = p_monomial_decompose(ta * v[i]);
        for (std::size_t b = 0; b < n; ++b) u[b * L + i] = dec.a[b];
      }
      for (std::size_t c = 0; c < cols && out.contained; ++c) {
        RatFn s(K);
        for (std::size_t k = 0; k < n * L; ++k)
          if (!u[k].is_zero() && !J[k][c].is_zero()) s += u[k] * J[k][c];
        out.contained = s.is_zero();
      }
    }
  out.equal = out.contained && out.joint_kernel_dim_kp == n * out.kernel_dim_k;
  return out;
}

}  // namespace detail

/// compares the kernels of phi_K with those of the k^p-bilinear family z_m = pi_0(t^{-m} phi_K)
inline LinearPairingReport linear_pairing_check(const LinearPairingSpec& spec) {
  LinearPairingReport rep;
  rep.left = detail::compare_kernels(spec.K, spec.phi, false);
  rep.right = detail::compare_kernels(spec.K, spec.phi, true);
  rep.phi_nondegenerate = rep.left.kernel_dim_k == 0 && rep.right.kernel_dim_k == 0;
  rep.joint_nondegenerate = rep.left.joint_kernel_dim_kp == 0 && rep.right.joint_kernel_dim_kp == 0;
  return rep;
}

}  // namespace charp
