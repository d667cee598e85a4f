#pragma once

#include <vector>

#include "charp/finab/group.hpp"
#include "charp/finab/qz.hpp"

namespace charp {

/// character of A, by its values on the generators
using Character = std::vector<QZ>;

inline QZ evaluate(const Character& chi, const Elem& x) {
  QZ s;
  for (std::size_t i = 0; i < chi.size(); ++i) s += x[i] * chi[i];
  return s;
}

inline void check_character(const FinAb& A, const Character& chi) {
  if (chi.size() != A.rank()) throw InvalidArgument("character has the wrong number of values");
  for (std::size_t i = 0; i < A.rank(); ++i)
    if (!(A.factor(i) * chi[i]).is_zero()) throw InvalidArgument("character is not killed by n_" + std::to_string(i));
}

/// A* has the invariant factors of A; coordinate c_i stands for the character g_j -> delta_ij c_i / n_i
inline FinAb dual_group(const FinAb& A) { return A; }

inline Character dual_character(const FinAb& A, const Elem& c) {
  Character chi;
  for (std::size_t i = 0; i < A.rank(); ++i) chi.emplace_back(c[i], A.factor(i));
  return chi;
}

inline Elem dual_coords(const FinAb& A, const Character& chi) {
  check_character(A, chi);
  Elem c(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) c[i] = chi[i].times(A.factor(i));
  return A.reduce(c);
}

/// f* : B* -> A*, chi -> chi o f
inline FinHom dual_hom(const FinHom& f) {
  const auto& A = f.domain();
  const auto& B = f.codomain();
  IntMat D(A.rank(), B.rank());
  for (std::size_t k = 0; k < B.rank(); ++k) {
    Character chi = dual_character(B, B.generator(k));
    Character pulled;
    for (std::size_t j = 0; j < A.rank(); ++j) pulled.push_back(evaluate(chi, f(A.generator(j))));
    Elem c = dual_coords(A, pulled);
    for (std::size_t j = 0; j < A.rank(); ++j) D(j, k) = c[j];
  }
  return FinHom(dual_group(B), dual_group(A), D);
}

/// A -> A**, a -> (chi -> chi(a)), in dual-of-dual coordinates
inline FinHom bidual_map(const FinAb& A) {
  const FinAb& Ad = dual_group(A);
  IntMat M(A.rank(), A.rank());
  for (std::size_t j = 0; j < A.rank(); ++j) {
    Character ev;
    for (std::size_t i = 0; i < Ad.rank(); ++i) ev.push_back(evaluate(dual_character(A, Ad.generator(i)), A.generator(j)));
    Elem c = dual_coords(Ad, ev);
    for (std::size_t i = 0; i < A.rank(); ++i) M(i, j) = c[i];
  }
  return FinHom(A, dual_group(Ad), M);
}

/// phi : A x B -> Q/Z given on generators
class FinPairing {
 public:
  FinPairing() = default;
  FinPairing(FinAb A, FinAb B, std::vector<std::vector<QZ>> values)
      : A_(std::move(A)), B_(std::move(B)), v_(std::move(values)) {
    if (v_.size() != A_.rank()) throw InvalidArgument("pairing has the wrong number of rows");
    for (std::size_t i = 0; i < A_.rank(); ++i) {
      if (v_[i].size() != B_.rank()) throw InvalidArgument("pairing has the wrong number of columns");
      for (std::size_t j = 0; j < B_.rank(); ++j)
        if (!(A_.factor(i) * v_[i][j]).is_zero() || !(B_.factor(j) * v_[i][j]).is_zero())
          throw InvalidArgument("pairing value " + v_[i][j].text() + " is not compatible with the orders");
    }
  }

  /// Z/n x Z/n, (a, b) -> c ab / n
  static FinPairing standard(long long n, long long c = 1) {
    FinAb Z(std::vector<long long>{n});
    return FinPairing(Z, Z, {{QZ(c, n)}});
  }
  static FinPairing zero(const FinAb& A, const FinAb& B) {
    return FinPairing(A, B, std::vector<std::vector<QZ>>(A.rank(), std::vector<QZ>(B.rank())));
  }
  /// A* x A -> Q/Z, evaluation
  static FinPairing evaluation(const FinAb& A) {
    std::vector<std::vector<QZ>> v(A.rank(), std::vector<QZ>(A.rank()));
    for (std::size_t i = 0; i < A.rank(); ++i) v[i][i] = QZ(1, A.factor(i));
    return FinPairing(dual_group(A), A, v);
  }

  const FinAb& left() const { return A_; }
  const FinAb& right() const { return B_; }
  const std::vector<std::vector<QZ>>& values() const { return v_; }

  QZ operator()(const Elem& a, const Elem& b) const {
    QZ s;
    for (std::size_t i = 0; i < A_.rank(); ++i)
      for (std::size_t j = 0; j < B_.rank(); ++j) s += (a[i] * b[j]) * v_[i][j];
    return s;
  }

  FinPairing scaled(long long c) const {
    auto v = v_;
    for (auto& row : v)
      for (auto& x : row) x = c * x;
    return FinPairing(A_, B_, v);
  }

  /// A -> B*
  FinHom left_adjoint() const {
    IntMat M(B_.rank(), A_.rank());
    for (std::size_t i = 0; i < A_.rank(); ++i)
      for (std::size_t j = 0; j < B_.rank(); ++j) M(j, i) = v_[i][j].times(B_.factor(j));
    return FinHom(A_, dual_group(B_), M);
  }
  /// B -> A*
  FinHom right_adjoint() const {
    IntMat M(A_.rank(), B_.rank());
    for (std::size_t i = 0; i < A_.rank(); ++i)
      for (std::size_t j = 0; j < B_.rank(); ++j) M(i, j) = v_[i][j].times(A_.factor(i));
    return FinHom(B_, dual_group(A_), M);
  }

 private:
  FinAb A_, B_;
  std::vector<std::vector<QZ>> v_;
};

struct PairingAnalysis {
  Subgroup left_kernel, right_kernel;
  bool nondeg_left = false, nondeg_right = false, perfect = false;
};

inline PairingAnalysis pairing_analysis(const FinPairing& phi) {
  PairingAnalysis r;
  r.left_kernel = phi.left_adjoint().kernel();
  r.right_kernel = phi.right_adjoint().kernel();
  r.nondeg_left = r.left_kernel.is_trivial();
  r.nondeg_right = r.right_kernel.is_trivial();
  r.perfect = r.nondeg_left && r.nondeg_right && phi.left().order() == phi.right().order();
  return r;
}

struct CharGeneration {
  bool kernels_meet_trivially = false;  // the intersection of the ker chi_i is 0
  bool span_is_dual = false;            // the Z-span of the chi_i is all of A*
};

inline CharGeneration char_generation_report(const FinAb& A, const std::vector<Character>& chis) {
  for (const auto& c : chis) check_character(A, c);
  CharGeneration g;
  const long long N = A.exponent();
  if (N == 1) {
    g.kernels_meet_trivially = true;
  } else {
    FinAb target(std::vector<long long>(chis.size(), N));
    IntMat M(chis.size(), A.rank());
    for (std::size_t i = 0; i < chis.size(); ++i)
      for (std::size_t j = 0; j < A.rank(); ++j) M(i, j) = chis[i][j].times(N);
    g.kernels_meet_trivially = FinHom(A, target, M).kernel().is_trivial();
  }
  std::vector<Elem> coords;
  for (const auto& c : chis) coords.push_back(dual_coords(A, c));
  g.span_is_dual = Subgroup(dual_group(A), coords).order() == A.order();
  return g;
}

/// the chi_i generate A* (finite case of the profinite-module condition)
inline bool char_generation_test(const FinAb& A, const std::vector<Character>& chis) {
  CharGeneration g = char_generation_report(A, chis);
  if (g.kernels_meet_trivially != g.span_is_dual) throw std::logic_error("character generation criteria disagree");
  return g.kernels_meet_trivially;
}

}  // namespace charp
