#pragma once

#include <map>
#include <optional>
#include <utility>

#include "charp/complexes/complex.hpp"

namespace charp {

/// bilinear A x B -> C, by the images of generator pairs
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(FinAb A, FinAb B, FinAb C) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    v_.assign(A_.rank(), std::vector<Elem>(B_.rank(), C_.zero()));
  }

  const FinAb& left() const { return A_; }
  const FinAb& right() const { return B_; }
  const FinAb& target() const { return C_; }

  void set(std::size_t a, std::size_t b, const Elem& c) {
    Elem r = C_.reduce(c);
    if (!C_.is_zero(C_.scale(A_.factor(a), r)) || !C_.is_zero(C_.scale(B_.factor(b), r)))
      throw InvalidArgument("bilinear value is not killed by the orders of its arguments");
    v_[a][b] = r;
  }
  const Elem& at(std::size_t a, std::size_t b) const { return v_[a][b]; }

  Elem operator()(const Elem& x, const Elem& y) const {
    Elem s = C_.zero();
    for (std::size_t a = 0; a < A_.rank(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < B_.rank(); ++b)
        if (y[b] != 0) s = C_.add(s, C_.scale(x[a] * y[b], v_[a][b]));
    }
    return s;
  }

  bool is_zero() const {
    for (const auto& row : v_)
      for (const auto& c : row)
        if (!C_.is_zero(c)) return false;
    return true;
  }

  /// compose with a character of C
  FinPairing with_character(const Character& chi) const {
    check_character(C_, chi);
    std::vector<std::vector<QZ>> val(A_.rank(), std::vector<QZ>(B_.rank()));
    for (std::size_t a = 0; a < A_.rank(); ++a)
      for (std::size_t b = 0; b < B_.rank(); ++b) val[a][b] = evaluate(chi, v_[a][b]);
    return FinPairing(A_, B_, val);
  }

 private:
  FinAb A_, B_, C_;
  std::vector<std::vector<Elem>> v_;
};

/// phi^{i,j} : M^i x N^j -> eta^{i+j}
struct ChainPairing {
  FinComplex M, N, eta;
  std::map<std::pair<int, int>, Bilinear> phi;

  Bilinear at(int i, int j) const {
    auto it = phi.find({i, j});
    if (it != phi.end()) return it->second;
    return Bilinear(M.group(i), N.group(j), eta.group(i + j));
  }

  Elem operator()(int i, int j, const Elem& x, const Elem& y) const { return at(i, j)(x, y); }

  /// d phi(x, y) = phi(dx, y) + (-1)^i phi(x, dy) on all generator pairs;
  /// returns the first failing (i, j)
  std::optional<std::pair<int, int>> chain_failure() const {
    for (int i = M.lo(); i <= M.hi(); ++i)
      for (int j = N.lo(); j <= N.hi(); ++j) {
        const FinAb& E = eta.group(i + j + 1);
        for (std::size_t a = 0; a < M.group(i).rank(); ++a)
          for (std::size_t b = 0; b < N.group(j).rank(); ++b) {
            Elem x = M.group(i).generator(a), y = N.group(j).generator(b);
            Elem lhs = eta.diff(i + j)((*this)(i, j, x, y));
            Elem r1 = (*this)(i + 1, j, M.diff(i)(x), y);
            Elem r2 = (*this)(i, j + 1, x, N.diff(j)(y));
            Elem rhs = E.add(r1, E.scale(i % 2 ? -1 : 1, r2));
            if (lhs != rhs) return std::make_pair(i, j);
          }
      }
    return std::nullopt;
  }
  bool is_chain_pairing() const { return !chain_failure().has_value(); }
};

/// phi_{M[s]}^{i,j} = (-1)^{is} phi_M^{i-s, j+s} on M[s] x N[-s]
inline ChainPairing shift_pairing(const ChainPairing& P, int s) {
  ChainPairing Q{shift(P.M, s), shift(P.N, -s), P.eta, {}};
  for (const auto& [ij, bl] : P.phi) {
    const int i = ij.first + s, j = ij.second - s;
    Bilinear b(bl.left(), bl.right(), bl.target());
    const bool neg = ((i * s) % 2) != 0;
    for (std::size_t a = 0; a < bl.left().rank(); ++a)
      for (std::size_t c = 0; c < bl.right().rank(); ++c)
        b.set(a, c, neg ? bl.target().scale(-1, bl.at(a, c)) : bl.at(a, c));
    Q.phi.emplace(std::make_pair(i, j), b);
  }
  return Q;
}

inline bool same_values(const ChainPairing& P, const ChainPairing& Q, int sign = 1) {
  if (!(P.M == Q.M) || !(P.N == Q.N) || !(P.eta == Q.eta)) return false;
  for (int i = P.M.lo(); i <= P.M.hi(); ++i)
    for (int j = P.N.lo(); j <= P.N.hi(); ++j) {
      Bilinear a = P.at(i, j), b = Q.at(i, j);
      for (std::size_t x = 0; x < a.left().rank(); ++x)
        for (std::size_t y = 0; y < a.right().rank(); ++y)
          if (a.at(x, y) != a.target().scale(sign, b.at(x, y))) return false;
    }
  return true;
}

/// u : M_1 -> M_2 and u_dual : N_2 -> N_1 with phi_1(x, u_dual y) = phi_2(u x, y)
struct PairingMorphism {
  ChainPairing P1, P2;
  ChainMap u, u_dual;

  std::optional<std::pair<int, int>> failure() const {
    if (!u.commutes() || !u_dual.commutes()) return std::make_pair(0, 0);
    for (int i = P1.M.lo(); i <= P1.M.hi(); ++i)
      for (int j = P2.N.lo(); j <= P2.N.hi(); ++j)
        for (std::size_t a = 0; a < P1.M.group(i).rank(); ++a)
          for (std::size_t b = 0; b < P2.N.group(j).rank(); ++b) {
            Elem x = P1.M.group(i).generator(a), y = P2.N.group(j).generator(b);
            if (P1(i, j, x, u_dual.at(j)(y)) != P2(i, j, u.at(i)(x), y)) return std::make_pair(i, j);
          }
    return std::nullopt;
  }
};

/// cone pairing C x C' -> eta with C the cone of u and C' the cocone of u_dual
/// (the cone of u_dual shifted so that C'^j = N_2^j + N_1^{j-1})
struct ConePairing {
  Cone C;
  Cone Cd;                  // cone of u_dual, before the shift
  ChainPairing pairing;     // on C.complex x shift(Cd.complex, 1)

  /// components of c in C^i: (M_1^{i+1}, M_2^i)
  std::pair<Elem, Elem> split(int i, const Elem& c) const { return {C.sum(i).pr1(c), C.sum(i).pr2(c)}; }
  /// components of y in C'^j: (N_2^j, N_1^{j-1})
  std::pair<Elem, Elem> split_dual(int j, const Elem& y) const {
    return {Cd.sum(j - 1).pr1(y), Cd.sum(j - 1).pr2(y)};
  }
};

inline ConePairing cone_pairing(const PairingMorphism& m) {
  if (m.failure()) throw NotPairingMorphism("u and u_dual are not adjoint chain maps");
  ConePairing cp{cone(m.u), cone(m.u_dual), {}};
  const FinComplex& C = cp.C.complex;
  FinComplex Cv = shift(cp.Cd.complex, 1);
  cp.pairing = ChainPairing{C, Cv, m.P1.eta, {}};
  for (int i = C.lo(); i <= C.hi(); ++i)
    for (int j = Cv.lo(); j <= Cv.hi(); ++j) {
      const FinAb& E = m.P1.eta.group(i + j);
      Bilinear b(C.group(i), Cv.group(j), E);
      for (std::size_t x = 0; x < C.group(i).rank(); ++x)
        for (std::size_t y = 0; y < Cv.group(j).rank(); ++y) {
          auto [a, bb] = cp.split(i, C.group(i).generator(x));
          auto [b2, a1] = cp.split_dual(j, Cv.group(j).generator(y));
          Elem v1 = m.P1(i + 1, j - 1, a, a1);
          Elem v2 = m.P2(i, j, bb, b2);
          b.set(x, y, E.add(E.scale(i % 2 ? -1 : 1, v1), v2));
        }
      if (!b.is_zero()) cp.pairing.phi.emplace(std::make_pair(i, j), b);
    }
  return cp;
}

struct ConeSquares {
  bool j2_pi2 = false;  // phi_C(j_2 b, y) = phi_2(b, pi_2 y)
  bool pi1_j1 = false;  // phi_C(c, j_1 a) = phi_1[-1](pi_1 c, a), the shifted pairing
  bool ok() const { return j2_pi2 && pi1_j1; }
};

inline ConeSquares cone_squares(const PairingMorphism& m, const ConePairing& cp) {
  ConeSquares sq{true, true};
  const FinComplex& C = cp.pairing.M;
  const FinComplex& Cv = cp.pairing.N;
  ChainPairing shifted = shift_pairing(m.P1, -1);  // M_1^{i+1} x N_1^{j-1}
  for (int i = C.lo(); i <= C.hi(); ++i)
    for (int j = Cv.lo(); j <= Cv.hi(); ++j) {
      // j_2 / pi_2
      const FinAb& M2 = m.P2.M.group(i);
      for (std::size_t x = 0; x < M2.rank(); ++x)
        for (std::size_t y = 0; y < Cv.group(j).rank(); ++y) {
          Elem c = cp.C.sum(i).in2(M2.generator(x));
          Elem yy = Cv.group(j).generator(y);
          if (cp.pairing(i, j, c, yy) != m.P2(i, j, M2.generator(x), cp.split_dual(j, yy).first)) sq.j2_pi2 = false;
        }
      // pi_1 / j_1
      const FinAb& N1 = m.P1.N.group(j - 1);
      for (std::size_t x = 0; x < C.group(i).rank(); ++x)
        for (std::size_t y = 0; y < N1.rank(); ++y) {
          Elem c = C.group(i).generator(x);
          Elem yy = cp.Cd.sum(j - 1).in2(N1.generator(y));
          Elem rhs = shifted(i, j, cp.split(i, c).first, N1.generator(y));
          if (cp.pairing(i, j, c, yy) != rhs) sq.pi1_j1 = false;
        }
    }
  return sq;
}

/// H^i(M) x H^j(N) -> H^{i+j}(eta) on class lifts
struct CohomologyPairing {
  Subquotient Hi, Hj, Heta;
  Bilinear values;
};

inline CohomologyPairing cohomology_bilinear(const ChainPairing& P, int i, int j) {
  CohomologyPairing out{P.M.cohomology(i), P.N.cohomology(j), P.eta.cohomology(i + j), {}};
  out.values = Bilinear(out.Hi.group, out.Hj.group, out.Heta.group);
  for (std::size_t a = 0; a < out.Hi.group.rank(); ++a)
    for (std::size_t b = 0; b < out.Hj.group.rank(); ++b)
      out.values.set(a, b, out.Heta.coords(P(i, j, out.Hi.lifts[a], out.Hj.lifts[b])));
  return out;
}

/// the cohomology pairing composed with chi on H^{i+j}(eta); by default
/// H^{i+j}(eta) must be cyclic (or 0) and its generator goes to 1/n
inline FinPairing cohomology_pairing(const ChainPairing& P, int i, int j, std::optional<Character> chi = std::nullopt) {
  CohomologyPairing c = cohomology_bilinear(P, i, j);
  if (!chi) {
    const FinAb& H = c.Heta.group;
    if (H.rank() > 1) throw InvalidArgument("H^" + std::to_string(i + j) + "(eta) is not cyclic; pass a character");
    chi = Character{};
    if (H.rank() == 1) chi->emplace_back(1, H.factor(0));
  }
  return c.values.with_character(*chi);
}

/// Representative independence: perturb class lifts by random coboundaries and
/// compare the class of the value. Returns the number of failing samples.
inline int representative_failures(const ChainPairing& P, int i, int j, int perturbations, std::uint64_t seed) {
  Rng rng(seed);
  CohomologyPairing c = cohomology_bilinear(P, i, j);
  int fails = 0;
  const FinHom dM = P.M.diff(i - 1), dN = P.N.diff(j - 1);
  for (std::size_t a = 0; a < c.Hi.group.rank(); ++a)
    for (std::size_t b = 0; b < c.Hj.group.rank(); ++b)
      for (int k = 0; k < perturbations; ++k) {
        Elem x = P.M.group(i).add(c.Hi.lifts[a], dM(random_element(dM.domain(), rng)));
        Elem y = P.N.group(j).add(c.Hj.lifts[b], dN(random_element(dN.domain(), rng)));
        if (c.Heta.coords(P(i, j, x, y)) != c.values.at(a, b)) ++fails;
      }
  return fails;
}

}  // namespace charp
