#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charp/derham/hp.hpp"
#include "charp/duality/diagrams.hpp"
#include "charp/fields/text.hpp"

namespace charp {

enum class PieceCase { A, B, C, D, E };

inline PieceCase parse_piece_case(const std::string& s) {
  if (s == "a") return PieceCase::A;
  if (s == "b") return PieceCase::B;
  if (s == "c") return PieceCase::C;
  if (s == "d") return PieceCase::D;
  if (s == "e") return PieceCase::E;
  throw BadCaseParams("unknown case '" + s + "' (expected a..e)");
}

inline std::string piece_case_name(PieceCase c) { return std::string(1, static_cast<char>('a' + static_cast<int>(c))); }

/// Left element. Case a: n*{x} in K_r(k)/p plus n2*{x2} in K_{r-1}(k)/p.
/// Cases b..d: forms w in Omega^{r-1} and w2 in Omega^{r-2}.
struct PieceLeft {
  std::int64_t n = 1;
  std::vector<RatFn> x;
  std::int64_t n2 = 0;
  std::vector<RatFn> x2;
  DiffForm w, w2;
};

/// Right element. Case a: v in Omega^{q-2} standing for lambda(v) in H_p^{q-1}(k) and
/// v2 in Omega^{q-1} for H_p^q(k). Cases b..d: v in Omega^{q-1}, v2 in Omega^q.
struct PieceRight {
  DiffForm v, v2;
};

/// The pairing on one graded piece, evaluated into H_p^d(k) through lambda_k.
class GradedPiecePairing {
 public:
  PieceCase which;
  RatFieldPtr k;
  int d = 1;  // [k : k^p] = p^{d-1}
  int r = 1, q = 1;
  std::optional<RatFn> a;
  std::string left_desc, right_desc;

  HpClass evaluate(const DeRhamComplex& Ck, const PieceLeft& L, const PieceRight& R) const {
    const int top = d - 1;
    DiffForm total(k, top);
    auto add = [&](const DiffForm& x, const DiffForm& y) {
      if (x.degree() < 0 || y.degree() < 0 || x.degree() + y.degree() != top) return;
      if (x.is_zero() || y.is_zero()) return;
      total += wedge(x, y);
    };
    auto expect_degree = [](const DiffForm& f, int deg, const char* what) {
      if (!f.field()) return;
      if (f.degree() != deg && !(f.is_zero() && deg < 0))
        throw DegreeMismatch(std::string(what) + " should have degree " + std::to_string(deg));
    };
    switch (which) {
      case PieceCase::A: {
        if (L.x.size() != static_cast<std::size_t>(r) || L.x2.size() != static_cast<std::size_t>(r - 1))
          throw InvalidArgument("case a symbols need lengths r and r-1");
        expect_degree(R.v, q - 2, "v");
        expect_degree(R.v2, q - 1, "v2");
        if (R.v.field() && q >= 2) add(dlog(k, L.x).scaled(RatFn::from_int(k, L.n)), R.v);
        if (R.v2.field()) add(dlog(k, L.x2).scaled(RatFn::from_int(k, L.n2)), R.v2);
        break;
      }
      case PieceCase::B:
        expect_degree(L.w, r - 1, "w");
        expect_degree(R.v, q - 1, "v");
        add(L.w, R.v);
        break;
      case PieceCase::C:
      case PieceCase::D: {
        expect_degree(L.w, r - 1, "w");
        expect_degree(R.v, q - 1, "v");
        if (which == PieceCase::C) {
          if (R.v.field() && !Ck.B(R.v.degree()).contains(R.v)) throw InvalidArgument("v is not in B^{q-1}");
          if (R.v2.field() && R.v2.degree() <= top && !Ck.B(R.v2.degree()).contains(R.v2))
            throw InvalidArgument("v2 is not in B^q");
        } else {
          if (R.v.field() && !nu_membership(Ck, R.v, *a)) throw InvalidArgument("v is not in nu_{q-1}(a)");
          if (R.v2.field() && R.v2.degree() <= top && !nu_membership(Ck, R.v2, *a))
            throw InvalidArgument("v2 is not in nu_q(a)");
        }
        if (L.w.field() && R.v.field()) add(L.w, R.v);
        if (L.w2.field() && R.v2.field()) add(L.w2, R.v2);
        break;
      }
      case PieceCase::E:
        break;
    }
    return lambda_k(Ck, total);
  }
};

inline GradedPiecePairing graded_piece(PieceCase which, const RatFieldPtr& k, int r, int q,
                                       std::optional<RatFn> a = std::nullopt) {
  const int d = k->d() + 1;
  if (r < 1 || q < 1) throw BadCaseParams("r and q must be at least 1");
  if (r + q != d + 1)
    throw BadCaseParams("r + q must equal d + 1 = " + std::to_string(d + 1) + " for this residue field");
  if (which == PieceCase::D && (!a || a->is_zero())) throw BadCaseParams("case d needs a nonzero a");
  GradedPiecePairing g{which, k, d, r, q, a, "", ""};
  const std::string R1 = std::to_string(r - 1), R2 = std::to_string(r - 2), Q1 = std::to_string(q - 1),
                    Q = std::to_string(q);
  switch (which) {
    case PieceCase::A:
      g.left_desc = "K_" + std::to_string(r) + "(k)/p + K_" + R1 + "(k)/p";
      g.right_desc = "H_p^" + Q1 + "(k) + H_p^" + Q + "(k)";
      break;
    case PieceCase::B:
      g.left_desc = "Omega^" + R1;
      g.right_desc = "Omega^" + Q1;
      break;
    case PieceCase::C:
      g.left_desc = "Omega^" + R1 + "/Z + Omega^" + R2 + "/Z";
      g.right_desc = "B^" + Q1 + " + B^" + Q;
      break;
    case PieceCase::D:
      g.left_desc = "Omega^" + R1 + "/D_a + Omega^" + R2 + "/D_a";
      g.right_desc = "nu_" + Q1 + "(a) + nu_" + Q + "(a)";
      break;
    case PieceCase::E:
      g.left_desc = "0";
      g.right_desc = "0";
      break;
  }
  return g;
}

/// Case a over a finite residue field (d = 1, r = q = 1), by full enumeration:
/// K_1(F_q)/p + K_0/p against H_p^0 + H_p^1(F_q), values in F_p via the trace.
struct FinitePieceTable {
  std::uint32_t p = 2;
  std::vector<std::string> left, right;
  std::vector<std::vector<std::uint32_t>> values;
  bool left_nondeg = false;
  bool right_nondeg = false;
  bool perfect() const { return left_nondeg && right_nondeg; }
};

inline FinitePieceTable case_a_finite_table(const RatFieldPtr& k) {
  if (k->d() != 0) throw BadCaseParams("finite table needs k = F_q");
  const auto& F = k->gf();
  const std::uint32_t p = F.p();
  DeRhamComplex Ck(k);
  auto g = graded_piece(PieceCase::A, k, 1, 1);

  // K_1(F_q)/p: classes of F_q^x modulo p-th powers
  std::vector<GaloisField::Code> k1_reps;
  for (GaloisField::Code x = 1; x < F.q(); ++x) {
    bool fresh = true;
    for (auto y : k1_reps)
      for (GaloisField::Code z = 1; z < F.q() && fresh; ++z)
        if (F.mul(y, F.pow(z, p)) == x) fresh = false;
    if (fresh) k1_reps.push_back(x);
  }
  // H_p^1(F_q) = F_q / (F - 1)F_q
  std::vector<GaloisField::Code> h1_reps;
  for (GaloisField::Code c = 0; c < F.q(); ++c) {
    bool fresh = true;
    for (auto y : h1_reps)
      if (artin_schreier(F, F.sub(c, y)).solution) fresh = false;
    if (fresh) h1_reps.push_back(c);
  }
  FinitePieceTable t;
  t.p = p;
  struct L {
    GaloisField::Code x;
    std::uint32_t n2;
  };
  std::vector<L> lefts;
  for (auto x : k1_reps)
    for (std::uint32_t n2 = 0; n2 < p; ++n2) {
      lefts.push_back({x, n2});
      t.left.push_back("({" + coeff_text(F, x) + "}, " + std::to_string(n2) + ")");
    }
  for (auto c : h1_reps) t.right.push_back("(0, [" + coeff_text(F, c) + "])");
  for (const auto& l : lefts) {
    std::vector<std::uint32_t> row;
    for (auto c : h1_reps) {
      PieceLeft pl;
      pl.x = {RatFn::constant(k, l.x)};
      pl.n2 = l.n2;
      PieceRight pr;
      pr.v2 = DiffForm::function(RatFn::constant(k, c));
      HpClass h = g.evaluate(Ck, pl, pr);
      row.push_back(F.trace(h.c.constant_value()));
    }
    t.values.push_back(row);
  }
  // left element i is (k1_reps[i / p], i % p); the zero element is (class of 1, 0)
  t.left_nondeg = true;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    bool is_zero_elem = lefts[i].n2 == 0 && lefts[i].x == k1_reps.front();
    bool pairs_to_zero = true;
    for (auto v : t.values[i]) pairs_to_zero = pairs_to_zero && v == 0;
    if (pairs_to_zero && !is_zero_elem) t.left_nondeg = false;
  }
  t.right_nondeg = true;
  for (std::size_t j = 0; j < h1_reps.size(); ++j) {
    bool pairs_to_zero = true;
    for (std::size_t i = 0; i < lefts.size(); ++i) pairs_to_zero = pairs_to_zero && t.values[i][j] == 0;
    if (pairs_to_zero && j != 0) t.right_nondeg = false;  // h1_reps[0] = 0
  }
  return t;
}

}  // namespace charp
