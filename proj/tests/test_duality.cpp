#include <gtest/gtest.h>

#include "charp/duality/gram.hpp"
#include "charp/duality/graded.hpp"
#include "charp/duality/linear_pairing.hpp"
#include "charp/fields/random.hpp"
#include "charp/fields/text.hpp"

using namespace charp;

namespace {

RatFn el(const RatFieldPtr& K, const std::string& s) { return parse_element(K, s); }

struct Config {
  std::uint32_t q;
  int d;
};

const std::vector<Config> kGrid = {{2, 1}, {3, 1}, {5, 1}, {4, 1}, {2, 2}, {3, 2}, {2, 3}};

}  // namespace

TEST(Gram, PiPhi1Example) {
  auto K = RatField::standard(2, 1);
  DeRhamComplex C(K);
  auto g = gram(C, GramKind::PiPhi1, 0);
  ASSERT_EQ(g.rows, (std::vector<std::string>{"1", "t"}));
  ASSERT_EQ(g.cols, (std::vector<std::string>{"dlog(t)", "t*dlog(t)"}));
  EXPECT_TRUE(g.value(0, 0).is_one());
  EXPECT_TRUE(g.value(0, 1).is_zero());
  EXPECT_TRUE(g.value(1, 0).is_zero());
  EXPECT_EQ(g.value(1, 1), el(K, "t^2"));
  EXPECT_TRUE(certify(g).perfect);
}

TEST(Gram, Phi2AndPhi3Examples) {
  DeRhamComplex C(RatField::standard(2, 1));
  auto g2 = gram(C, GramKind::Phi2, 1);
  EXPECT_EQ(g2.rows.size(), 2u);
  EXPECT_EQ(g2.cols.size(), 2u);
  EXPECT_TRUE(certify(g2).perfect);
  auto g3 = gram(C, GramKind::Phi3, 0);
  EXPECT_EQ(g3.rows.size(), 1u);
  EXPECT_EQ(g3.cols.size(), 1u);
  EXPECT_FALSE(g3.entries[0][0].is_zero());
  EXPECT_THROW(gram(C, GramKind::Phi2, 2), DegreeOutOfRange);
}

TEST(Gram, CertifyExamples) {
  auto K = RatField::standard(2, 1);
  RatFn o = RatFn::from_int(K, 1), z(K);
  auto id = certify(Matrix<RatFn>{{o, z}, {z, o}}, 2);
  EXPECT_TRUE(id.left_nondeg && id.right_nondeg && id.perfect);
  auto zero = certify(Matrix<RatFn>{{z}}, 1);
  EXPECT_FALSE(zero.left_nondeg || zero.right_nondeg || zero.perfect);
  EXPECT_TRUE(certify(Matrix<RatFn>{{o, z}, {z, el(K, "t^2")}}, 2).perfect);
  auto wide = certify(Matrix<RatFn>{{o, z}}, 2);
  EXPECT_TRUE(wide.left_nondeg);
  EXPECT_FALSE(wide.right_nondeg);
}

TEST(Gram, AllPerfectWithExpectedSizes) {
  for (auto [q, d] : kGrid) {
    DeRhamComplex C(RatField::standard(q, d));
    const std::size_t pd = pmon_count(C.field()->p(), d);
    for (int r = 0; r <= d; ++r) {
      auto g1 = gram(C, GramKind::PiPhi1, r);
      EXPECT_EQ(g1.rows.size(), pd * binomial(d, r));
      EXPECT_EQ(g1.cols.size(), pd * binomial(d, r));
      EXPECT_TRUE(certify(g1).perfect) << q << " " << d << " " << r;
      auto g2 = gram(C, GramKind::Phi2, r);
      EXPECT_EQ(g2.rows.size(), C.dims(r).z);
      EXPECT_EQ(g2.cols.size(), C.dims(r).z);
      EXPECT_TRUE(certify(g2).perfect) << q << " " << d << " " << r;
      auto g3 = gram(C, GramKind::Phi3, r);
      EXPECT_EQ(g3.rows.size(), C.dims(d - r).b);
      EXPECT_EQ(g3.cols.size(), C.dims(d - r).b);
      EXPECT_TRUE(certify(g3).perfect) << q << " " << d << " " << r;
      auto g0 = gram(C, GramKind::Phi1, r);
      EXPECT_EQ(g0.rows.size(), binomial(d, r));
      EXPECT_TRUE(certify(g0).perfect);
    }
  }
}

// pi(t^m dt_I/t_I ^ t^n dt_J/t_J): zero unless I, J are complementary and p | m + n
// componentwise, in which case it is +-t^{(m+n)/p} (as a p-th root)
TEST(Gram, PiPhi1EntriesMatchClosedForm) {
  for (auto [q, d] : kGrid) {
    auto K = RatField::standard(q, d);
    DeRhamComplex C(K);
    const auto p = static_cast<int>(K->p());
    for (int r = 0; r <= d; ++r) {
      auto g = gram(C, GramKind::PiPhi1, r);
      const Grid& gr = C.grid(r);
      const Grid& gc = C.grid(d - r);
      for (std::size_t i = 0; i < g.rows.size(); ++i)
        for (std::size_t j = 0; j < g.cols.size(); ++j) {
          auto m = pmon_tuple(K->p(), d, i / gr.subsets.size());
          auto n = pmon_tuple(K->p(), d, j / gc.subsets.size());
          Subset I = gr.subset(i), J = gc.subset(j);
          RatFn expect(K);
          bool divisible = true;
          for (int v = 0; v < d; ++v) divisible = divisible && (m[v] + n[v]) % p == 0;
          if ((I & J) == 0 && divisible) {
            expect = RatFn::from_int(K, 1);
            for (int v = 0; v < d; ++v)
              if (m[v] + n[v] == p) expect = expect * RatFn::var(K, v);
            int inversions = 0;
            for (int a : subset_indices(I))
              for (int b : subset_indices(J)) inversions += a > b;
            if (inversions % 2) expect = -expect;
          }
          ASSERT_EQ(g.entries[i][j], expect) << q << " " << d << " " << r << " " << i << " " << j;
        }
    }
  }
}

TEST(Gram, EntriesAreRecomputable) {
  auto K = RatField::standard(3, 2);
  DeRhamComplex C(K);
  for (auto which : {GramKind::Phi2, GramKind::Phi3}) {
    auto g = gram(C, which, 1);
    for (std::size_t i = 0; i < g.rows.size(); ++i)
      for (std::size_t j = 0; j < g.cols.size(); ++j) {
        FormClass c = C.project(wedge(g.row_forms[i], g.col_forms[j]));
        ASSERT_EQ(g.value(i, j), c.coords[0].frobenius());
        for (std::size_t k = 1; k < c.coords.size(); ++k) ASSERT_TRUE(c.coords[k].is_zero());
      }
  }
}

TEST(LinearPairing, Examples) {
  auto K = RatField::standard(2, 1);
  RatFn o = RatFn::from_int(K, 1), z(K);
  auto one = linear_pairing_check({K, {{o}}});
  EXPECT_TRUE(one.joint_nondegenerate);
  EXPECT_TRUE(one.left.equal && one.right.equal);
  auto id = linear_pairing_check({K, {{o, z}, {z, o}}});
  EXPECT_TRUE(id.phi_nondegenerate);
  EXPECT_TRUE(id.joint_nondegenerate);
  auto planted = linear_pairing_check({K, {{o, el(K, "t")}, {z, z}}});
  EXPECT_EQ(planted.left.kernel_dim_k, 1u);
  EXPECT_EQ(planted.left.joint_kernel_dim_kp, 2u);
  EXPECT_TRUE(planted.left.equal);
  EXPECT_TRUE(planted.right.equal);
  EXPECT_EQ(planted.right.kernel_dim_k, 1u);
  EXPECT_FALSE(planted.joint_nondegenerate);
}

TEST(LinearPairing, KernelsAgreeOnRandomSpecs) {
  for (auto [q, d] : std::vector<Config>{{2, 1}, {3, 1}, {2, 2}}) {
    auto K = RatField::standard(q, d);
    Rng rng(q * 100 + static_cast<unsigned>(d));
    const std::size_t n = pmon_count(K->p(), d);
    for (int s = 0; s < 20; ++s) {
      std::size_t L = 1 + rng.below(3), R = 1 + rng.below(3);
      Matrix<RatFn> phi(L, std::vector<RatFn>(R, RatFn(K)));
      for (auto& row : phi)
        for (auto& x : row) x = random_ratfn(K, rng, {2, 2});
      if (s % 2 == 1 && L >= 2) {
        // planted left kernel: last row a k-combination of the first
        RatFn c = random_nonzero_ratfn(K, rng, {2, 2});
        for (std::size_t j = 0; j < R; ++j) phi[L - 1][j] = c * phi[0][j];
      }
      auto rep = linear_pairing_check({K, phi});
      ASSERT_TRUE(rep.left.equal) << s;
      ASSERT_TRUE(rep.right.equal) << s;
      ASSERT_EQ(rep.left.joint_kernel_dim_kp, n * rep.left.kernel_dim_k);
      ASSERT_EQ(rep.right.joint_kernel_dim_kp, n * rep.right.kernel_dim_k);
      if (s % 2 == 1 && L >= 2) ASSERT_GE(rep.left.kernel_dim_k, 1u);
    }
  }
}

TEST(CartierDiagram, LogarithmicFixedPoints) {
  auto K = RatField::standard(2, 2);
  DeRhamComplex C(K);
  DiffForm x = DiffForm::dlog_basis(K, subset_of({0})), y = DiffForm::dlog_basis(K, subset_of({1}));
  EXPECT_TRUE(cartier_wedge_identity(C, x, y));
  EXPECT_TRUE(projection_wedge_identity(C, x, y));
}

TEST(CartierDiagram, RandomPairs) {
  auto K22 = RatField::standard(2, 2);
  DeRhamComplex C22(K22);
  for (int r = 0; r <= 2; ++r) {
    auto rep = cartier_diagram_check(C22, r, 34, 7 + static_cast<unsigned>(r));
    EXPECT_TRUE(rep.ok());
    for (const auto& t : rep.identities) EXPECT_EQ(t.checked, 34u);
  }
  auto K3 = RatField::standard(3, 1);
  DeRhamComplex C3(K3);
  EXPECT_TRUE(cartier_diagram_check(C3, 0, 50, 1).ok());
  EXPECT_TRUE(cartier_diagram_check(C3, 1, 50, 2).ok());
}

TEST(GradedPiece, CaseAFiniteIsPerfect) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    auto k = RatField::standard(q, 0);
    auto t = case_a_finite_table(k);
    EXPECT_EQ(t.left.size(), k->p());   // K_1(F_q)/p = 0, K_0/p = Z/p
    EXPECT_EQ(t.right.size(), k->p());  // H_p^0 = 0, H_p^1(F_q) = Z/p
    EXPECT_TRUE(t.perfect()) << q;
  }
  auto t2 = case_a_finite_table(RatField::standard(2, 0));
  EXPECT_EQ(t2.values, (std::vector<std::vector<std::uint32_t>>{{0, 0}, {0, 1}}));
}

TEST(GradedPiece, CaseBRepresentativeGram) {
  auto k = parse_field("GF(2)(u)");
  DeRhamComplex Ck(k);
  auto g = graded_piece(PieceCase::B, k, 1, 2);
  EXPECT_EQ(g.d, 2);
  // w in Omega^0, v in Omega^1; on grid bases this is the pi-phi1 Gram of k
  auto gm = gram(Ck, GramKind::PiPhi1, 0);
  for (std::size_t i = 0; i < gm.rows.size(); ++i)
    for (std::size_t j = 0; j < gm.cols.size(); ++j) {
      PieceLeft L;
      L.w = gm.row_forms[i];
      PieceRight R;
      R.v = gm.col_forms[j];
      EXPECT_EQ(g.evaluate(Ck, L, R).c, gm.entries[i][j]);
    }
  EXPECT_TRUE(certify(gm).perfect);
}

TEST(GradedPiece, CaseEAndErrors) {
  auto k = parse_field("GF(3)(u)");
  DeRhamComplex Ck(k);
  auto e = graded_piece(PieceCase::E, k, 2, 1);
  EXPECT_EQ(e.left_desc, "0");
  EXPECT_TRUE(e.evaluate(Ck, {}, {}).c.is_zero());
  EXPECT_THROW(graded_piece(PieceCase::B, k, 1, 1), BadCaseParams);
  EXPECT_THROW(graded_piece(PieceCase::B, k, 0, 3), BadCaseParams);
  EXPECT_THROW(graded_piece(PieceCase::D, k, 1, 2), BadCaseParams);
  EXPECT_THROW(graded_piece(PieceCase::D, k, 1, 2, RatFn(k)), BadCaseParams);
  EXPECT_NO_THROW(graded_piece(PieceCase::D, k, 1, 2, el(k, "u")));
  EXPECT_THROW(parse_piece_case("f"), BadCaseParams);
}

TEST(GradedPiece, CaseCUsesExactForms) {
  auto k = parse_field("GF(3)(u)");
  DeRhamComplex Ck(k);
  auto g = graded_piece(PieceCase::C, k, 2, 1);  // (Omega^1/Z + Omega^0/Z) x (B^0 + B^1)
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    PieceLeft L;
    L.w = random_form(k, 1, rng);
    L.w2 = random_form(k, 0, rng);
    PieceRight R;
    R.v = DiffForm(k, 0);
    R.v2 = exterior_d(random_form(k, 0, rng));
    HpClass h = g.evaluate(Ck, L, R);
    // changing w2 by a closed form does not change the value
    PieceLeft L2 = L;
    L2.w2 = L.w2 + DiffForm::function(random_ratfn(k, rng).frobenius());
    EXPECT_EQ(g.evaluate(Ck, L2, R).c, h.c);
  }
  PieceRight bad;
  bad.v = DiffForm(k, 0);
  bad.v2 = DiffForm::dlog_basis(k, 1);
  PieceLeft L;
  L.w = DiffForm(k, 1);
  L.w2 = DiffForm::function(el(k, "u"));
  EXPECT_THROW(g.evaluate(Ck, L, bad), InvalidArgument);
}

TEST(CaseD, NuMembershipAndWitness) {
  auto k = parse_field("GF(4)");
  DeRhamComplex Ck(k);
  EXPECT_TRUE(nu_membership(Ck, DiffForm(k, 0), RatFn::from_int(k, 1)));
  std::vector<GaloisField::Code> members;
  for (GaloisField::Code c = 0; c < 4; ++c)
    if (nu_membership(Ck, DiffForm::function(RatFn::constant(k, c)), RatFn::from_int(k, 1))) members.push_back(c);
  // x^{1/2} + x = 0 in F_4: exactly F_2
  EXPECT_EQ(members, (std::vector<GaloisField::Code>{0, 1}));

  auto K = RatField::standard(2, 1);
  DeRhamComplex C(K);
  DiffForm exact = exterior_d(DiffForm::function(el(K, "t^3+1/t")));
  EXPECT_TRUE(D_a_witness_check(C, DiffForm(K, 1), exact, el(K, "t")));
  EXPECT_FALSE(D_a_witness_check(C, DiffForm(K, 1), DiffForm::dlog_basis(K, 1), el(K, "t")));
  auto K22 = RatField::standard(2, 2);
  DeRhamComplex C22(K22);
  EXPECT_THROW(nu_membership(C22, DiffForm::basis(el(K22, "t2"), subset_of({0})), el(K22, "1")), NotClosed);
}

TEST(CaseD, DiagramIdentities) {
  auto K = RatField::standard(2, 1);
  DeRhamComplex C(K);
  auto one = RatFn::from_int(K, 1);
  auto ok = case_d_identities(C, DiffForm::dlog_basis(K, 1), DiffForm::function(one), one);
  for (bool b : ok) EXPECT_TRUE(b);
  EXPECT_TRUE(case_d_diagram_check(C, 1, one, 50, 11).ok());
  EXPECT_TRUE(case_d_diagram_check(C, 0, el(K, "t+1"), 50, 12).ok());
  auto K3 = RatField::standard(3, 1);
  DeRhamComplex C3(K3);
  EXPECT_TRUE(case_d_diagram_check(C3, 0, el(K3, "2"), 25, 13).ok());
  EXPECT_TRUE(case_d_diagram_check(C3, 1, el(K3, "t"), 25, 14).ok());
  auto F4 = RatField::standard(4, 0);
  DeRhamComplex C4(F4);
  EXPECT_TRUE(case_d_diagram_check(C4, 0, RatFn::constant(F4, 2), 20, 15).ok());
  EXPECT_THROW(case_d_diagram_check(C, 0, RatFn(K), 1, 1), BadCaseParams);
}

TEST(CaseD, ScalarMovesAcrossTheWedge) {
  auto k = parse_field("GF(3)(u,v)");
  DeRhamComplex Ck(k);
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    RatFn a = random_nonzero_ratfn(k, rng);
    DiffForm w = random_form(k, 1, rng), v = random_form(k, 1, rng);
    EXPECT_EQ(lambda_k(Ck, wedge(w.scaled(a), v)).c, lambda_k(Ck, wedge(w, v.scaled(a))).c);
  }
}
