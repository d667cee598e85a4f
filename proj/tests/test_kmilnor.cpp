#include <gtest/gtest.h>

#include "charp/derham/random.hpp"
#include "charp/fields/text.hpp"
#include "charp/kmilnor/filtration.hpp"
#include "charp/kmilnor/tame.hpp"

using namespace charp;

namespace {

RatFn el(const RatFieldPtr& K, const std::string& s) { return parse_element(K, s); }

MilnorSymbol sym(const RatFieldPtr& K, std::vector<std::string> xs) {
  std::vector<RatFn> v;
  for (const auto& s : xs) v.push_back(el(K, s));
  return MilnorSymbol(K, v);
}

SymbolSum one_term(const MilnorSymbol& s) { return SymbolSum(s); }

SymbolSum zero_sum(const RatFieldPtr& K, int r) { return SymbolSum(K, r); }

// Classical degree-2 tame symbol, normalized so that {t, u} goes to u:
// (-1)^{ab} y^a / x^b reduced, a = v(x), b = v(y).
RatFn classical_tame2(const ValuedField& V, const RatFn& x, const RatFn& y) {
  const std::int64_t a = V.valuation(x), b = V.valuation(y);
  RatFn c = y.pow(a) / x.pow(b);
  if ((a * b) % 2) c = -c;
  return V.residue(c);
}

RatFn random_unit(const ValuedField& V, Rng& rng) {
  const auto& K = V.field();
  for (;;) {
    RatFn x = random_nonzero_ratfn(K, rng, {3, 2});
    if (V.valuation(x) != 0) continue;
    return x;
  }
}

}  // namespace

TEST(Symbol, DlogExamples) {
  auto K = RatField::standard(2, 1);
  EXPECT_EQ(symbol_dlog_class(sym(K, {"t"})), DiffForm::dlog_basis(K, subset_of({0})));

  auto K2 = RatField::make(GaloisField::make(2), {"u", "t"});
  EXPECT_TRUE(symbol_dlog_class(sym(K2, {"t", "t"})).is_zero());
  EXPECT_THROW(sym(K2, {"u", "0"}), ZeroEntry);

  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    RatFn x = random_nonzero_ratfn(K2, rng);
    if (x.is_one()) continue;
    ASSERT_TRUE(symbol_dlog_class(MilnorSymbol(K2, {x, RatFn::from_int(K2, 1) - x})).is_zero());
  }
}

TEST(Symbol, SumsReduceModP) {
  auto K = RatField::make(GaloisField::make(3), {"u", "t"});
  SymbolSum s(K, 2);
  s.add(3, sym(K, {"u", "t"}));
  EXPECT_TRUE(equal_mod_p(s, zero_sum(K, 2)));
  SymbolSum a(K, 2);
  a.add(2, sym(K, {"u", "t"}));
  EXPECT_TRUE(equal_mod_p(a, one_term(sym(K, {"t", "u"}))));
  EXPECT_FALSE(equal_mod_p(one_term(sym(K, {"u", "t"})), zero_sum(K, 2)));
  EXPECT_THROW(s.add(1, sym(K, {"u"})), DegreeMismatch);
  EXPECT_EQ(symbol_sum_text(a - one_term(sym(K, {"t", "u"}))), "2*{u, t} - {t, u}");
}

TEST(Symbol, MultiplicativeAndAntisymmetric) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto K = RatField::make(GaloisField::make(q), {"u", "t"});
    Rng rng(50 + q);
    for (int i = 0; i < 40; ++i) {
      RatFn x = random_nonzero_ratfn(K, rng), y = random_nonzero_ratfn(K, rng), z = random_nonzero_ratfn(K, rng);
      SymbolSum lhs = one_term(MilnorSymbol(K, {x * y, z}));
      SymbolSum rhs = one_term(MilnorSymbol(K, {x, z})) + one_term(MilnorSymbol(K, {y, z}));
      ASSERT_TRUE(equal_mod_p(lhs, rhs));
      SymbolSum anti = one_term(MilnorSymbol(K, {x, y})) + one_term(MilnorSymbol(K, {y, x}));
      ASSERT_TRUE(equal_mod_p(anti, zero_sum(K, 2)));
    }
  }
}

TEST(Valued, ValuationAndResidue) {
  auto K = RatField::make(GaloisField::make(3), {"u", "t"});
  ValuedField V(K);
  EXPECT_EQ(V.residue_field()->descriptor(), "GF(3)(u)");
  EXPECT_EQ(V.valuation(el(K, "t^2*(1+u)/(t+t^3)")), 1);
  EXPECT_EQ(V.valuation(el(K, "(1+t)/t^3")), -3);
  EXPECT_EQ(V.residue(el(K, "(u+t)/(1+u*t)")), el(V.residue_field(), "u"));
  EXPECT_TRUE(V.residue(el(K, "t/u")).is_zero());
  EXPECT_THROW(V.residue(el(K, "1/t")), InvalidArgument);
  EXPECT_EQ(V.unit_part(el(K, "u*t^2+t^3")), el(K, "u+t"));

  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    RatFn x = random_nonzero_ratfn(K, rng), y = random_nonzero_ratfn(K, rng);
    ASSERT_EQ(V.valuation(x * y), V.valuation(x) + V.valuation(y));
    if (x + y == RatFn(K)) continue;
    const auto vs = V.valuation(x + y);
    ASSERT_GE(vs, std::min(V.valuation(x), V.valuation(y)));
    if (V.valuation(x) != V.valuation(y)) ASSERT_EQ(vs, std::min(V.valuation(x), V.valuation(y)));
    RatFn ux = V.unit_part(x), uy = V.unit_part(y);
    ASSERT_EQ(V.residue(ux * uy), V.residue(ux) * V.residue(uy));
    ASSERT_EQ(V.lift(V.residue(ux)), V.lift(V.residue(ux)));
  }
}

TEST(Tame, Examples) {
  auto K = RatField::make(GaloisField::make(2), {"u", "t"});
  ValuedField V(K);
  const auto& k = V.residue_field();
  auto w = sym(K, {"t", "1+u+u*t"});
  EXPECT_TRUE(equal_mod_p(tame_symbol(V, w), one_term(sym(k, {"1+u"}))));

  auto K3 = RatField::standard(3, 1);
  ValuedField V3(K3);
  SymbolSum tt = tame_symbol(V3, sym(K3, {"t", "t"}));
  ASSERT_EQ(tt.terms().size(), 1u);
  EXPECT_EQ(tt.terms()[0].first, 1);
  EXPECT_EQ(tt.terms()[0].second.entries()[0], el(V3.residue_field(), "2"));

  auto K5 = RatField::make(GaloisField::make(5), {"u", "t"});
  ValuedField V5(K5);
  EXPECT_TRUE(equal_mod_p(tame_symbol(V5, sym(K5, {"1+t", "t"})), zero_sum(V5.residue_field(), 1)));
  EXPECT_TRUE(equal_mod_p(tame_symbol(V5, sym(K5, {"u", "t"})), SymbolSum(sym(V5.residue_field(), {"1/u"}))));
  EXPECT_TRUE(
      equal_mod_p(tame_symbol(V5, sym(K5, {"u", "t^2"})), SymbolSum(sym(V5.residue_field(), {"u^-2"}))));
}

TEST(Tame, AgreesWithClassicalFormulaInDegreeTwo) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto K = RatField::make(GaloisField::make(q), {"u", "t"});
    ValuedField V(K);
    Rng rng(70 + q);
    for (int i = 0; i < 50; ++i) {
      auto s = random_laurent_symbol(V, 2, rng);
      RatFn c = classical_tame2(V, s.entries()[0], s.entries()[1]);
      ASSERT_TRUE(equal_mod_p(tame_symbol(V, s), SymbolSum(MilnorSymbol(V.residue_field(), {c}))))
          << symbol_text(s);
    }
  }
}

TEST(Tame, AdditiveAndKillsUnits) {
  auto K = RatField::make(GaloisField::make(3), {"u", "v", "t"});
  ValuedField V(K);
  Rng rng(80);
  for (int i = 0; i < 30; ++i) {
    auto a = random_laurent_symbol(V, 2, rng), b = random_laurent_symbol(V, 2, rng);
    SymbolSum s = one_term(a);
    s.add(2, b);
    SymbolSum expect = tame_symbol(V, a);
    expect.add(2, tame_symbol(V, b));
    ASSERT_TRUE(equal_mod_p(tame_symbol(V, s), expect));
    auto pure = MilnorSymbol(K, {random_unit(V, rng), random_unit(V, rng)});
    ASSERT_TRUE(tame_symbol(V, pure).terms().empty());
  }
}

TEST(Tame, ResidueCompatibility) {
  auto K = RatField::make(GaloisField::make(2), {"u", "t"});
  ValuedField V(K);
  const auto& k = V.residue_field();
  auto s = sym(K, {"t", "u"});
  EXPECT_EQ(form_residue(V, symbol_dlog_class(s)), DiffForm::dlog_basis(k, subset_of({0})));
  EXPECT_EQ(symbol_dlog_class(tame_symbol(V, s)), DiffForm::dlog_basis(k, subset_of({0})));
  auto units = sym(K, {"1+t", "u+t^2"});
  EXPECT_TRUE(form_residue(V, symbol_dlog_class(units)).is_zero());
  EXPECT_TRUE(residue_compatible(V, units));

  EXPECT_TRUE(residue_compatibility_check(V, 2, 50, 90).ok());
  auto K3 = RatField::make(GaloisField::make(3), {"u", "v", "t"});
  ValuedField V3(K3);
  for (int r = 1; r <= 3; ++r) {
    auto rep = residue_compatibility_check(V3, r, 30, 91 + static_cast<unsigned>(r));
    EXPECT_EQ(rep.samples, 30);
    EXPECT_TRUE(rep.ok()) << rep.first_failure.value_or("");
  }
}

TEST(Filtration, LevelExamples) {
  auto K = RatField::standard(2, 1);
  ValuedField V(K);
  EXPECT_EQ(unit_filtration_level(V, el(K, "1+t^3")), 3);
  EXPECT_EQ(unit_filtration_level(V, el(K, "t")), 0);
  EXPECT_EQ(unit_filtration_level(V, el(K, "1+t+t^2")), 1);
  auto K2 = RatField::make(GaloisField::make(2), {"u", "t"});
  ValuedField V2(K2);
  EXPECT_EQ(unit_filtration_level(V2, el(K2, "u+t")), 0);
  EXPECT_EQ(unit_filtration_level(V2, el(K2, "1+u*t^2")), 2);
}

TEST(Filtration, LevelOfProducts) {
  auto K = RatField::make(GaloisField::make(3), {"u", "t"});
  ValuedField V(K);
  Rng rng(100);
  auto random_level_unit = [&](std::int64_t n) {
    RatFn a = random_unit(V, rng);
    return RatFn::from_int(K, 1) + a * V.uniformizer().pow(n);
  };
  for (int i = 0; i < 60; ++i) {
    std::int64_t m = rng.range(1, 4), n = rng.range(1, 4);
    RatFn x = random_level_unit(m), y = random_level_unit(n);
    ASSERT_EQ(unit_filtration_level(V, x), m);
    std::int64_t lxy = unit_filtration_level(V, x * y);
    ASSERT_GE(lxy, std::min(m, n));
    if (m != n) ASSERT_EQ(lxy, std::min(m, n));
  }
}

TEST(Filtration, Step3Examples) {
  auto K = RatField::make(GaloisField::make(2), {"u0", "t"});
  ValuedField V(K);
  EXPECT_TRUE(unit_step3_identity(V, el(K, "1+u0*t^2"), el(K, "t")));
  auto d = unit_step3(V, el(K, "1"), el(K, "t"));
  EXPECT_TRUE(d.holds());
  EXPECT_TRUE(d.lhs.is_zero());
  EXPECT_TRUE(d.rhs.is_zero());
  EXPECT_THROW(unit_step3_identity(V, el(K, "1+t"), el(K, "t")), BadUnit);
  EXPECT_THROW(unit_step3_identity(V, el(K, "u0"), el(K, "t")), BadUnit);
  EXPECT_THROW(unit_step3_identity(V, el(K, "1+t^2"), el(K, "t^2")), InvalidArgument);
  // the non-trivial side is actually non-zero
  EXPECT_FALSE(unit_step3(V, el(K, "1+u0*t^2"), el(K, "t")).lhs.is_zero());
}

TEST(Filtration, Step3RandomUnits) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto K = RatField::make(GaloisField::make(q), {"u", "t"});
    ValuedField V(K);
    Rng rng(110 + q);
    for (int i = 0; i < 50; ++i) {
      std::int64_t n = rng.range(2, 3);
      RatFn a = random_unit(V, rng);
      RatFn pi = V.uniformizer();
      if (rng.coin()) pi = pi * random_unit(V, rng);
      RatFn u = RatFn::from_int(K, 1) + a * pi.pow(n);
      auto data = unit_step3(V, u, pi);
      ASSERT_EQ(data.n, n);
      ASSERT_TRUE(data.holds()) << to_text(u) << " / " << to_text(pi);
    }
  }
}

TEST(Filtration, GradedUnitMap) {
  auto K = RatField::standard(2, 1);
  ValuedField V(K);
  EXPECT_EQ(graded_unit_map(V, el(K, "1+t^2"), 2), el(V.residue_field(), "1"));
  RatFn x = el(K, "1+t^2");
  EXPECT_TRUE(graded_unit_map(V, x * x, 2).is_zero());
  EXPECT_EQ(graded_unit_map(V, x * x, 2), graded_unit_map(V, x, 2) + graded_unit_map(V, x, 2));
  EXPECT_EQ(unit_filtration_level(V, x * x), 4);
  EXPECT_THROW(graded_unit_map(V, el(K, "1+t"), 2), LevelTooLow);

  auto K2 = RatField::make(GaloisField::make(3), {"u", "t"});
  ValuedField V2(K2);
  EXPECT_EQ(graded_unit_map(V2, el(K2, "1+u*t^3"), 3), el(V2.residue_field(), "u"));

  Rng rng(120);
  for (int i = 0; i < 40; ++i) {
    std::int64_t lvl = rng.range(1, 3);
    RatFn a = random_unit(V2, rng), b = random_unit(V2, rng);
    RatFn one = RatFn::from_int(K2, 1), t = V2.uniformizer();
    RatFn xa = one + a * t.pow(lvl), xb = one + b * t.pow(lvl);
    ASSERT_EQ(graded_unit_map(V2, xa * xb, lvl), graded_unit_map(V2, xa, lvl) + graded_unit_map(V2, xb, lvl));
  }
}
