#include <gtest/gtest.h>

#include "charp/cli/config.hpp"
#include "charp/complexes/random.hpp"
#include "charp/derham/random.hpp"
#include "charp/gcoh/battery.hpp"

using namespace charp;
using io::Json;

TEST(FormJson, LayoutExample) {
  auto K = RatField::standard(3, 2);
  DiffForm w = DiffForm::basis(parse_element(K, "t1*t2"), subset_of({0, 1}));
  w += DiffForm::basis(parse_element(K, "-1"), subset_of({0, 1}));
  EXPECT_EQ(io::to_json(w).dump(), R"j({"field":"GF(3)(t1,t2)","degree":2,"terms":[{"I":[0,1],"coeff":"t1*t2+2"}]})j");
  DiffForm zero(K, 1);
  EXPECT_EQ(io::to_json(zero).dump(), R"j({"field":"GF(3)(t1,t2)","degree":1,"terms":[]})j");
}

TEST(FormJson, RoundTripOnRandomForms) {
  for (auto [q, d] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {3, 2}, {4, 2}, {2, 3}}) {
    auto K = RatField::standard(q, d);
    Rng rng(40 + q + static_cast<unsigned>(d));
    for (int i = 0; i < 30; ++i) {
      DiffForm w = random_form(K, static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1)), rng);
      Json j = io::to_json(w);
      DiffForm back = io::form_from_json(j);
      ASSERT_EQ(back, w);
      // emit is canonical: text survives a second pass unchanged
      ASSERT_EQ(io::to_json(back).dump(), j.dump());
      ASSERT_EQ(io::to_json(io::form_from_json(Json::parse(j.dump()))).dump(), j.dump());
    }
  }
}

TEST(FormJson, RejectsBadInput) {
  auto bad = [](const std::string& s) { return io::form_from_json(Json::parse(s)); };
  EXPECT_THROW(bad(R"j({"field":"GF(2)(t)","degree":1})j"), ParseError);
  EXPECT_THROW(bad(R"j({"field":"GF(2)(t)","degree":1,"terms":[{"I":[1],"coeff":"t"}]})j"), ParseError);
  EXPECT_THROW(bad(R"j({"field":"GF(2)(t1,t2)","degree":2,"terms":[{"I":[1,0],"coeff":"1"}]})j"), ParseError);
  EXPECT_THROW(bad(R"j({"field":"GF(2)(t1,t2)","degree":2,"terms":[{"I":[0],"coeff":"1"}]})j"), DegreeMismatch);
  EXPECT_THROW(bad(R"j({"field":"GF(6)(t)","degree":0,"terms":[]})j"), ParseError);
  EXPECT_THROW(bad(R"j({"field":"GF(2)(t)","degree":0,"terms":[{"I":[],"coeff":"t+"}]})j"), ParseError);
}

TEST(FinabJson, GroupsHomsPairingsRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    FinAb A = random_group(rng, 64), B = random_group(rng, 64);
    ASSERT_EQ(io::group_from_json(io::to_json(A)), A);
    FinHom f = random_hom(A, B, rng);
    ASSERT_TRUE(io::hom_from_json(io::to_json(f)) == f);
    FinPairing phi = FinPairing::evaluation(A).scaled(static_cast<long long>(rng.range(1, 3)));
    FinPairing back = io::pairing_from_json(Json::parse(io::to_json(phi).dump()));
    ASSERT_EQ(back.left(), phi.left());
    ASSERT_EQ(back.right(), phi.right());
    ASSERT_EQ(back.values(), phi.values());
  }
  EXPECT_EQ(io::to_json(FinAb({2, 4})).dump(), R"j({"factors":[2,4]})j");
  EXPECT_EQ(io::to_json(FinPairing::standard(4, 2)).dump(),
            R"j({"left":{"factors":[4]},"right":{"factors":[4]},"values":[["1/2"]]})j");
  EXPECT_THROW(io::group_from_json(Json::parse(R"j({"factors":[4,2]})j")), ParseError);
  // x -> x from Z/2 to Z/4 is not well defined
  EXPECT_THROW(io::hom_from_json(Json::parse(R"j({"domain":{"factors":[2]},"codomain":{"factors":[4]},"matrix":[[1]]})j")),
               ParseError);
  EXPECT_THROW(io::pairing_from_json(Json::parse(R"j({"left":{"factors":[2]},"right":{"factors":[2]},"values":[["1/4"]]})j")),
               ParseError);
}

TEST(ComplexJson, ConesRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    PairingMorphism m = random_morphism(rng);
    ConePairing cp = cone_pairing(m);
    for (const FinComplex& C : {cp.pairing.M, cp.pairing.N}) {
      Json j = io::to_json(C);
      ASSERT_TRUE(io::complex_from_json(Json::parse(j.dump())) == C);
    }
  }
  FinComplex single = FinComplex::single(FinAb({3}), 2);
  EXPECT_EQ(io::to_json(single).dump(), R"j({"lo":2,"degrees":[{"degree":2,"group":{"factors":[3]}}]})j");
  // d o d != 0
  EXPECT_THROW(io::complex_from_json(Json::parse(
                   R"j({"lo":0,"degrees":[{"degree":0,"group":{"factors":[2]},"d":[[1]]},
                      {"degree":1,"group":{"factors":[2]},"d":[[1]]},{"degree":2,"group":{"factors":[2]}}]})j")),
               ParseError);
}

TEST(GcohJson, GroupsAndModulesRoundTrip) {
  Rng rng(5);
  for (const auto& b : battery()) {
    ASSERT_TRUE(io::fingroup_from_json(io::to_json(b.G)) == b.G);
    GModule M = random_module(b.G, rng, {2, 3});
    ASSERT_TRUE(io::gmodule_from_json(Json::parse(io::to_json(M).dump())) == M);
  }
  EXPECT_EQ(io::to_json(FinGroup::cyclic(2)).dump(), R"j({"identity":0,"table":[[0,1],[1,0]]})j");
  // not associative: a table that is a Latin square but no group
  EXPECT_THROW(io::fingroup_from_json(Json::parse(R"j({"identity":0,"table":[[0,1,2],[1,0,0],[2,2,1]]})j")),
               ParseError);
  // Z/2 acting on Z/3 by -1 is fine, by 2 twice is not
  Json ok = {{"group", io::to_json(FinGroup::cyclic(2))}, {"module", {{"factors", {3}}}}, {"action", {{{1}}, {{2}}}}};
  EXPECT_EQ(io::gmodule_from_json(ok).rho(1).matrix()(0, 0), 2);
  Json bad = ok;
  bad["action"] = {{{1}}, {{1}}, {{1}}};
  EXPECT_THROW(io::gmodule_from_json(bad), ParseError);
}

TEST(SymbolJson, EntriesAndSums) {
  auto K = RatField::make(GaloisField::make(3), {"u", "t"});
  auto xs = io::parse_entries(K, "t, (1+u)/(u-t), u^2");
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_EQ(to_text(xs[1]), to_text(parse_element(K, "(1+u)/(u-t)")));
  SymbolSum s(MilnorSymbol(K, {xs[0], xs[2]}));
  s.add(-2, MilnorSymbol(K, {xs[1], xs[0]}));
  EXPECT_EQ(io::to_json(s)["terms"][1]["n"], -2);
  EXPECT_EQ(io::to_json(s)["terms"][0]["entries"], Json::parse(R"j(["t","u^2"])j"));
}

TEST(ConfigJson, ParseEmitIsIdentity) {
  cli::Config c;
  c.command = "gram";
  c.which = "phi2";
  c.p = 3;
  c.d = 2;
  c.r = 1;
  c.seed = 18446744073709551615ULL;
  c.format = "table";
  EXPECT_EQ(cli::config_from_json(cli::to_json(c)), c);
  const std::string text = cli::to_json(c).dump();
  EXPECT_EQ(text, R"j({"command":"gram","p":3,"d":2,"r":1,"which":"phi2","seed":18446744073709551615,"format":"table"})j");
  EXPECT_EQ(cli::to_json(cli::config_from_json(Json::parse(text))).dump(), text);

  cli::Config all;
  all.command = "piece";
  all.field = "GF(4)(u,t)";
  all.p = 2;
  all.d = 1;
  all.r = 2;
  all.q = 1;
  all.which = "phi1";
  all.piece_case = "d";
  all.suite = "gcoh";
  all.entries = "t,u";
  all.x = "u";
  all.pi = "t";
  all.seed = 7;
  all.samples = 9;
  all.out = "/tmp/x.json";
  EXPECT_EQ(cli::config_from_json(Json::parse(cli::to_json(all).dump())), all);

  EXPECT_THROW(cli::config_from_json(Json::parse(R"j({"command":"dims","bogus":1})j")), ParseError);
  EXPECT_THROW(cli::config_from_json(Json::parse(R"j({"command":"dims","format":"xml"})j")), ParseError);
  EXPECT_THROW(cli::config_from_json(Json::parse(R"j({"p":2})j")), ParseError);
}
