#include <gtest/gtest.h>

#include "charp/cli/commands.hpp"
#include "oracles.hpp"

using namespace charp;
using namespace charp::cli;

namespace {

Config make(const std::string& command) {
  Config c;
  c.command = command;
  return c;
}

std::vector<std::array<long long, 4>> dims_rows(const Json& doc) {
  std::vector<std::array<long long, 4>> out;
  for (const auto& row : doc["rows"])
    out.push_back({row["r"].get<long long>(), row["dim_omega"].get<long long>(), row["z"].get<long long>(),
                   row["b"].get<long long>()});
  return out;
}

}  // namespace

TEST(CliDims, PTwoDOne) {
  Config c = make("dims");
  c.p = 2;
  c.d = 1;
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  using R = std::array<long long, 4>;
  EXPECT_EQ(dims_rows(res.doc), (std::vector<R>{{0, 2, 1, 0}, {1, 2, 2, 1}}));
}

TEST(CliDims, PTwoDTwo) {
  Config c = make("dims");
  c.p = 2;
  c.d = 2;
  auto rows = dims_rows(run_command(c).doc);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][2], 1);
  EXPECT_EQ(rows[1][2], 5);
  EXPECT_EQ(rows[2][2], 4);
  EXPECT_EQ(rows[1][3], 3);
  EXPECT_EQ(rows[2][3], 3);
}

TEST(CliDims, PerfectField) {
  Config c = make("dims");
  c.p = 3;
  c.d = 0;
  auto res = run_command(c);
  using R = std::array<long long, 4>;
  EXPECT_EQ(dims_rows(res.doc), (std::vector<R>{{0, 1, 1, 0}}));
  EXPECT_EQ(res.exit_code, 0);
}

TEST(CliDims, AgreesWithMonomialOracle) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}, {3, 3}}) {
    Config c = make("dims");
    c.p = p;
    c.d = d;
    auto res = run_command(c);
    EXPECT_EQ(res.exit_code, 0);
    auto rows = dims_rows(res.doc);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(d + 1));
    for (int r = 0; r <= d; ++r) {
      auto o = oracle::derham_dims(p, d, r);
      EXPECT_EQ(rows[r][1], o.dim_omega) << p << " " << d << " " << r;
      EXPECT_EQ(rows[r][2], o.z) << p << " " << d << " " << r;
      EXPECT_EQ(rows[r][3], o.b) << p << " " << d << " " << r;
    }
    for (const auto& row : res.doc["rows"]) {
      EXPECT_EQ(row["z_minus_b"], "pass");
      EXPECT_EQ(row["z_plus_b_next"], "pass");
    }
  }
}

TEST(CliDims, Errors) {
  Config c = make("dims");
  c.p = 4;
  c.d = 1;
  EXPECT_THROW(run_command(c), UsageError);
  c.p = 2;
  c.d = 5;
  EXPECT_THROW(run_command(c), BudgetExceeded);
}

TEST(CliGram, PiPhi1IsDiagonal) {
  Config c = make("gram");
  c.which = "piphi1";
  c.p = 2;
  c.d = 1;
  c.r = 0;
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.doc["gram"]["entries"], Json::parse(R"j([["1","0"],["0","t^2"]])j"));
  EXPECT_TRUE(res.doc["certificate"]["perfect"].get<bool>());
}

TEST(CliGram, Phi2IsInvertible) {
  Config c = make("gram");
  c.which = "phi2";
  c.p = 2;
  c.d = 1;
  c.r = 1;
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  const Json& e = res.doc["gram"]["entries"];
  ASSERT_EQ(e.size(), 2u);
  ASSERT_EQ(e[0].size(), 2u);
  EXPECT_EQ(res.doc["certificate"]["rank"], 2);
}

TEST(CliGram, UsageErrors) {
  Config c = make("gram");
  c.which = "phi1";
  c.p = 2;
  c.d = 1;
  c.r = 2;
  EXPECT_THROW(run_command(c), UsageError);
  c.r = -1;
  EXPECT_THROW(run_command(c), UsageError);
  c.r.reset();
  EXPECT_THROW(run_command(c), UsageError);
  c.r = 0;
  c.which = "phi9";
  EXPECT_THROW(run_command(c), InvalidArgument);
  EXPECT_THROW(run_command(make("nonsense")), UsageError);
}

TEST(CliVerify, UnknownSuite) {
  Config c = make("verify");
  c.suite = "algebra";
  EXPECT_THROW(run_command(c), UsageError);
}

TEST(CliVerify, DerhamSeedSeven) {
  Config c = make("verify");
  c.suite = "derham";
  c.seed = 7;
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0) << res.doc.dump();
  EXPECT_EQ(res.doc["suite"], "derham");
  EXPECT_TRUE(res.doc["pass"].get<bool>());
  ASSERT_FALSE(res.doc["checks"].empty());
  for (const auto& ch : res.doc["checks"]) {
    EXPECT_TRUE(ch.contains("name"));
    EXPECT_TRUE(ch.contains("details"));
    EXPECT_TRUE(ch["pass"].get<bool>()) << ch.dump();
  }
}

TEST(CliSymbol, DlogOfCoordinates) {
  Config c = make("symbol");
  c.p = 2;
  c.d = 2;
  c.entries = "t1,t2";
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.doc["dlog_text"], "dlog(t1,t2)");
  EXPECT_TRUE(res.doc["logarithmic"].get<bool>());

  // Steinberg: {x, 1-x} has dlog 0
  c.entries = "t1, 1+t1";
  res = run_command(c);
  EXPECT_EQ(res.doc["dlog"]["terms"], Json::array());
}

TEST(CliTame, UniformizerAgainstUnit) {
  Config c = make("tame");
  c.field = "GF(3)(u,t)";
  c.entries = "t,u";
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.doc["residue_field"], "GF(3)(u)");
  EXPECT_EQ(res.doc["tame_text"], "{u}");
  EXPECT_TRUE(res.doc["residue_compatible"].get<bool>());

  // {t, t} = {t, -1}; tame symbol is {-1}
  c.entries = "t,t";
  res = run_command(c);
  EXPECT_EQ(res.doc["tame_text"], "{2}");
}

TEST(CliTame, ZeroEntryRejected) {
  Config c = make("tame");
  c.field = "GF(3)(u,t)";
  c.entries = "t,0";
  EXPECT_THROW(run_command(c), Error);
}

TEST(CliFiltration, LevelTwoUnit) {
  Config c = make("filtration");
  c.field = "GF(2)(u,t)";
  c.x = "1+u*t^2";
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.doc["level"], 2);
  EXPECT_EQ(res.doc["graded"], "u");
  EXPECT_TRUE(res.doc["step3"]["holds"].get<bool>());
  EXPECT_EQ(res.doc["step3"]["lhs"], res.doc["step3"]["rhs"]);

  c.x = "u";
  res = run_command(c);
  EXPECT_EQ(res.doc["level"], 0);
  EXPECT_FALSE(res.doc.contains("step3"));
}

TEST(CliFiltration, BatchIsSeeded) {
  Config c = make("filtration");
  c.p = 3;
  c.samples = 12;
  c.seed = 5;
  auto a = run_command(c), b = run_command(c);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.doc.dump(), b.doc.dump());
  EXPECT_EQ(a.doc["step3"]["checked"], 12);
}

TEST(CliPiece, CaseAOverPrimeField) {
  Config c = make("piece");
  c.piece_case = "a";
  c.p = 3;
  auto res = run_command(c);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_TRUE(res.doc["table"]["perfect"].get<bool>());
  // (i, [a]) pairs to i*a mod 3
  EXPECT_EQ(res.doc["table"]["values"], Json::parse("[[0,0,0],[0,1,2],[0,2,1]]"));
}

TEST(CliTable, DerivedFromJson) {
  Config c = make("dims");
  c.p = 2;
  c.d = 1;
  const std::string t = render_table(run_command(c).doc);
  EXPECT_NE(t.find("r\tdim_omega\tz\tb\tz_minus_b\tz_plus_b_next"), std::string::npos);
  EXPECT_NE(t.find("1\t2\t2\t1\tpass\tpass"), std::string::npos);
}

TEST(CliDeterminism, SameConfigSameBytes) {
  Config c = make("verify");
  c.suite = "finab";
  c.seed = 11;
  EXPECT_EQ(run_command(c).doc.dump(2), run_command(c).doc.dump(2));
}
