// Acceptance run: one PASS/FAIL line per criterion.
// usage: charp-acceptance <path to charp> [seed]

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "charp/verify/suites.hpp"

using namespace charp;
using namespace charp::verify;

namespace {

struct Criterion {
  int id;
  std::optional<double> limit_s;  // wall-clock limit, when one is pinned
  std::function<Check()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Captured {
  std::string out;
  int status = -1;
  double seconds = 0;
};

Captured capture(const std::string& cmd) {
  Captured c;
  auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int st = pclose(pipe);
  c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  c.seconds = seconds_since(t0);
  return c;
}

bool report(int id, const Check& c, double secs, std::optional<double> limit) {
  const bool in_time = !limit || secs < *limit;
  const bool ok = c.pass && in_time;
  std::printf("%s %2d  %-48s %7.2f s", ok ? "PASS" : "FAIL", id, c.name.c_str(), secs);
  if (limit) std::printf(" (limit %.0f s)", *limit);
  std::printf("\n");
  if (!c.pass) std::printf("        %s\n", c.details.dump().c_str());
  if (!in_time) std::printf("        over the time limit\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <path to charp> [seed]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 1;

  const std::vector<Criterion> criteria{
      {1, 5.0, [] { return dimension_identities(); }},
      {2, 30.0, [] { return gram_perfectness(); }},
      {3, std::nullopt, [&] { return cartier_round_trips(seed); }},
      {4, std::nullopt, [&] { return logarithmic_calculus(seed); }},
      {5, std::nullopt, [&] { return cartier_wedge_identities(seed); }},
      {6, std::nullopt, [&] { return linear_pairing_criterion(seed); }},
      {7, 1.0, [] { return artin_schreier_bottom(); }},
      {8, std::nullopt, [&] { return step3_identity(seed); }},
      {9, std::nullopt, [&] { return tame_symbols(seed); }},
      {10, 60.0, [&] { return finab_propagation(seed); }},
      {11, std::nullopt, [&] { return cone_pairings(seed); }},
      {12, 60.0, [&] { return group_cohomology(seed); }},
      {13, std::nullopt, [&] { return completion(seed); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check res = c.run();
    failed += !report(c.id, res, seconds_since(t0), c.limit_s);
  }

  // 14: the full CLI run, twice, byte-identical and each under two minutes
  {
    const std::string cmd = "'" + cli + "' verify --suite all --seed " + std::to_string(seed);
    Captured a = capture(cmd), b = capture(cmd);
    Check c{"verify --suite all: time and determinism"};
    c.pass = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    c.details = {{"exit_codes", {a.status, b.status}}, {"identical", a.out == b.out}, {"bytes", a.out.size()},
                 {"seconds", {a.seconds, b.seconds}}};
    failed += !report(14, c, std::max(a.seconds, b.seconds), 120.0);
  }

  std::printf("%d of 14 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
