#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "charp/cli/commands.hpp"

using namespace charp;
using namespace charp::cli;

namespace {

struct Flags {
  Config c;
  std::string field, which, piece_case, suite, entries, x, pi, out;
  int p = 0, d = 0, r = 0, q = 0, samples = 0;
  std::uint64_t seed = 1;
};

// registers the shared flags on a subcommand; only the ones given on the command line end up in the Config
void add_flags(CLI::App* sub, Flags& f, const std::string& which) {
  auto has = [&](char k) { return which.find(k) != std::string::npos; };
  if (has('F')) sub->add_option("--field", f.field, "field descriptor, e.g. GF(2)(u,t)");
  if (has('p')) sub->add_option("--p", f.p, "characteristic (prime)");
  if (has('d')) sub->add_option("--d", f.d, "number of p-basis variables t1..td (at most 4)");
  if (has('r')) sub->add_option("--r", f.r, "form degree");
  if (has('q')) sub->add_option("--q", f.q, "second degree of a graded piece");
  if (has('w')) sub->add_option("--which", f.which, "phi1, pi_phi1 (or piphi1), phi2, phi3");
  if (has('c')) sub->add_option("--case", f.piece_case, "graded piece case a..e");
  if (has('s')) sub->add_option("--suite", f.suite, "all, derham, duality, kmilnor, finab, complexes or gcoh");
  if (has('S')) sub->add_option("--seed", f.seed, "random seed");
  if (has('n')) sub->add_option("--samples", f.samples, "sample count");
  if (has('e')) sub->add_option("--entries", f.entries, "symbol entries, comma separated");
  if (has('x')) sub->add_option("--x", f.x, "element text");
  if (has('u')) sub->add_option("--pi", f.pi, "uniformizer (default: the last variable)");
  sub->add_option("--out", f.out, "write the output to this file");
  sub->add_option("--format", f.c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

Config collect(CLI::App* sub, Flags& f) {
  Config c = f.c;
  c.command = sub->get_name();
  auto given = [&](const char* name) {
    try {
      return sub->get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  if (given("--field")) c.field = f.field;
  if (given("--p")) c.p = f.p;
  if (given("--d")) c.d = f.d;
  if (given("--r")) c.r = f.r;
  if (given("--q")) c.q = f.q;
  if (given("--which")) c.which = f.which;
  if (given("--case")) c.piece_case = f.piece_case;
  if (given("--suite")) c.suite = f.suite;
  if (given("--seed")) c.seed = f.seed;
  if (given("--samples")) c.samples = f.samples;
  if (given("--entries")) c.entries = f.entries;
  if (given("--x")) c.x = f.x;
  if (given("--pi")) c.pi = f.pi;
  if (given("--out")) c.out = f.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charp: exact computations with differential forms, symbols and finite duality.\n"
               "Exit codes: 0 success, 1 check failure, 2 usage error. CHARP_BUDGET overrides the cochain cost guard."};
  app.require_subcommand(1);
  Flags f;
  std::vector<CLI::App*> subs{
      app.add_subcommand("dims", "ranks of Omega^r, Z^r, B^r over F_p(t1..td)"),
      app.add_subcommand("gram", "Gram matrix of a wedge pairing; exit 0 iff perfect"),
      app.add_subcommand("verify", "run verification suites, JSON report"),
      app.add_subcommand("symbol", "dlog form of a symbol {x1, ..., xr}"),
      app.add_subcommand("tame", "tame symbol at t = 0 (t is the last variable)"),
      app.add_subcommand("filtration", "unit level of --x and the symbol identity; without --x, a seeded batch"),
      app.add_subcommand("piece", "graded piece pairing; case a over a finite field is tabulated"),
  };
  add_flags(subs[0], f, "pd");
  add_flags(subs[1], f, "Fpdrw");
  add_flags(subs[2], f, "sS");
  add_flags(subs[3], f, "Fpde");
  add_flags(subs[4], f, "Fpde");
  add_flags(subs[5], f, "FpdxunS");
  add_flags(subs[6], f, "Fpdrqcx");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  CLI::App* sub = nullptr;
  for (auto* s : subs)
    if (s->parsed()) sub = s;
  Config c = collect(sub, f);

  CommandResult res;
  try {
    res = run_command(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = c.format == "table" ? render_table(res.doc) : res.doc.dump(2) + "\n";
  if (c.out) {
    std::ofstream os(*c.out);
    if (!os) {
      std::cerr << "cannot write " << *c.out << "\n";
      return 2;
    }
    os << text;
  } else {
    std::cout << text;
  }
  return res.exit_code;
}
