#pragma once
// The subcommands as functions of a Config. Each returns the JSON document and an exit code.

#include <sstream>
#include <string>

#include "charp/cli/config.hpp"
#include "charp/verify/suites.hpp"

namespace charp::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  Json doc;
  int exit_code = 0;
};

namespace detail {

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

inline std::uint32_t prime_p(const Config& c) {
  const int p = c.p.value_or(2);
  if (p < 2 || !GaloisField::is_prime(static_cast<std::uint32_t>(p)))
    throw UsageError("--p must be a prime, got " + std::to_string(p));
  return static_cast<std::uint32_t>(p);
}

inline int small_d(const Config& c, int dflt) {
  const int d = c.d.value_or(dflt);
  if (d < 0) throw UsageError("--d must be non-negative");
  if (d > 4) throw BudgetExceeded("d = " + std::to_string(d) + " exceeds the limit 4");
  return d;
}

inline RatFieldPtr field_of(const Config& c, int default_d) {
  if (c.field) return parse_field(*c.field);
  return RatField::standard(prime_p(c), small_d(c, default_d));
}

inline Json certificate_json(const GramCertificate& g) {
  return {{"rank", g.rank}, {"left_nondegenerate", g.left_nondeg}, {"right_nondegenerate", g.right_nondeg},
          {"perfect", g.perfect}};
}

}  // namespace detail

inline CommandResult cmd_dims(const Config& c) {
  const std::uint32_t p = detail::prime_p(c);
  const int d = detail::small_d(c, 1);
  DeRhamComplex C(RatField::standard(p, d));
  const std::size_t pd = pmon_count(p, d);
  Json rows = Json::array();
  bool all = true;
  for (int r = 0; r <= d; ++r) {
    const std::size_t z = C.Z(r).dim(), b = C.B(r).dim(), dim = C.grid(r).size(), cdr = binomial(d, r);
    const bool diff_ok = z - b == cdr && dim == pd * cdr;
    const bool sum_ok = z + C.B(r + 1).dim() == pd * cdr;
    all = all && diff_ok && sum_ok;
    rows.push_back({{"r", r}, {"dim_omega", dim}, {"z", z}, {"b", b}, {"z_minus_b", diff_ok ? "pass" : "fail"},
                    {"z_plus_b_next", sum_ok ? "pass" : "fail"}});
  }
  return {{{"command", "dims"}, {"p", p}, {"d", d}, {"rows", rows}}, all ? 0 : 1};
}

inline CommandResult cmd_gram(const Config& c) {
  const GramKind k = parse_gram_kind(detail::require(c.which, "which"));
  const int r = detail::require(c.r, "r");
  auto K = detail::field_of(c, 1);
  if (r < 0 || r > K->d()) throw UsageError("--r must lie in 0.." + std::to_string(K->d()));
  DeRhamComplex C(K);
  GramMatrix g = gram(C, k, r);
  GramCertificate cert = certify(g);
  return {{{"command", "gram"}, {"field", K->descriptor()}, {"gram", io::to_json(g)},
           {"certificate", detail::certificate_json(cert)}},
          cert.perfect ? 0 : 1};
}

inline CommandResult cmd_verify(const Config& c) {
  const std::string s = c.suite.value_or("all");
  if (!verify::is_suite(s)) throw UsageError("unknown suite '" + s + "'");
  verify::SuiteReport rep = verify::run_suite(s, c.seed.value_or(1));
  return {rep.json(), rep.ok() ? 0 : 1};
}

inline CommandResult cmd_symbol(const Config& c) {
  auto K = detail::field_of(c, 1);
  MilnorSymbol s(K, io::parse_entries(K, detail::require(c.entries, "entries")));
  DeRhamComplex C(K);
  DiffForm w = symbol_dlog_class(s);
  Json e = Json::array();
  for (const auto& x : s.entries()) e.push_back(to_text(x));
  const bool log = C.is_closed(w) && C.is_logarithmic(w);
  return {{{"command", "symbol"}, {"field", K->descriptor()}, {"entries", e}, {"dlog", io::to_json(w)},
           {"dlog_text", form_text(w)}, {"logarithmic", log}},
          log ? 0 : 1};
}

inline CommandResult cmd_tame(const Config& c) {
  auto K = detail::field_of(c, 2);
  ValuedField V(K);
  MilnorSymbol s(K, io::parse_entries(K, detail::require(c.entries, "entries")));
  SymbolSum t = tame_symbol(V, s);
  const bool compat = residue_compatible(V, s);
  return {{{"command", "tame"}, {"field", K->descriptor()}, {"residue_field", V.residue_field()->descriptor()},
           {"symbol", symbol_text(s)}, {"tame", io::to_json(t)}, {"tame_text", symbol_sum_text(t)},
           {"residue_compatible", compat}},
          compat ? 0 : 1};
}

/// without --x: the step-3 identity on --samples seeded units 1 + a t^n, n in {2, 3}
inline CommandResult cmd_filtration_batch(const Config& c) {
  auto K = c.field ? parse_field(*c.field) : RatField::make(GaloisField::make(detail::prime_p(c)), {"u", "t"});
  ValuedField V(K);
  const int samples = c.samples.value_or(50);
  if (samples < 1) throw UsageError("--samples must be positive");
  Rng rng(c.seed.value_or(1));
  verify::Tally t;
  for (int i = 0; i < samples; ++i) {
    const std::int64_t n = rng.range(2, 3);
    RatFn u = RatFn::from_int(K, 1) + verify::detail::random_unit(V, rng) * V.uniformizer().pow(n);
    t.add(unit_step3(V, u, V.uniformizer()).holds(), to_text(u));
  }
  return {{{"command", "filtration"}, {"field", K->descriptor()}, {"seed", c.seed.value_or(1)},
           {"step3", t.json()}},
          t.ok() ? 0 : 1};
}

inline CommandResult cmd_filtration(const Config& c) {
  if (!c.x) return cmd_filtration_batch(c);
  auto K = detail::field_of(c, 2);
  ValuedField V(K);
  RatFn x = parse_element(K, detail::require(c.x, "x"));
  if (x.is_zero()) throw UsageError("--x must be nonzero");
  RatFn pi = c.pi ? parse_element(K, *c.pi) : V.uniformizer();
  const std::int64_t level = unit_filtration_level(V, x);
  Json doc = {{"command", "filtration"}, {"field", K->descriptor()}, {"x", to_text(x)}, {"pi", to_text(pi)}};
  if (level == RatFn::kInfiniteValuation)
    doc["level"] = "infinity";
  else
    doc["level"] = level;
  int code = 0;
  if (level >= 1 && level != RatFn::kInfiniteValuation)
    doc["graded"] = to_text(graded_unit_map(V, x, level));
  if (level >= 2) {
    Step3Data s = unit_step3(V, x, pi);
    doc["step3"] = {{"n", s.n == RatFn::kInfiniteValuation ? Json("infinity") : Json(s.n)},
                    {"lhs", form_text(s.lhs)},
                    {"rhs", form_text(s.rhs)},
                    {"holds", s.holds()}};
    code = s.holds() ? 0 : 1;
  }
  return {doc, code};
}

inline CommandResult cmd_piece(const Config& c) {
  const PieceCase w = parse_piece_case(detail::require(c.piece_case, "case"));
  auto k = detail::field_of(c, 0);
  const int r = c.r.value_or(1), q = c.q.value_or(k->d() + 2 - r);
  // case d takes its scalar a from --x, default 1
  std::optional<RatFn> a;
  if (w == PieceCase::D) a = c.x ? parse_element(k, *c.x) : RatFn::from_int(k, 1);
  GradedPiecePairing g = graded_piece(w, k, r, q, a);
  Json doc = {{"command", "piece"}, {"case", piece_case_name(w)}, {"field", k->descriptor()}, {"r", r}, {"q", q},
              {"left", g.left_desc}, {"right", g.right_desc}};
  int code = 0;
  if (w == PieceCase::A && k->d() == 0) {
    FinitePieceTable t = case_a_finite_table(k);
    doc["table"] = {{"p", t.p}, {"left", t.left}, {"right", t.right}, {"values", t.values}, {"perfect", t.perfect()}};
    code = t.perfect() ? 0 : 1;
  }
  return {doc, code};
}

inline CommandResult run_command(const Config& c) {
  if (c.command == "dims") return cmd_dims(c);
  if (c.command == "gram") return cmd_gram(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "symbol") return cmd_symbol(c);
  if (c.command == "tame") return cmd_tame(c);
  if (c.command == "filtration") return cmd_filtration(c);
  if (c.command == "piece") return cmd_piece(c);
  throw UsageError("unknown command '" + c.command + "'");
}

namespace detail {

inline std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

/// plain-text rendering of a command document
inline std::string render_table(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("checks")) {
    os << "suite " << detail::cell(doc["suite"]) << " seed " << detail::cell(doc["seed"]) << "\n";
    for (const auto& c : doc["checks"])
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "  " << c["details"].dump()
         << "\n";
    return os.str();
  }
  for (const auto& [k, v] : doc.items()) {
    if (k == "rows" && v.is_array() && !v.empty() && v[0].is_object()) {
      for (const auto& [col, _] : v[0].items()) os << col << "\t";
      os << "\n";
      for (const auto& row : v) {
        for (const auto& [col, x] : row.items()) os << detail::cell(x) << "\t";
        os << "\n";
      }
    } else if (k == "gram") {
      os << "rows: " << v["rows"].dump() << "\ncols: " << v["cols"].dump() << "\n";
      for (const auto& row : v["entries"]) {
        for (const auto& x : row) os << detail::cell(x) << "\t";
        os << "\n";
      }
    } else {
      os << k << ": " << detail::cell(v) << "\n";
    }
  }
  return os.str();
}

}  // namespace charp::cli
