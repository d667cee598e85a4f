#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "charp/derham/random.hpp"
#include "charp/kmilnor/symbol.hpp"
#include "charp/kmilnor/valued.hpp"
#include "charp/report.hpp"

namespace charp {

/// drops symbols with an entry 1 and merges repeated symbols
inline SymbolSum simplify(const SymbolSum& s) {
  SymbolSum out(s.field(), s.degree());
  std::vector<std::pair<long long, MilnorSymbol>> acc;
  for (const auto& [n, sym] : s.terms()) {
    bool trivial = false;
    for (const auto& x : sym.entries()) trivial = trivial || x.is_one();
    if (trivial) continue;
    auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return e.second.entries() == sym.entries(); });
    if (it == acc.end())
      acc.emplace_back(n, sym);
    else
      it->first += n;
  }
  for (const auto& [n, sym] : acc) out.add(n, sym);
  return out;
}

/// Tame symbol at t = 0. Each x_i = u_i t^{v_i} is expanded multilinearly.
/// A term with two t slots is rewritten with {t, t} = {t, -1} (the later t
/// becomes -1), then {.., t at slot j, ..} goes to (-1)^j {residues of the rest}.
inline SymbolSum tame_symbol(const ValuedField& V, const MilnorSymbol& s) {
  const int r = s.degree();
  SymbolSum out(V.residue_field(), r > 0 ? r - 1 : 0);
  if (r == 0) return out;
  std::vector<RatFn> units;
  std::vector<std::int64_t> vals;
  for (const auto& x : s.entries()) {
    vals.push_back(V.valuation(x));
    units.push_back(V.unit_part(x));
  }
  const RatFn minus_one = RatFn::from_int(V.field(), -1);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    long long coeff = 1;
    for (int i = 0; i < r; ++i)
      if ((mask >> i) & 1u) coeff *= vals[static_cast<std::size_t>(i)];
    if (coeff == 0) continue;
    int first = -1;
    std::vector<RatFn> rest;
    for (int i = 0; i < r; ++i) {
      if (!((mask >> i) & 1u)) {
        rest.push_back(V.residue(units[static_cast<std::size_t>(i)]));
      } else if (first < 0) {
        first = i;
      } else {
        rest.push_back(V.residue(minus_one));
      }
    }
    out.add(first % 2 ? -coeff : coeff, MilnorSymbol(V.residue_field(), rest));
  }
  return simplify(out);
}

inline SymbolSum tame_symbol(const ValuedField& V, const SymbolSum& s) {
  SymbolSum out(V.residue_field(), s.degree() > 0 ? s.degree() - 1 : 0);
  for (const auto& [n, sym] : s.terms()) out.add(n, tame_symbol(V, sym));
  return out;
}

/// Residue of a form along t = 0: writing w = a dt/t ^ eta + (no dt/t), returns
/// the reduction of a*eta; needs coefficients of valuation >= 0.
inline DiffForm form_residue(const ValuedField& V, const DiffForm& w) {
  const int r = w.degree();
  const auto& k = V.residue_field();
  DiffForm out(k, r > 0 ? r - 1 : 0);
  const Subset T = Subset{1} << V.var();
  for (const auto& [I, a] : w.terms()) {
    if (V.valuation(a) < 0) throw InvalidArgument("form has a pole along t = 0");
    if (!(I & T)) continue;
    Subset J = I & ~T;
    RatFn c = V.residue(a);
    out.add_term(J, subset_size(J) % 2 ? -c : c);
  }
  return out;
}

inline bool residue_compatible(const ValuedField& V, const MilnorSymbol& s) {
  return symbol_dlog_class(tame_symbol(V, s)) == form_residue(V, symbol_dlog_class(s));
}

/// entries are units times t^k for k in [-2, 2]
inline MilnorSymbol random_laurent_symbol(const ValuedField& V, int r, Rng& rng) {
  const auto& K = V.field();
  std::vector<RatFn> entries;
  for (int i = 0; i < r; ++i) {
    RatFn x(K);
    while (x.is_zero()) x = RatFn(K, random_poly(*K, rng, {3, 2}));
    entries.push_back(x * V.uniformizer().pow(rng.range(-2, 2)));
  }
  return MilnorSymbol(K, entries);
}

inline SampleReport residue_compatibility_check(const ValuedField& V, int r, int samples, std::uint64_t seed) {
  Rng rng(seed);
  SampleReport rep;
  for (int i = 0; i < samples; ++i) {
    MilnorSymbol s = random_laurent_symbol(V, r, rng);
    ++rep.samples;
    if (residue_compatible(V, s))
      ++rep.passed;
    else if (!rep.first_failure)
      rep.first_failure = symbol_text(s);
  }
  return rep;
}

}  // namespace charp
