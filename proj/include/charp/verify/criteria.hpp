#pragma once
// The acceptance checks. Each returns one Check; details carry the counts.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "charp/complexes/random.hpp"
#include "charp/derham/random.hpp"
#include "charp/duality/diagrams.hpp"
#include "charp/duality/graded.hpp"
#include "charp/duality/gram.hpp"
#include "charp/duality/linear_pairing.hpp"
#include "charp/finab/filtration.hpp"
#include "charp/finab/four_lemma.hpp"
#include "charp/finab/topology.hpp"
#include "charp/gcoh/battery.hpp"
#include "charp/gcoh/trace.hpp"
#include "charp/io/serialize.hpp"
#include "charp/kmilnor/filtration.hpp"
#include "charp/kmilnor/tame.hpp"

namespace charp::verify {

using io::Json;

struct Check {
  std::string name;
  bool pass = false;
  Json details = Json::object();
};

/// counts checked/failed items and remembers the first failure
struct Tally {
  long long checked = 0, failed = 0;
  std::string first;
  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  bool ok() const { return failed == 0 && checked > 0; }
  Json json() const {
    Json j = {{"checked", checked}, {"failed", failed}};
    if (failed) j["first_failure"] = first;
    return j;
  }
};

inline Check run_check(const std::string& name, const std::function<void(Check&)>& body) {
  Check c{name};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.details["error"] = e.what();
  }
  return c;
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) { return seed * 1000003ULL + tag; }

struct PD {
  std::uint32_t p;
  int d;
};

inline const std::vector<PD>& dims_grid() {
  static const std::vector<PD> g{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}};
  return g;
}

inline std::string pdr(std::uint32_t p, int d, int r) {
  return "p=" + std::to_string(p) + " d=" + std::to_string(d) + " r=" + std::to_string(r);
}

// 1

inline Check dimension_identities() {
  return run_check("dimension identities", [](Check& c) {
    Tally t;
    for (auto [p, d] : dims_grid()) {
      DeRhamComplex C(RatField::standard(p, d));
      const std::size_t pd = pmon_count(p, d);
      for (int r = 0; r <= d; ++r) {
        const std::size_t z = C.Z(r).dim(), b = C.B(r).dim(), cdr = binomial(d, r);
        t.add(z - b == cdr, pdr(p, d, r) + ": z - b");
        t.add(z + C.B(r + 1).dim() == pd * cdr, pdr(p, d, r) + ": z + b_{r+1}");
        t.add(z + C.B(d - r).dim() == pd * cdr, pdr(p, d, r) + ": z + b_{d-r}");
      }
    }
    DeRhamComplex C22(RatField::standard(2, 2));
    std::vector<std::size_t> z{C22.Z(0).dim(), C22.Z(1).dim(), C22.Z(2).dim()}, b{C22.B(1).dim(), C22.B(2).dim()};
    t.add(z == std::vector<std::size_t>{1, 5, 4} && b == std::vector<std::size_t>{3, 3}, "(2,2) table");
    c.details = t.json();
    c.details["z_22"] = z;
    c.details["b_22"] = b;
    c.pass = t.ok();
  });
}

// 2

inline Check gram_perfectness() {
  return run_check("gram matrices perfect", [](Check& c) {
    Tally t;
    for (auto [p, d] : dims_grid()) {
      DeRhamComplex C(RatField::standard(p, d));
      for (int r = 0; r <= d; ++r)
        for (GramKind k : {GramKind::PiPhi1, GramKind::Phi2, GramKind::Phi3}) {
          GramMatrix g = gram(C, k, r);
          t.add(g.rows.size() == g.cols.size() && certify(g).perfect, pdr(p, d, r) + " " + gram_kind_name(k));
        }
    }
    c.details = t.json();
    c.pass = t.ok();
  });
}

// 3

inline Check cartier_round_trips(std::uint64_t seed, int samples = 100) {
  return run_check("cartier round trips", [=](Check& c) {
    Tally inv, fwd;
    for (auto [p, d] : dims_grid()) {
      auto K = RatField::standard(p, d);
      DeRhamComplex C(K);
      Rng rng(sub_seed(seed, 300 + 10 * p + static_cast<unsigned>(d)));
      for (int i = 0; i < samples; ++i) {
        const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
        DiffForm w = random_form(K, r, rng);
        inv.add(C.cartier_of_class(C.inverse_cartier(w)) == w, pdr(p, d, r) + ": " + form_text(w));
        DiffForm z = random_closed_form(K, r, rng);
        fwd.add(C.inverse_cartier(C.cartier(z)) == C.project(z), pdr(p, d, r) + ": " + form_text(z));
      }
    }
    c.details = {{"C_after_Cinv", inv.json()}, {"Cinv_after_C", fwd.json()}};
    c.pass = inv.ok() && fwd.ok();
  });
}

// 4

inline Check logarithmic_calculus(std::uint64_t seed) {
  return run_check("logarithmic calculus", [=](Check& c) {
    Tally stein, logs;
    const std::vector<PD> high{{2, 2}, {3, 2}, {2, 3}};
    Rng rng(sub_seed(seed, 400));
    for (int i = 0; stein.checked < 200; ++i) {
      auto K = RatField::standard(high[i % 3].p, high[i % 3].d);
      RatFn x = random_nonzero_ratfn(K, rng);
      if (x.is_one()) continue;
      stein.add(dlog(K, {x, RatFn::from_int(K, 1) - x}).is_zero(), to_text(x));
    }
    for (int i = 0; i < 100; ++i) {
      auto [p, d] = dims_grid()[static_cast<std::size_t>(i) % dims_grid().size()];
      auto K = RatField::standard(p, d);
      DeRhamComplex C(K);
      const int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
      DiffForm w = dlog(K, random_symbol_entries(K, r, rng));
      logs.add(C.is_logarithmic(w), pdr(p, d, r) + ": " + form_text(w));
    }
    auto K = RatField::standard(2, 1);
    DeRhamComplex C(K);
    const bool planted_rejected = !C.is_logarithmic(exterior_d(DiffForm::function(RatFn::var(K, 0))));
    c.details = {{"steinberg", stein.json()}, {"symbols_logarithmic", logs.json()}, {"dt_rejected", planted_rejected}};
    c.pass = stein.ok() && logs.ok() && planted_rejected;
  });
}

// 5

inline Check cartier_wedge_identities(std::uint64_t seed) {
  return run_check("cartier and projection wedge identities", [=](Check& c) {
    Tally t;
    Json per = Json::array();
    for (auto [p, d] : std::vector<PD>{{2, 2}, {3, 1}}) {
      DeRhamComplex C(RatField::standard(p, d));
      const std::size_t each = (100 + static_cast<std::size_t>(d)) / static_cast<std::size_t>(d + 1);
      std::size_t pairs = 0;
      for (int r = 0; r <= d; ++r) {
        DiagramReport rep = cartier_diagram_check(C, r, each, sub_seed(seed, 500 + 10 * p + static_cast<unsigned>(r)));
        for (const auto& id : rep.identities) t.add(id.ok(), pdr(p, d, r) + ": " + id.name);
        pairs += rep.identities.front().checked;
      }
      per.push_back({{"p", p}, {"d", d}, {"pairs", pairs}});
      t.add(pairs >= 100, pdr(p, d, 0) + ": fewer than 100 pairs");
    }
    c.details = t.json();
    c.details["configs"] = per;
    c.pass = t.ok();
  });
}

// 6

inline Check linear_pairing_criterion(std::uint64_t seed) {
  return run_check("linear pairing criterion", [=](Check& c) {
    Tally pos, neg;
    const std::vector<PD> fields{{2, 1}, {3, 1}, {2, 2}};
    Rng rng(sub_seed(seed, 600));
    int drawn = 0;
    while (pos.checked < 20) {
      auto [p, d] = fields[static_cast<std::size_t>(drawn++) % fields.size()];
      auto K = RatField::standard(p, d);
      const std::size_t n = 1 + rng.below(4);
      Matrix<RatFn> phi(n, std::vector<RatFn>(n, RatFn(K)));
      for (auto& row : phi)
        for (auto& x : row) x = random_ratfn(K, rng, {2, 2});
      LinearPairingReport rep = linear_pairing_check({K, phi});
      if (!rep.phi_nondegenerate) continue;
      pos.add(rep.joint_nondegenerate && rep.left.equal && rep.right.equal, pdr(p, d, static_cast<int>(n)));
    }
    for (int s = 0; s < 10; ++s) {
      auto [p, d] = fields[static_cast<std::size_t>(s) % fields.size()];
      auto K = RatField::standard(p, d);
      const std::size_t L = 2 + rng.below(3), R = 1 + rng.below(4);
      Matrix<RatFn> phi(L, std::vector<RatFn>(R, RatFn(K)));
      for (auto& row : phi)
        for (auto& x : row) x = random_ratfn(K, rng, {2, 2});
      RatFn a = random_nonzero_ratfn(K, rng, {2, 2});
      for (std::size_t j = 0; j < R; ++j) phi[L - 1][j] = a * phi[0][j];
      LinearPairingReport rep = linear_pairing_check({K, phi});
      neg.add(rep.left.kernel_dim_k >= 1 && !rep.joint_nondegenerate && rep.left.equal && rep.right.equal,
              pdr(p, d, static_cast<int>(L)));
    }
    c.details = {{"nondegenerate", pos.json()}, {"planted_kernel", neg.json()}};
    c.pass = pos.ok() && neg.ok();
  });
}

// 7

inline Check artin_schreier_bottom() {
  return run_check("artin-schreier pairing over finite fields", [](Check& c) {
    Tally t;
    Json sizes = Json::array();
    for (std::uint32_t q : {2u, 3u, 4u}) {
      auto k = RatField::standard(q, 0);
      const auto& F = k->gf();
      std::set<GaloisField::Code> image;
      for (GaloisField::Code x = 0; x < F.q(); ++x) image.insert(F.sub(F.frobenius(x), x));
      const std::size_t coker = F.q() / image.size();
      t.add(coker * image.size() == F.q() && coker == F.p(), "q=" + std::to_string(q) + ": |F_q / P|");
      FinitePieceTable tab = case_a_finite_table(k);
      t.add(tab.perfect() && tab.left.size() == F.p() && tab.right.size() == F.p(),
            "q=" + std::to_string(q) + ": pairing");
      sizes.push_back({{"q", q}, {"cokernel", coker}});
    }
    c.details = t.json();
    c.details["cokernels"] = sizes;
    c.pass = t.ok();
  });
}

namespace detail {

inline RatFn random_unit(const ValuedField& V, Rng& rng) {
  for (;;) {
    RatFn x = random_nonzero_ratfn(V.field(), rng, {3, 2});
    if (V.valuation(x) == 0) return x;
  }
}

// (-1)^{ab} y^a / x^b reduced, a = v(x), b = v(y)
inline RatFn classical_tame2(const ValuedField& V, const RatFn& x, const RatFn& y) {
  const std::int64_t a = V.valuation(x), b = V.valuation(y);
  RatFn c = y.pow(a) / x.pow(b);
  if ((a * b) % 2) c = -c;
  return V.residue(c);
}

}  // namespace detail

// 8

inline Check step3_identity(std::uint64_t seed) {
  return run_check("unit filtration symbol identity", [=](Check& c) {
    Tally t;
    for (std::uint32_t q : {2u, 3u}) {
      auto K = RatField::make(GaloisField::make(q), {"u", "t"});
      ValuedField V(K);
      Rng rng(sub_seed(seed, 800 + q));
      for (int i = 0; i < 50; ++i) {
        const std::int64_t n = rng.range(2, 3);
        RatFn a = detail::random_unit(V, rng);
        RatFn pi = V.uniformizer();
        if (rng.coin()) pi = pi * detail::random_unit(V, rng);
        RatFn u = RatFn::from_int(K, 1) + a * pi.pow(n);
        Step3Data s = unit_step3(V, u, pi);
        t.add(s.n == n && s.holds(), K->descriptor() + ": " + to_text(u) + " / " + to_text(pi));
      }
    }
    c.details = t.json();
    c.pass = t.ok();
  });
}

// 9

inline Check tame_symbols(std::uint64_t seed) {
  return run_check("tame symbol", [=](Check& c) {
    Tally rule, classical, additive, units, residue;
    for (std::uint32_t q : {2u, 3u}) {
      auto K = RatField::make(GaloisField::make(q), {"u", "t"});
      ValuedField V(K);
      const auto& k = V.residue_field();
      Rng rng(sub_seed(seed, 900 + q));
      for (int i = 0; i < 50; ++i) {
        RatFn w = detail::random_unit(V, rng);
        SymbolSum got = tame_symbol(V, MilnorSymbol(K, {V.uniformizer(), w}));
        rule.add(equal_mod_p(got, SymbolSum(MilnorSymbol(k, {V.residue(w)}))), to_text(w));
      }
      for (int i = 0; i < 25; ++i) {
        MilnorSymbol s = random_laurent_symbol(V, 2, rng);
        RatFn cl = detail::classical_tame2(V, s.entries()[0], s.entries()[1]);
        classical.add(equal_mod_p(tame_symbol(V, s), SymbolSum(MilnorSymbol(k, {cl}))), symbol_text(s));
      }
      for (int i = 0; i < 15; ++i) {
        MilnorSymbol a = random_laurent_symbol(V, 2, rng), b = random_laurent_symbol(V, 2, rng);
        SymbolSum s(a);
        s.add(2, b);
        SymbolSum expect = tame_symbol(V, a);
        expect.add(2, tame_symbol(V, b));
        additive.add(equal_mod_p(tame_symbol(V, s), expect), symbol_text(a) + " + 2 " + symbol_text(b));
        MilnorSymbol pure(K, {detail::random_unit(V, rng), detail::random_unit(V, rng)});
        units.add(tame_symbol(V, pure).terms().empty(), symbol_text(pure));
      }
    }
    auto K = RatField::make(GaloisField::make(2), {"u", "t"});
    SampleReport rc = residue_compatibility_check(ValuedField(K), 2, 50, sub_seed(seed, 990));
    residue.checked = rc.samples;
    residue.failed = rc.samples - rc.passed;
    residue.first = rc.first_failure.value_or("");
    c.details = {{"t_w_rule", rule.json()}, {"classical_degree_two", classical.json()},
                 {"additive", additive.json()}, {"units_vanish", units.json()},
                 {"residue_compatibility", residue.json()}};
    c.pass = rule.ok() && classical.ok() && additive.ok() && units.ok() && residue.ok() && rc.samples == 50;
  });
}

namespace detail {

inline std::set<Elem> enum_kernel(const FinHom& f) {
  std::set<Elem> out;
  for (const auto& x : f.domain().elements())
    if (f.codomain().is_zero(f(x))) out.insert(x);
  return out;
}

inline std::set<Elem> enum_image(const FinHom& f) {
  std::set<Elem> out;
  for (const auto& x : f.domain().elements()) out.insert(f(x));
  return out;
}

inline bool enum_left_nondeg(const FinPairing& phi) {
  for (const auto& a : phi.left().elements()) {
    if (phi.left().is_zero(a)) continue;
    bool z = true;
    for (const auto& b : phi.right().elements()) z = z && phi(a, b).is_zero();
    if (z) return false;
  }
  return true;
}

inline bool enum_right_nondeg(const FinPairing& phi) {
  for (const auto& b : phi.right().elements()) {
    if (phi.right().is_zero(b)) continue;
    bool z = true;
    for (const auto& a : phi.left().elements()) z = z && phi(a, b).is_zero();
    if (z) return false;
  }
  return true;
}

/// A_i by repeated multiplication by m, B_{i-1} = annihilator of A_i
inline std::pair<std::vector<Subgroup>, std::vector<Subgroup>> multiple_filtration(const FinPairing& phi,
                                                                                   long long m) {
  const FinAb& G = phi.left();
  std::vector<Subgroup> Af{Subgroup::whole(G)}, Bf;
  Subgroup cur = Subgroup::whole(G);
  while (!cur.is_trivial()) {
    std::vector<Elem> g;
    for (const auto& x : cur.generators()) g.push_back(G.scale(m, x));
    Subgroup next(G, g);
    if (next == cur) next = Subgroup::trivial(G);
    Af.push_back(next);
    cur = next;
  }
  for (std::size_t i = 1; i < Af.size(); ++i) {
    std::vector<Elem> gens;
    for (const auto& b : phi.right().elements()) {
      bool z = true;
      for (const auto& a : Af[i].generators()) z = z && phi(a, b).is_zero();
      if (z) gens.push_back(b);
    }
    Bf.push_back(Subgroup(phi.right(), gens));
  }
  return {Af, Bf};
}

}  // namespace detail

// 10

inline Check finab_propagation(std::uint64_t seed) {
  return run_check("four lemma, exact dualization and filtrations", [=](Check& c) {
    Tally ladders, exact, filt, planted;
    Rng rng(sub_seed(seed, 1000));
    for (int i = 0; i < 200; ++i) {
      PairingLadder L = random_ladder(rng, 16);
      FourLemmaReport r = four_lemma_check(L);
      const bool bf_right = detail::enum_right_nondeg(L.phi[1]), bf_left = detail::enum_left_nondeg(L.phi[2]);
      ladders.add(r.right.hypotheses && r.left.hypotheses && r.right.conclusion && r.left.conclusion &&
                      r.right.conclusion == bf_right && r.left.conclusion == bf_left,
                  "ladder " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      ExactTriple t = random_exact_triple(rng, 32);
      exact.add(is_exact_at(t.f, t.g) && exact_dualization_check(t.f, t.g) &&
                    detail::enum_image(dual_hom(t.g)) == detail::enum_kernel(dual_hom(t.f)),
                "sequence " + std::to_string(i));
    }
    for (int i = 0; i < 40; ++i) {
      FinAb G = random_group(rng, 64);
      const long long m = rng.range(2, 3);
      FinPairing phi = FinPairing::evaluation(G);
      const bool plant = i % 2 == 1 && G.exponent() % m == 0;
      if (plant) phi = phi.scaled(m);
      auto [Af, Bf] = detail::multiple_filtration(phi, m);
      FiltrationReport r = filtration_propagation_check(phi, Af, Bf);
      const bool bl = detail::enum_left_nondeg(phi), br = detail::enum_right_nondeg(phi);
      const bool agrees = r.consistent() && r.direct_left == bl && r.direct_right == br;
      if (plant)
        planted.add(agrees && !r.graded_all_nondegenerate && r.failing_level.has_value() && !bl,
                    "planted " + std::to_string(i));
      else
        filt.add(agrees && r.graded_all_nondegenerate, "filtration " + std::to_string(i));
    }
    c.details = {{"ladders", ladders.json()},
                 {"exact_sequences", exact.json()},
                 {"filtrations", filt.json()},
                 {"planted_failures", planted.json()}};
    c.pass = ladders.ok() && exact.ok() && filt.ok() && planted.ok();
  });
}

// 11

inline Check cone_pairings(std::uint64_t seed) {
  return run_check("cone pairings", [=](Check& c) {
    Tally chain, squares, reps, enumerated;
    Rng rng(sub_seed(seed, 1100));
    for (int t = 0; t < 100; ++t) {
      PairingMorphism m = random_morphism(rng);
      ConePairing cp = cone_pairing(m);
      chain.add(cp.pairing.is_chain_pairing(), "morphism " + std::to_string(t));
      squares.add(cone_squares(m, cp).ok(), "morphism " + std::to_string(t));
      for (int i = cp.pairing.M.lo(); i <= cp.pairing.M.hi(); ++i)
        reps.add(representative_failures(cp.pairing, i, -i, 10, sub_seed(seed, 7 * t + i)) == 0,
                 "morphism " + std::to_string(t) + " degree " + std::to_string(i));
    }
    for (int t = 0; t < 100; ++t) {
      ChainPairing P = cone_pairing(random_morphism(rng)).pairing;
      for (int i = P.M.lo(); i <= P.M.hi(); ++i) {
        const FinAb X = P.M.group(i), Y = P.N.group(-i);
        if (X.order() * Y.order() > 256) continue;
        std::vector<Elem> zx, zy;
        std::set<Elem> bx, by;
        for (const auto& x : X.elements())
          if (P.M.group(i + 1).is_zero(P.M.diff(i)(x))) zx.push_back(x);
        for (const auto& y : Y.elements())
          if (P.N.group(1 - i).is_zero(P.N.diff(-i)(y))) zy.push_back(y);
        for (const auto& x : P.M.group(i - 1).elements()) bx.insert(P.M.diff(i - 1)(x));
        for (const auto& y : P.N.group(-i - 1).elements()) by.insert(P.N.diff(-i - 1)(y));
        CohomologyPairing h = cohomology_bilinear(P, i, -i);
        bool ok = h.Hi.group.order() * static_cast<long long>(bx.size()) == static_cast<long long>(zx.size()) &&
                  h.Hj.group.order() * static_cast<long long>(by.size()) == static_cast<long long>(zy.size());
        for (const auto& x : zx)
          for (const auto& y : zy)
            ok = ok && h.Heta.coords(P(i, -i, x, y)) == h.values(h.Hi.coords(x), h.Hj.coords(y));
        enumerated.add(ok, "morphism " + std::to_string(t) + " degree " + std::to_string(i));
      }
    }
    c.details = {{"chain_identity", chain.json()},
                 {"squares", squares.json()},
                 {"representative_independence", reps.json()},
                 {"enumeration", enumerated.json()}};
    c.pass = chain.ok() && squares.ok() && reps.ok() && enumerated.ok() && enumerated.checked >= 100;
  });
}

// 12

inline Check group_cohomology(std::uint64_t seed) {
  return run_check("group cohomology", [=](Check& c) {
    Tally index, shapiro, cyclic, comm;
    Rng rng(sub_seed(seed, 1200));
    for (const auto& b : battery()) {
      SubgroupOf S = subgroup_of(b.G, b.H);
      std::vector<GModule> mods{trivial_cyclic(b.G, 2), trivial_cyclic(b.G, 3), trivial_cyclic(b.G, 4),
                                permutation_module(S, 2), random_module(b.G, rng, {2, 3})};
      for (const auto& M : mods)
        for (int n = 1; n <= 2; ++n)
          index.add(cores_res_is_index(S, M, n), std::string(b.name) + " n=" + std::to_string(n));
      for (int n = 1; n <= 2; ++n)
        for (const auto& M : {trivial_cyclic(b.G, 2), random_module(b.G, rng, {2, 3})}) {
          if (M.module().order() * S.index() > 64) continue;
          shapiro.add(shapiro_check(S, M, n).ok(), std::string(b.name) + " n=" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 6; ++n) {
      GModule M = trivial_cyclic(FinGroup::cyclic(n), n);
      const std::vector<long long> expect = n > 1 ? std::vector<long long>{n} : std::vector<long long>{};
      cyclic.add(cohomology(M, 1).group().factors() == expect && cohomology(M, 2).group().factors() == expect,
                 "n=" + std::to_string(n));
    }
    const std::vector<FinGroup> groups{FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4),
                                       FinGroup::product(FinGroup::cyclic(2), FinGroup::cyclic(2)),
                                       FinGroup::symmetric(3)};
    while (comm.checked < 50) {
      const FinGroup& G = groups[rng.below(groups.size())];
      const long long m = std::vector<long long>{2, 3, 4, 6}[rng.below(4)];
      GModule M = random_module(G, rng, {m});
      if (M.module().rank() != 1 && G.order() > 4) continue;
      GModule Mh = dual_module(M), E = trivial_cyclic(G, m);
      Bilinear beta = evaluation_into(M.module(), m), betaT = transpose(beta);
      const int maxdeg = G.order() > 4 ? 2 : 3;
      const int i = static_cast<int>(rng.below(maxdeg + 1));
      const int j = static_cast<int>(rng.below(maxdeg - i + 1));
      GroupCohomology Hi = cohomology(M, i), Hj = cohomology(Mh, j), Ht = cohomology(E, i + j);
      Cochain fa = Hi.lift(random_element(Hi.group(), rng)), fb = Hj.lift(random_element(Hj.group(), rng));
      fa.values = Hi.cochains.add(fa.values, Hi.d_in(random_element(Hi.d_in.domain(), rng)));
      fb.values = Hj.cochains.add(fb.values, Hj.d_in(random_element(Hj.d_in.domain(), rng)));
      Elem ab = Ht.class_of(cup(M, fa, Mh, fb, E, beta));
      Elem ba = Ht.class_of(cup(Mh, fb, M, fa, E, betaT));
      comm.add(ab == Ht.group().scale((i * j) % 2 ? -1 : 1, ba),
               "|G|=" + std::to_string(G.order()) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    GModule Z2 = trivial_cyclic(FinGroup::cyclic(2), 2);
    GroupCohomology H1 = cohomology(Z2, 1), H2 = cohomology(Z2, 2);
    const bool square = H1.group().order() == 2 &&
                        !H2.group().is_zero(cup_classes(H1, H1, H2, multiplication_pairing(2)).at(0, 0));
    c.details = {{"cores_res_index", index.json()},
                 {"shapiro", shapiro.json()},
                 {"cyclic_h1_h2", cyclic.json()},
                 {"graded_commutativity", comm.json()},
                 {"z2_square_nonzero", square}};
    c.pass = index.ok() && shapiro.ok() && cyclic.ok() && comm.ok() && square;
  });
}

// 13

inline Check completion(std::uint64_t seed) {
  return run_check("completion", [=](Check& c) {
    Tally zn, equiv;
    for (long long n = 1; n <= 12; ++n) {
      FinAb B = n > 1 ? FinAb({n}) : FinAb();
      std::vector<std::vector<QZ>> v{std::vector<QZ>(B.rank(), QZ(1, n))};
      DualTopology t = dual_topology_completion(FgPairing{FgAb{1, IntMat(1, 0)}, B, v});
      bool ok = t.completion == B && t.ker_j == Lattice(1, n, {{n}}) && t.ker_j_is_left_kernel && t.j_surjective;
      // j(1) generates, i.e. j is reduction mod n up to the identification
      if (n > 1) ok = ok && t.j.rows == 1 && t.j.cols == 1 && std::gcd(t.j(0, 0), n) == 1;
      zn.add(ok, "n=" + std::to_string(n));
    }
    Rng rng(sub_seed(seed, 1300));
    int bijective = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t g = 1 + rng.below(3);
      FinAb B = random_group(rng, 32);
      std::vector<std::vector<QZ>> v(g, std::vector<QZ>(B.rank()));
      for (auto& row : v)
        for (std::size_t j = 0; j < B.rank(); ++j) row[j] = QZ(rng.range(0, B.factor(j) - 1), B.factor(j));
      IntMat R(g, 1);
      R(0, 0) = B.exponent() * rng.range(0, 2);
      FgPairing phi{FgAb{g, R}, B, v};
      DualTopology t = dual_topology_completion(phi);
      // B -> continuous dual of A, b -> phi(-, b), by enumeration of its values on the generators of A
      std::set<std::vector<std::pair<long long, long long>>> chars;
      for (const auto& b : B.elements()) {
        std::vector<std::pair<long long, long long>> ch;
        for (std::size_t i = 0; i < g; ++i) {
          std::vector<long long> e(g, 0);
          e[i] = 1;
          const QZ v = phi(e, b);
          ch.emplace_back(v.num(), v.den());
        }
        chars.insert(ch);
      }
      const bool enum_bijective = static_cast<long long>(chars.size()) == B.order() && B.order() == t.completion.order();
      bijective += enum_bijective;
      equiv.add(enum_bijective == t.right_kernel.is_trivial() && t.ker_j_is_left_kernel && t.j_surjective,
                "pairing " + std::to_string(trial));
    }
    c.details = {{"z_mod_n", zn.json()}, {"bijective_iff_right_nondegenerate", equiv.json()}, {"bijective", bijective}};
    c.pass = zn.ok() && equiv.ok();
  });
}

}  // namespace charp::verify
