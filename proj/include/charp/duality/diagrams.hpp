#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "charp/derham/hp.hpp"
#include "charp/derham/random.hpp"

namespace charp {

struct IdentityTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  bool ok() const { return checked == passed; }
};

struct DiagramReport {
  std::size_t samples = 0;
  std::vector<IdentityTally> identities;
  bool ok() const {
    for (const auto& t : identities)
      if (!t.ok()) return false;
    return true;
  }
};

/// C^{-1}(x ^ C(y)) = C^{-1}(x) ^ y in Omega^d/B^d, for closed y
inline bool cartier_wedge_identity(const DeRhamComplex& C, const DiffForm& x, const DiffForm& y) {
  return C.inverse_cartier(wedge(x, C.cartier(y))) == C.project(wedge(C.representative(C.inverse_cartier(x)), y));
}

/// pi(x ^ j(y)) = pi(x) ^ y in Omega^d/B^d, for closed y
inline bool projection_wedge_identity(const DeRhamComplex& C, const DiffForm& x, const DiffForm& y) {
  return C.project(wedge(x, y)) == C.project(wedge(C.representative(C.project(x)), y));
}

/// representative level: x in Omega^r arbitrary, y closed; classes in Omega^d/B^d
inline DiagramReport cartier_diagram_check(const DeRhamComplex& C, int r, std::size_t samples, std::uint64_t seed) {
  const int d = C.d();
  if (r < 0 || r > d) throw DegreeOutOfRange("degree " + std::to_string(r) + " outside 0.." + std::to_string(d));
  const auto& K = C.field();
  Rng rng(seed);
  DiagramReport rep;
  rep.samples = samples;
  IdentityTally i1{"Cinv(x^C(y)) = Cinv(x)^y"}, i2{"pi(x^j(y)) = pi(x)^y"}, i3{"(Cinv-pi)(dlog) = 0"},
      i4{"(C-j)(dlog) = 0"};
  for (std::size_t s = 0; s < samples; ++s) {
    DiffForm x = random_form(K, r, rng);
    DiffForm y = random_closed_form(K, d - r, rng);
    ++i1.checked;
    if (cartier_wedge_identity(C, x, y)) ++i1.passed;
    ++i2.checked;
    if (projection_wedge_identity(C, x, y)) ++i2.passed;
    DiffForm lx = dlog(K, random_symbol_entries(K, r, rng));
    ++i3.checked;
    if (C.is_logarithmic(lx)) ++i3.passed;
    DiffForm ly = dlog(K, random_symbol_entries(K, d - r, rng));
    ++i4.checked;
    if (C.cartier(ly) == ly) ++i4.passed;
  }
  rep.identities = {i1, i2, i3, i4};
  return rep;
}

/// v in nu_j(a, k) = ker(C + a : Z^j -> Omega^j)
inline bool nu_membership(const DeRhamComplex& C, const DiffForm& v, const RatFn& a) {
  if (!C.is_closed(v)) throw NotClosed("nu membership needs a closed form");
  return (C.cartier(v) + v.scaled(a)).is_zero();
}

/// (C^{-1} + a)(xi) = class(w) in Omega^j/B^j
inline bool D_a_witness_check(const DeRhamComplex& C, const DiffForm& xi, const DiffForm& w, const RatFn& a) {
  return C.inverse_cartier(xi) + C.project(xi.scaled(a)) == C.project(w);
}

/// The commutations behind the (C^{-1}+a) x (C+a) pairing, for x in Omega^j and
/// closed y of complementary degree. The last one holds in H_p only, with the
/// explicit witness x ^ C(y) for (C^{-1} - pi).
inline std::array<bool, 4> case_d_identities(const DeRhamComplex& C, const DiffForm& x, const DiffForm& y,
                                             const RatFn& a) {
  const int d = C.d();
  const auto& K = C.field();
  const Subset top = d == 0 ? 0 : (Subset{1} << d) - 1;
  DiffForm cy = C.cartier(y);
  std::array<bool, 4> ok{};
  ok[0] = cartier_wedge_identity(C, x, y);
  ok[1] = projection_wedge_identity(C, x, y);
  ok[2] = wedge(x.scaled(a), y) == wedge(x, y.scaled(a));
  // left: (Cinv + a)(x) ^ y, right: x ^ (C + a)(y), both in Omega^d/B^d
  FormClass left = C.project(wedge(C.representative(C.inverse_cartier(x) + C.project(x.scaled(a))), y));
  FormClass right = C.project(wedge(x, cy + y.scaled(a)));
  HpClass hl{K, d + 1, left.coords.empty() ? RatFn(K) : left.coords[0]};
  HpClass hr{K, d + 1, right.coords.empty() ? RatFn(K) : right.coords[0]};
  if (d == 0)
    ok[3] = compare(C, hl, hr).verdict == HpVerdict::ProvenEqual;
  else
    ok[3] = verify_hp_witness(C, wedge(x, cy).coeff(top), hl.c - hr.c);
  return ok;
}

inline DiagramReport case_d_diagram_check(const DeRhamComplex& C, int j, const RatFn& a, std::size_t samples,
                                          std::uint64_t seed) {
  const int d = C.d();
  if (a.is_zero()) throw BadCaseParams("a must be nonzero");
  if (j < 0 || j > d) throw DegreeOutOfRange("degree " + std::to_string(j) + " outside 0.." + std::to_string(d));
  const auto& K = C.field();
  Rng rng(seed);
  DiagramReport rep;
  rep.samples = samples;
  rep.identities = {{"Cinv(x^C(y)) = Cinv(x)^y"},
                    {"pi(x^j(y)) = pi(x)^y"},
                    {"(a x)^y = x^(a y)"},
                    {"lambda((Cinv+a)(x)^y) = lambda(x^(C+a)(y))"}};
  for (std::size_t s = 0; s < samples; ++s) {
    DiffForm x = random_form(K, j, rng);
    DiffForm y = random_closed_form(K, d - j, rng);
    auto ok = case_d_identities(C, x, y, a);
    for (std::size_t i = 0; i < 4; ++i) {
      ++rep.identities[i].checked;
      if (ok[i]) ++rep.identities[i].passed;
    }
  }
  return rep;
}

}  // namespace charp
