#pragma once

#include "charp/fields/rational_function.hpp"
#include "charp/random.hpp"

namespace charp {

struct RandomShape {
  int max_terms = 3;
  int max_exp = 2;
};

inline Poly random_poly(const RatField& K, Rng& rng, RandomShape shape = {}) {
  const auto& R = K.ring();
  std::vector<Term> raw;
  const int n = static_cast<int>(rng.range(1, shape.max_terms));
  for (int i = 0; i < n; ++i) {
    Term t{};
    for (int v = 0; v < K.d(); ++v) {
      t.m.e[v] = static_cast<std::int32_t>(rng.range(0, shape.max_exp));
      t.m.deg += t.m.e[v];
    }
    t.c = static_cast<GaloisField::Code>(rng.range(1, K.q() - 1));
    raw.push_back(t);
  }
  return R.collect(std::move(raw));
}

inline Poly random_nonzero_poly(const RatField& K, Rng& rng, RandomShape shape = {}) {
  for (;;) {
    Poly f = random_poly(K, rng, shape);
    if (!f.is_zero()) return f;
  }
}

/// random element; a third of the draws are polynomials
inline RatFn random_ratfn(const RatFieldPtr& K, Rng& rng, RandomShape shape = {}) {
  Poly n = random_poly(*K, rng, shape);
  if (rng.below(3) == 0) return RatFn(K, n);
  RandomShape ds = shape;
  ds.max_terms = std::max(1, shape.max_terms - 1);
  return RatFn(K, n, random_nonzero_poly(*K, rng, ds));
}

inline RatFn random_nonzero_ratfn(const RatFieldPtr& K, Rng& rng, RandomShape shape = {}) {
  for (;;) {
    RatFn f = random_ratfn(K, rng, shape);
    if (!f.is_zero()) return f;
  }
}

}  // namespace charp
