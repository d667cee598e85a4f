#pragma once

#include "charp/derham/complex.hpp"
#include "charp/fields/random.hpp"

namespace charp {

inline DiffForm random_form(const RatFieldPtr& K, int r, Rng& rng, RandomShape shape = {}) {
  DiffForm w(K, r);
  for (Subset I : subsets_of_size(K->d(), r))
    if (rng.below(4) != 0) w.add_term(I, random_ratfn(K, rng, shape));
  return w;
}

/// closed forms are d(eta) + sum b_I^p dt_I/t_I
inline DiffForm random_closed_form(const RatFieldPtr& K, int r, Rng& rng, RandomShape shape = {}) {
  DiffForm w = r > 0 ? exterior_d(random_form(K, r - 1, rng, shape)) : DiffForm(K, r);
  for (Subset I : subsets_of_size(K->d(), r))
    if (rng.coin()) w.add_term(I, random_ratfn(K, rng, shape).frobenius());
  return w;
}

inline std::vector<RatFn> random_symbol_entries(const RatFieldPtr& K, int r, Rng& rng, RandomShape shape = {}) {
  std::vector<RatFn> out;
  for (int i = 0; i < r; ++i) out.push_back(random_nonzero_ratfn(K, rng, shape));
  return out;
}

}  // namespace charp
