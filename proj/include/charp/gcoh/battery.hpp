#pragma once
// Subgroup pairs and coefficient modules shared by the checks.

#include "charp/gcoh/module.hpp"

namespace charp {

inline GModule trivial_cyclic(const FinGroup& G, long long m) { return GModule::trivial(G, m > 1 ? FinAb({m}) : FinAb()); }

struct SubgroupPair {
  FinGroup G;
  std::vector<int> H;
  const char* name;
};

// (Z/4, Z/2), (Z/6, Z/3), (Z/6, Z/2), (S_3, A_3)
inline std::vector<SubgroupPair> battery() {
  FinGroup S3 = FinGroup::symmetric(3);
  std::vector<int> A3;
  for (const auto& h : S3.subgroups())
    if (h.size() == 3) A3 = h;
  return {{FinGroup::cyclic(4), {0, 2}, "Z4/Z2"},
          {FinGroup::cyclic(6), {0, 2, 4}, "Z6/Z3"},
          {FinGroup::cyclic(6), {0, 3}, "Z6/Z2"},
          {S3, A3, "S3/A3"}};
}

}  // namespace charp
