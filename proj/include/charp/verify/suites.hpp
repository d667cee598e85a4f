#pragma once

#include <string>
#include <vector>

#include "charp/verify/criteria.hpp"

namespace charp::verify {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Json json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return {{"suite", suite}, {"seed", seed}, {"pass", ok()}, {"checks", cs}};
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"derham", "duality", "kmilnor", "finab", "complexes", "gcoh"};
  return names;
}

inline bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

inline std::vector<Check> suite_checks(const std::string& name, std::uint64_t seed) {
  if (name == "derham") return {dimension_identities(), cartier_round_trips(seed), logarithmic_calculus(seed)};
  if (name == "duality")
    return {gram_perfectness(), cartier_wedge_identities(seed), linear_pairing_criterion(seed),
            artin_schreier_bottom()};
  if (name == "kmilnor") return {step3_identity(seed), tame_symbols(seed)};
  if (name == "finab") return {finab_propagation(seed), completion(seed)};
  if (name == "complexes") return {cone_pairings(seed)};
  if (name == "gcoh") return {group_cohomology(seed)};
  throw InvalidArgument("unknown suite '" + name + "'");
}

/// "all" runs every suite in a fixed order; check names are prefixed by their suite
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport rep{name, seed, {}};
  if (name != "all") {
    rep.checks = suite_checks(name, seed);
    return rep;
  }
  for (const auto& s : suite_names())
    for (auto c : suite_checks(s, seed)) {
      c.name = s + ": " + c.name;
      rep.checks.push_back(std::move(c));
    }
  return rep;
}

}  // namespace charp::verify
