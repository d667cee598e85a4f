#pragma once

#include <optional>
#include <string>

namespace charp {

/// outcome of a seeded sampling check
struct SampleReport {
  int samples = 0;
  int passed = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return passed == samples; }
};

}  // namespace charp
