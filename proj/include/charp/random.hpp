#pragma once

#include <cstdint>
#include <random>

namespace charp {

// mt19937_64 with plain modular draws, so streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (gen_() >> 17) & 1u; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace charp
