#pragma once

#include <cstdint>

#include "ccs/rational.hpp"

namespace ccs {

// splitmix64: tiny, portable, byte-stable across platforms. Determinism of
// the corpus (same seed -> identical fields/points/report) rides on this,
// so the standard-library distributions are deliberately not used.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long next_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
  }

  // nonzero numerator in [-bound, bound], denominator in [1, bound]
  Rational next_rational(long bound) {
    long p = next_int(1, bound);
    if (next_u64() & 1) p = -p;
    const long q = next_int(1, bound);
    return Rational(p, q);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ccs
