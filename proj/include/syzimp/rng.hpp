#pragma once

// Small deterministic RNG wrapper.  std::mt19937_64 has a fully specified
// output sequence, but the standard *distributions* are implementation
// defined, so we draw raw words and reduce them ourselves: identical seeds
// give identical streams on every platform.

#include <cstdint>
#include <random>

#include "syzimp/rational.hpp"

namespace syzimp {

inline constexpr std::uint64_t kDefaultSeed = 42;

class Rng {
public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  int int_in(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(gen_() % span);
  }

  // Small nonzero integer in [-mag, mag] \ {0}.
  int nonzero_int(int mag = 5) {
    int v = 0;
    while (v == 0) v = int_in(-mag, mag);
    return v;
  }

  Rational rational(int mag = 5) { return Rational(int_in(-mag, mag)); }

  std::uint64_t word() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

}  // namespace syzimp
