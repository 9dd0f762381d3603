#pragma once

#include <cstdint>

#include "supermorita/scalar.hpp"

namespace supermorita {

// splitmix64: tiny, platform-independent, fully determined by the seed.
// Used for every sampled spot check so reports are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Small exact scalar: residue for F_p, integer in [-4, 4] for Q.
  Scalar scalar(const FieldSpec& f) {
    if (!f.is_rationals()) return Scalar::of_int(f, static_cast<long long>(below(f.p)));
    return Scalar::of_int(f, static_cast<long long>(below(9)) - 4);
  }

  Scalar nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  int parity() { return static_cast<int>(below(2)); }

 private:
  std::uint64_t state_;
};

}  // namespace supermorita
