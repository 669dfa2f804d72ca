#pragma once

#include <cstdint>
#include <random>

#include "p1kit/field.hpp"

namespace p1kit {

/// Seeded generator. mt19937_64 has a standard-defined output sequence, and
/// reductions are done here rather than through <random> distributions, so
/// a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Uniform residue over F_p; an integer in [-4, 4] over Q.
  Scalar scalar(const Field& field) {
    if (field.is_prime()) return Scalar(field, static_cast<long>(below(field.prime)));
    return Scalar(field, between(-4, 4));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace p1kit
