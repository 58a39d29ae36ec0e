#pragma once

#include <cstdint>
#include <random>

#include "preriesz/scalar.hpp"

namespace preriesz::detail {

/// Deterministic source for sampled checks. Draws are mapped by hand rather
/// than through std distributions so sequences agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  bool chance(unsigned percent) { return gen_() % 100 < percent; }

  /// p/q with q in [1, max_den] and p/q in [lo, hi].
  Scalar rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 3) {
    const std::int64_t q = integer(1, max_den);
    return Scalar(integer(lo * q, hi * q), q);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace preriesz::detail
