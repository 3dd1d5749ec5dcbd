#pragma once

#include <cstdint>

#include "monocert/rational.hpp"
#include "monocert/vec.hpp"

namespace monocert {

// Deterministic generator with a fixed algorithm (splitmix64), so seeded runs
// are reproducible across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    // Rational with numerator in [-max_num, max_num] and denominator in
    // [1, max_den].
    Rational rational(long max_num = 9, long max_den = 4);

    // Finitely supported vector: each coordinate of [1..max_support] is
    // nonzero with probability ~1/2.
    FiniteVec finite_vec(int max_support, long max_num = 9, long max_den = 4);

  private:
    std::uint64_t state_;
};

}  // namespace monocert
