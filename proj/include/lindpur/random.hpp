#pragma once

#include <cstdint>
#include <random>

#include "lindpur/types.hpp"

namespace lindpur {

/// Seeded random source with hand-rolled uniform/normal transforms so that
/// streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Complex Ginibre matrix: independent standard-normal real and imaginary parts.
Operator random_matrix(Rng& rng, Index d);

Operator random_hermitian(Rng& rng, Index d);

/// Haar-ish unitary: QR of a Ginibre matrix with the R diagonal phases fixed.
Operator random_unitary(Rng& rng, Index d);

/// Random full-rank density matrix G G^dag / Tr.
Operator random_density(Rng& rng, Index d);

/// Unitary acting as a random unitary on the given index subset and as the
/// identity on its complement.
Operator random_unitary_on_subset(Rng& rng, Index d, const std::vector<Index>& subset);

}  // namespace lindpur
