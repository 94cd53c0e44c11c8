#pragma once

#include <cstdint>
#include <random>

#include "radica/field.hpp"
#include "radica/rational.hpp"

namespace radica {

using Rng = std::mt19937_64;

/// n/d with |n| <= bound and 1 <= d <= bound.
BigRational random_rational(Rng& rng, int bound);
BigRational random_nonzero_rational(Rng& rng, int bound);

/// Real and imaginary parts uniform in [-scale, scale].
ComplexD random_complex(Rng& rng, double scale);

/// Seed from RADICA_SEED when set and parseable, otherwise `fallback`.
std::uint64_t seed_from_environment(std::uint64_t fallback);

}  // namespace radica
