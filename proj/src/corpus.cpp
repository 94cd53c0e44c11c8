#include "radica/corpus.hpp"

#include <cstdlib>
#include <string>

namespace radica {

BigRational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return {BigInt(num(rng)), BigInt(den(rng))};
}

BigRational random_nonzero_rational(Rng& rng, int bound) {
  for (;;) {
    BigRational q = random_rational(rng, bound);
    if (!q.is_zero()) return q;
  }
}

ComplexD random_complex(Rng& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double re = u(rng);
  return {re, u(rng)};
}

std::uint64_t seed_from_environment(std::uint64_t fallback) {
  const char* value = std::getenv("RADICA_SEED");
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace radica
