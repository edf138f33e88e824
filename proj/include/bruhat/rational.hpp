#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bruhat/matrix.hpp"

namespace bruhat {

using Rational = mpq_class;
using QMatrix = Matrix<Rational>;

/// Ranges for random exact samples: numerator in [-max_numerator,
/// max_numerator] \ {0}, denominator in [1, max_denominator].
struct SampleRanges {
  int max_numerator = 20;
  int max_denominator = 10;
};

template <class Rng>
Rational random_nonzero(Rng& rng, const SampleRanges& r = {}) {
  std::uniform_int_distribution<int> num(1, r.max_numerator);
  std::uniform_int_distribution<int> den(1, r.max_denominator);
  std::bernoulli_distribution neg(0.5);
  Rational q(num(rng) * (neg(rng) ? -1 : 1), den(rng));
  q.canonicalize();
  return q;
}

template <class Rng>
std::vector<Rational> random_nonzero_vector(Rng& rng, std::size_t n, const SampleRanges& r = {}) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_nonzero(rng, r));
  return v;
}

inline Rational pow(const Rational& base, int e) {
  Rational out(1);
  if (e == 0) return out;
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
  while (n) {
    if (n & 1) out *= b;
    b *= b;
    n >>= 1;
  }
  return out;
}

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Per-trial seed derived from a base seed (splitmix64 finaliser).
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace bruhat
