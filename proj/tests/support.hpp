// SPDX-License-Identifier: Apache-2.0
// Random generators and small oracles shared by the test binaries.
#pragma once

#include <numeric>
#include <random>

#include "splitjac/locus.hpp"
#include "splitjac/reconstruct.hpp"

namespace splitjac::testing {

inline constexpr int kCases = 250;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  /// Positive rational with numerator and denominator in [1, bound].
  Rational positive(long long bound = 12) { return Rational(integer(1, bound), integer(1, bound)); }

  Rational rational(long long bound = 12) {
    return Rational(integer(-bound, bound), integer(1, bound));
  }

  IntMat2 int_matrix(long long bound = 20) {
    return imat2(integer(-bound, bound), integer(-bound, bound), integer(-bound, bound), integer(-bound, bound));
  }

  /// Product of random elementary moves, determinant ±1.
  IntMat2 unimodular(int steps = 6) {
    IntMat2 x = IntMat2::Identity();
    for (int i = 0; i < steps; ++i) {
      const long long c = integer(-3, 3);
      switch (integer(0, 3)) {
        case 0: x = IntMat2(x * imat2(1, c, 0, 1)); break;
        case 1: x = IntMat2(x * imat2(1, 0, c, 1)); break;
        case 2: x = IntMat2(x * imat2(0, 1, 1, 0)); break;
        default: x = IntMat2(x * imat2(-1, 0, 0, 1)); break;
      }
    }
    return x;
  }

  /// Symmetric positive definite form with small rational entries.
  RatMat2 pd_form(long long bound = 12) {
    for (;;) {
      const RatMat2 q = [&] {
        const Rational b = rational(bound);
        return rmat2(positive(bound), b, b, positive(bound));
      }();
      if (is_positive_definite(q)) return q;
    }
  }

  SplittingData splitting(long long max_d = 12, long long bound = 8) {
    const long long d = integer(2, max_d);
    long long k;
    do k = integer(1, d - 1);
    while (std::gcd(k, d) != 1);
    return {d, k, positive(bound), positive(bound)};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace splitjac::testing
