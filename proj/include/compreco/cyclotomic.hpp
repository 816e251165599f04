#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "compreco/integer.hpp"
#include "compreco/univariate.hpp"

namespace compreco {

/// Phi_d, computed as (x^d - 1) divided by Phi_e for every proper divisor e
/// of d. Results are memoized in a process-wide table; the returned
/// reference stays valid for the lifetime of the program. Thread-safe.
const UnivariatePoly& cyclotomic(std::uint64_t d);

using PrimeSignature = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

/// Trial-division factorization, primes ascending. factorize(1) is empty.
PrimeSignature factorize(std::uint64_t m);

/// Divisors of m in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// Closed-form bounds on the largest equicomposable class of length-n
/// binary strings, from the prime signature of n + 1.
struct BoundReport {
  std::uint64_t n = 0;
  Integer lower;        // 2^{floor(e0/2) + e1 + ... + ek}
  Integer upper_pow2;   // 2^{d(n+1) - 1}
  double upper_poly = 0;  // (n+1)^1.23
  std::uint64_t divisor_count = 0;
  PrimeSignature prime_signature;
  std::optional<Integer> exact;  // n+1 = 2^k, p^k or 2p^k

  std::uint64_t lower_log2 = 0;
  std::uint64_t upper_pow2_log2 = 0;

  /// log2 of min(upper_pow2, upper_poly).
  double upper_log2() const;
  /// Whether `value` (a class size) lies inside [lower, min(upper_pow2, upper_poly)];
  /// the real bound is compared on the log2 scale.
  bool contains(const Integer& value) const;
};

BoundReport en_bounds(std::uint64_t n);

}  // namespace compreco
