#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compreco/alphabet.hpp"
#include "compreco/integer.hpp"

namespace compreco {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// All strings of one length grouped by composition multiset.
struct ClassTable {
  std::uint64_t n = 0;
  Alphabet alphabet = Alphabet::binary();
  std::vector<std::vector<std::string>> classes;  // each sorted; ordered by first member
  std::uint64_t e_n = 0;                          // largest class size

  /// Class containing `s`, or nullptr.
  const std::vector<std::string>* class_of(std::string_view s) const;
};

/// Exhaustive grouping of alphabet^n. Strings are sharded by index range
/// (equivalently, by prefix) across `threads` workers (0 means
/// configured_threads()); shards group by the canonical multiset text and
/// are merged at the end. Throws CapExceeded when |alphabet|^n > cap.
ClassTable enumerate_classes(std::uint64_t n, const Alphabet& alphabet,
                             std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 0);

std::uint64_t exact_en(std::uint64_t n, const Alphabet& alphabet, std::uint64_t cap = kDefaultEnumerationCap);

/// Distribution of ell over uniform random strings.
struct EllDistribution {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator;                 // algorithm identifier of the RNG
  std::vector<std::uint64_t> histogram;  // histogram[l] = trials with ell == l
  double mean = 0;

  /// Trials with ell >= m.
  std::uint64_t at_least(std::uint64_t m) const;
  /// Empirical P(ell >= m).
  double tail(std::uint64_t m) const;
  /// Empirical P(ell >= 1).
  double p_hat() const { return tail(1); }
};

/// Draws `trials` strings of length n over k symbols from a seeded
/// mt19937_64 stream (symbol = high 32 bits scaled to [0, k)), so runs are
/// reproducible bit for bit.
EllDistribution ell_statistics(std::uint64_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed);

/// Probability that two uniform random length-n strings over k symbols have
/// the same composition, as an exact rational. Throws CapExceeded if the
/// number of compositions exceeds `cap`.
Rational collision_probability(std::uint64_t n, std::uint64_t k, std::uint64_t cap = 10'000'000);

/// The analytic upper bound on the collision probability: n!/k^n when
/// k >= n, and k^{k/2} e^{1/(12n)} / (2 pi n)^{(k-1)/2} otherwise.
struct CollisionCheck {
  Rational exact;
  bool factorial_branch = false;    // k >= n
  std::optional<Rational> rational_bound;  // set on the factorial branch
  std::string bound_decimal;        // 50-digit rendering of the bound
  double exact_value = 0;
  double bound_value = 0;
  bool within = false;              // exact <= bound
};

CollisionCheck check_collision_bound(std::uint64_t n, std::uint64_t k);

}  // namespace compreco
