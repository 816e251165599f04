#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "compreco/alphabet.hpp"

namespace compreco {

/// Parikh vector: one count per alphabet symbol, in alphabet order.
///
/// Canonical order is by weight first and then lexicographic on the count
/// vector. Every ordered container of compositions in this library uses it.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::size_t alphabet_size) : counts_(alphabet_size, 0) {}
  explicit Composition(std::vector<std::uint32_t> counts);

  /// Composition of `text` over `alphabet`.
  static Composition of(const Alphabet& alphabet, std::string_view text);

  std::size_t size() const { return counts_.size(); }
  std::uint64_t weight() const { return weight_; }
  std::uint32_t operator[](std::size_t symbol) const { return counts_[symbol]; }
  std::span<const std::uint32_t> counts() const { return counts_; }

  void add(std::size_t symbol, std::uint32_t times = 1);
  Composition& operator+=(const Composition& other);
  /// Throws std::domain_error if any count would become negative.
  Composition& operator-=(const Composition& other);

  friend Composition operator+(Composition a, const Composition& b) { return a += b; }
  friend Composition operator-(Composition a, const Composition& b) { return a -= b; }

  friend bool operator==(const Composition& a, const Composition& b) { return a.counts_ == b.counts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

  /// Monomial-style rendering such as "A^2BC" (the empty composition is "1").
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<std::uint32_t> counts_;
  std::uint64_t weight_ = 0;
};

}  // namespace compreco
