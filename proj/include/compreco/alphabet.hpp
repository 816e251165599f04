#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compreco {

using Symbol = std::uint8_t;

/// Ordered set of distinct single-character symbols. The order fixes the
/// layout of every composition vector and all lexicographic comparisons.
class Alphabet {
 public:
  /// Throws std::invalid_argument on empty input, repeated symbols or
  /// non-printable characters.
  explicit Alphabet(std::string symbols);

  static Alphabet binary() { return Alphabet("01"); }

  /// "01" when `text` only uses 0 and 1, otherwise its distinct symbols in
  /// byte order.
  static Alphabet infer(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  char symbol(std::size_t index) const { return symbols_.at(index); }

  std::optional<Symbol> find(char c) const;
  Symbol index(char c) const;
  bool contains(std::string_view text) const;

  std::vector<Symbol> encode(std::string_view text) const;
  std::string decode(const std::vector<Symbol>& symbols) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

}  // namespace compreco
