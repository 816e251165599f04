#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compreco/alphabet.hpp"
#include "compreco/composition.hpp"

namespace compreco {

/// Multiset of compositions, stored as a flat vector of
/// (composition, multiplicity) sorted in canonical composition order.
class CompositionMultiset {
 public:
  using Entry = std::pair<Composition, std::uint64_t>;

  explicit CompositionMultiset(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// Entries may arrive in any order; repeated compositions are merged.
  /// Throws std::invalid_argument on zero multiplicities or compositions
  /// whose arity differs from the alphabet size.
  CompositionMultiset(Alphabet alphabet, std::vector<Entry> entries,
                      std::optional<std::uint64_t> declared_length = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Entry> entries() const { return entries_; }
  std::optional<std::uint64_t> declared_length() const { return declared_length_; }

  std::size_t distinct() const { return entries_.size(); }
  std::uint64_t total() const;
  std::uint64_t multiplicity(const Composition& c) const;

  /// Exact equality of alphabet, compositions and multiplicities.
  friend bool operator==(const CompositionMultiset& a, const CompositionMultiset& b) {
    return a.alphabet_ == b.alphabet_ && a.entries_ == b.entries_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Entry> entries_;
  std::optional<std::uint64_t> declared_length_;
};

/// The multiset of compositions of all n(n+1)/2 substrings of `text`.
/// Throws std::invalid_argument if `text` is empty or not over `alphabet`.
CompositionMultiset composition_multiset(const Alphabet& alphabet, std::string_view text);

/// Same, with the alphabet inferred by Alphabet::infer.
CompositionMultiset composition_multiset(std::string_view text);

/// Returns the string length n the multiset belongs to, or throws
/// InvalidMultiset. Checks the per-weight layer sizes, the single full
/// composition, the weight-1 layer against the full composition, and that
/// every derived mirror pair is a genuine pair of symbols.
std::uint64_t validate(const CompositionMultiset& s);

/// M_i: component-wise sum of all weight-i compositions, with multiplicity.
/// `i` must lie in 1..n; `s` must be valid.
Composition layer_union(const CompositionMultiset& s, std::uint64_t i);

struct SymbolPair {
  Symbol low;
  Symbol high;
  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

/// {s_i, s_{n+1-i}} for i = 1..floor(n/2), plus the middle symbol for odd n.
struct MirrorPairs {
  std::vector<SymbolPair> pairs;
  std::optional<Symbol> middle;
};

/// Derives the symmetric-position symbol pairs from the layer unions.
/// Throws InvalidMultiset if a derived pair is not two symbols.
MirrorPairs mirror_pairs(const CompositionMultiset& s);

/// Collapses the alphabet to {0,1}: symbols listed in `ones` become 1, all
/// others 0. Multiplicities of merged compositions add up.
CompositionMultiset project(const CompositionMultiset& s, std::string_view ones);

/// Turnpike distances: composition 0^a 1^b maps to a + b(n+1). Requires a
/// two-symbol alphabet; the first symbol plays the role of 0. Sorted output.
std::vector<std::uint64_t> to_turnpike(const CompositionMultiset& s);

namespace detail {
// Layer-size checks only; returns n. Used by validate and by internal
// callers that already trust the shape.
std::uint64_t check_layers(const CompositionMultiset& s);
MirrorPairs derive_mirror_pairs(const CompositionMultiset& s, std::uint64_t n);
}  // namespace detail

}  // namespace compreco
