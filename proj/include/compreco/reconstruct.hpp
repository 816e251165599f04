#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compreco/alphabet.hpp"
#include "compreco/multiset.hpp"

namespace compreco {

/// Number of 1 <= i < n/2 where the length-i prefix and suffix have equal
/// compositions while s_{i+1} != s_{n-i}. These are exactly the positions at
/// which the search has to guess. The i = 0 choice (which end symbol comes
/// first) is fixed by canonicalization and never counted, so ell("01") == 0.
std::uint64_t ell(std::span<const Symbol> s);
std::uint64_t ell(const Alphabet& alphabet, std::string_view s);

struct EllStats {
  std::uint64_t ell = 0;
  std::uint64_t big_l = 0;  // max ell over the equicomposable class
};

/// big_l requires reconstructing the class of `s`.
EllStats ell_stats(const Alphabet& alphabet, std::string_view s);

/// State exposed to a SearchObserver after every successful extension.
struct SearchSnapshot {
  std::uint64_t n = 0;
  std::string prefix;  // s_1 .. s_i
  std::string suffix;  // s_{n+1-i} .. s_n
  std::vector<CompositionMultiset::Entry> remaining;  // unexplained, canonical order
  std::uint64_t guesses = 0;
};

using SearchObserver = std::function<void(const SearchSnapshot&)>;

struct SearchResult {
  std::set<std::string> strings;  // closed under reversal
  bool truncated = false;         // a branch point needed more budget
  std::uint64_t budget = 0;
  std::uint64_t extensions = 0;
  std::uint64_t branch_points = 0;
};

/// Depth-first reconstruction from both ends. Pairs with equal mirror
/// symbols, and pairs whose ends already differ in composition, are forced;
/// every other pair is a guess and consumes one unit of `guess_budget`.
/// Validates `s` (InvalidMultiset). Never throws NoSolution.
SearchResult search(const CompositionMultiset& s, std::uint64_t guess_budget, const SearchObserver& observer = {});

/// Strings generating `s` reachable with at most `guess_budget` guesses.
/// Throws NoSolution when that set is empty.
std::set<std::string> reconstruct(const CompositionMultiset& s, std::uint64_t guess_budget);

/// Deepens the budget until a pass finishes without truncation, yielding
/// the complete equicomposable class. Throws NoSolution for unrealizable
/// input.
std::set<std::string> reconstruct_all(const CompositionMultiset& s);

/// Deepens the budget until some string is found (or the tree is exhausted)
/// and returns that pass.
SearchResult reconstruct_first(const CompositionMultiset& s);

/// Output order: reversal pairs sorted by their smaller member, smaller
/// member first.
std::vector<std::string> canonical_order(const std::set<std::string>& strings);

}  // namespace compreco
