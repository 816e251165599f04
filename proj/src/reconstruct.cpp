#include "compreco/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "compreco/errors.hpp"
#include "compreco/interleave.hpp"

namespace compreco {

namespace {

// Compositions of a length-n string fit in one 64-bit word when
// (k + 1) * bit_width(n) <= 64: weight in the top field, then the counts in
// alphabet order. Integer order on such keys is the canonical order.
struct PackedCodec {
  using Key = std::uint64_t;
  std::size_t k;
  unsigned bits;

  static bool fits(std::size_t k, std::uint64_t n) { return (k + 1) * std::bit_width(n) <= 64; }

  Key encode(const std::uint32_t* counts) const {
    std::uint64_t weight = 0;
    Key key = 0;
    for (std::size_t c = 0; c < k; ++c) {
      weight += counts[c];
      key = (key << bits) | counts[c];
    }
    return key | (weight << (bits * k));
  }

  Composition decode(Key key) const {
    std::vector<std::uint32_t> counts(k);
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t c = k; c-- > 0;) {
      counts[c] = static_cast<std::uint32_t>(key & mask);
      key >>= bits;
    }
    return Composition(std::move(counts));
  }
};

// Fallback for large alphabets: the key is (weight, counts...).
struct WideCodec {
  using Key = std::vector<std::uint32_t>;
  std::size_t k;

  Key encode(const std::uint32_t* counts) const {
    Key key(k + 1);
    std::uint64_t weight = 0;
    for (std::size_t c = 0; c < k; ++c) {
      weight += counts[c];
      key[c + 1] = counts[c];
    }
    key[0] = static_cast<std::uint32_t>(weight);
    return key;
  }

  Composition decode(const Key& key) const { return Composition(std::vector<std::uint32_t>(key.begin() + 1, key.end())); }
};

template <class Codec>
class Search {
 public:
  using Key = typename Codec::Key;
  // Ordered multiset of unexplained compositions: key -> multiplicity.
  using Remaining = std::map<Key, std::uint64_t>;

  Search(const CompositionMultiset& s, std::uint64_t n, MirrorPairs mirror, Codec codec, std::uint64_t budget,
         const SearchObserver& observer)
      : source_(s),
        n_(n),
        k_(s.alphabet().size()),
        mirror_(std::move(mirror)),
        codec_(std::move(codec)),
        budget_(budget),
        observer_(observer),
        full_(s.entries().back().first.counts().begin(), s.entries().back().first.counts().end()),
        scratch_(k_),
        complement_(k_) {
    result_.budget = budget;
  }

  SearchResult run() {
    State root;
    root.left_counts.assign(k_, 0);
    root.right_counts.assign(k_, 0);
    for (const auto& [c, m] : source_.entries()) {
      root.remaining.emplace_hint(root.remaining.end(), codec_.encode(c.counts().data()), m);
    }
    if (!take(root.remaining, codec_.encode(full_.data()))) return std::move(result_);
    notify(root);
    explore(std::move(root));
    return std::move(result_);
  }

 private:
  struct State {
    std::vector<Symbol> left;   // s_1 .. s_i
    std::vector<Symbol> right;  // s_n, s_{n-1}, .., s_{n+1-i}
    // Row t holds the symbol counts of the first t symbols of left/right.
    std::vector<std::uint32_t> left_counts;
    std::vector<std::uint32_t> right_counts;
    Remaining remaining;
    std::uint64_t guesses = 0;
  };

  static bool take(Remaining& remaining, const Key& key) {
    auto it = remaining.find(key);
    if (it == remaining.end()) return false;
    if (--it->second == 0) remaining.erase(it);
    return true;
  }

  const std::uint32_t* left_row(const State& st, std::size_t t) const { return st.left_counts.data() + t * k_; }
  const std::uint32_t* right_row(const State& st, std::size_t t) const { return st.right_counts.data() + t * k_; }

  // Places `l` at position i+1 and `r` at position n-i, then removes every
  // composition that becomes explained: substrings ending at i+1 inside the
  // prefix, starting at n-i inside the suffix, and the new substrings that
  // cover the whole unknown middle.
  bool advance(State& st, Symbol l, Symbol r) {
    ++result_.extensions;
    const std::size_t a = st.left.size() + 1;
    const std::size_t b = n_ + 1 - a;
    st.left.push_back(l);
    st.right.push_back(r);
    st.left_counts.insert(st.left_counts.end(), left_row(st, a - 1), left_row(st, a - 1) + k_);
    st.right_counts.insert(st.right_counts.end(), right_row(st, a - 1), right_row(st, a - 1) + k_);
    ++st.left_counts[a * k_ + l];
    ++st.right_counts[a * k_ + r];

    const std::uint32_t* left_a = left_row(st, a);
    const std::uint32_t* right_a = right_row(st, a);
    std::vector<std::uint32_t> middle(k_);
    for (std::size_t c = 0; c < k_; ++c) middle[c] = full_[c] - left_a[c] - right_a[c];

    auto take_sum = [&](auto&& fill) {
      fill(scratch_.data());
      return take(st.remaining, codec_.encode(scratch_.data()));
    };

    for (std::size_t j = 1; j <= a; ++j) {  // s_j .. s_a
      const std::uint32_t* lo = left_row(st, j - 1);
      if (!take_sum([&](std::uint32_t* out) {
            for (std::size_t c = 0; c < k_; ++c) out[c] = left_a[c] - lo[c];
          }))
        return false;
    }
    for (std::size_t t = 0; t < a; ++t) {  // s_b .. s_{n-t}
      const std::uint32_t* lo = right_row(st, t);
      if (!take_sum([&](std::uint32_t* out) {
            for (std::size_t c = 0; c < k_; ++c) out[c] = right_a[c] - lo[c];
          }))
        return false;
    }
    if (a + 1 <= b - 1) {
      // s_{a+1} .. s_k for k = b-1 .. n
      if (!take_sum([&](std::uint32_t* out) { std::copy(middle.begin(), middle.end(), out); })) return false;
      for (std::size_t t = 0; t < a; ++t) {
        const std::uint32_t* lo = right_row(st, t);
        if (!take_sum([&](std::uint32_t* out) {
              for (std::size_t c = 0; c < k_; ++c) out[c] = middle[c] + right_a[c] - lo[c];
            }))
          return false;
      }
      // s_j .. s_{b-1} for j = 1 .. a
      for (std::size_t j = 1; j <= a; ++j) {
        const std::uint32_t* lo = left_row(st, j - 1);
        if (!take_sum([&](std::uint32_t* out) {
              for (std::size_t c = 0; c < k_; ++c) out[c] = middle[c] + left_a[c] - lo[c];
            }))
          return false;
      }
    }
    notify(st);
    return true;
  }

  // Key of full - row - e_sym, i.e. the composition of the string with that
  // end part removed.
  Key complement_key(const std::uint32_t* row, Symbol sym) {
    for (std::size_t c = 0; c < k_; ++c) complement_[c] = full_[c] - row[c];
    --complement_[sym];
    return codec_.encode(complement_.data());
  }

  // When the end compositions differ, the two heaviest unexplained
  // compositions are s_1..s_{n-i-1} and s_{i+2}..s_n. Their complements tell
  // which symbol of the mirror pair goes left. Returns false on a dead end.
  bool forced_by_ends(State& st, Symbol x, Symbol y) {
    const std::size_t i = st.left.size();
    if (st.remaining.empty()) return false;
    auto top = st.remaining.rbegin();
    const Key first = top->first;
    Key second = first;
    if (top->second < 2) {
      if (++top == st.remaining.rend()) return false;
      second = top->first;
    }
    auto matches = [&](Symbol l, Symbol r) {
      Key p = complement_key(left_row(st, i), l);
      Key q = complement_key(right_row(st, i), r);
      return (p == first && q == second) || (p == second && q == first);
    };
    if (matches(x, y)) return advance(st, x, y);
    if (matches(y, x)) return advance(st, y, x);
    return false;
  }

  void explore(State st) {
    const std::size_t half = n_ / 2;
    while (true) {
      const std::size_t i = st.left.size();
      if (i == half) {
        finish(st);
        return;
      }
      const SymbolPair pair = mirror_.pairs[i];
      if (pair.low == pair.high || i == 0) {
        if (!advance(st, pair.low, pair.high)) return;
        continue;
      }
      if (!std::equal(left_row(st, i), left_row(st, i) + k_, right_row(st, i))) {
        if (!forced_by_ends(st, pair.low, pair.high)) return;
        continue;
      }
      ++result_.branch_points;
      if (st.guesses >= budget_) {
        result_.truncated = true;
        return;
      }
      ++st.guesses;
      State other = st;
      if (advance(st, pair.low, pair.high)) explore(std::move(st));
      if (!advance(other, pair.high, pair.low)) return;
      st = std::move(other);
    }
  }

  void finish(const State& st) {
    if (!st.remaining.empty()) return;
    std::string out;
    out.reserve(n_);
    const std::string& symbols = source_.alphabet().symbols();
    for (Symbol c : st.left) out.push_back(symbols[c]);
    if (mirror_.middle) out.push_back(symbols[*mirror_.middle]);
    for (auto it = st.right.rbegin(); it != st.right.rend(); ++it) out.push_back(symbols[*it]);
    result_.strings.insert(reversed(out));
    result_.strings.insert(std::move(out));
  }

  void notify(const State& st) {
    if (!observer_) return;
    SearchSnapshot snap;
    snap.n = n_;
    const std::string& symbols = source_.alphabet().symbols();
    for (Symbol c : st.left) snap.prefix.push_back(symbols[c]);
    for (auto it = st.right.rbegin(); it != st.right.rend(); ++it) snap.suffix.push_back(symbols[*it]);
    for (const auto& [key, m] : st.remaining) snap.remaining.emplace_back(codec_.decode(key), m);
    snap.guesses = st.guesses;
    observer_(snap);
  }

  const CompositionMultiset& source_;
  std::uint64_t n_;
  std::size_t k_;
  MirrorPairs mirror_;
  Codec codec_;
  std::uint64_t budget_;
  const SearchObserver& observer_;
  std::vector<std::uint32_t> full_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::uint32_t> complement_;
  SearchResult result_;
};

SearchResult search_validated(const CompositionMultiset& s, std::uint64_t n, const MirrorPairs& mirror,
                              std::uint64_t budget, const SearchObserver& observer) {
  const std::size_t k = s.alphabet().size();
  if (PackedCodec::fits(k, n)) {
    PackedCodec codec{k, static_cast<unsigned>(std::bit_width(n))};
    return Search<PackedCodec>(s, n, mirror, codec, budget, observer).run();
  }
  return Search<WideCodec>(s, n, mirror, WideCodec{k}, budget, observer).run();
}

struct Prepared {
  std::uint64_t n;
  MirrorPairs mirror;
};

Prepared prepare(const CompositionMultiset& s) {
  const std::uint64_t n = validate(s);
  return {n, detail::derive_mirror_pairs(s, n)};
}

}  // namespace

SearchResult search(const CompositionMultiset& s, std::uint64_t guess_budget, const SearchObserver& observer) {
  const auto prep = prepare(s);
  return search_validated(s, prep.n, prep.mirror, guess_budget, observer);
}

std::set<std::string> reconstruct(const CompositionMultiset& s, std::uint64_t guess_budget) {
  auto result = search(s, guess_budget);
  if (result.strings.empty()) {
    throw NoSolution(result.truncated ? "nothing found within a guess budget of " + std::to_string(guess_budget)
                                      : "no string has this composition multiset");
  }
  return std::move(result.strings);
}

std::set<std::string> reconstruct_all(const CompositionMultiset& s) {
  const auto prep = prepare(s);
  for (std::uint64_t budget = 0;; ++budget) {
    auto result = search_validated(s, prep.n, prep.mirror, budget, {});
    if (result.truncated) continue;
    if (result.strings.empty()) throw NoSolution("no string has this composition multiset");
    return std::move(result.strings);
  }
}

SearchResult reconstruct_first(const CompositionMultiset& s) {
  const auto prep = prepare(s);
  for (std::uint64_t budget = 0;; ++budget) {
    auto result = search_validated(s, prep.n, prep.mirror, budget, {});
    if (!result.strings.empty() || !result.truncated) return result;
  }
}

std::vector<std::string> canonical_order(const std::set<std::string>& strings) {
  // Iterating in lexicographic order meets the smaller member of each
  // reversal pair first.
  std::vector<std::string> out;
  std::set<std::string> emitted;
  for (const auto& s : strings) {
    if (emitted.contains(s)) continue;
    out.push_back(s);
    emitted.insert(s);
    std::string r = reversed(s);
    if (r != s && strings.contains(r)) {
      out.push_back(r);
      emitted.insert(std::move(r));
    }
  }
  return out;
}

}  // namespace compreco
