#include "compreco/multiset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "compreco/errors.hpp"

namespace compreco {

namespace {

bool strictly_sorted(const std::vector<CompositionMultiset::Entry>& entries) {
  return std::adjacent_find(entries.begin(), entries.end(),
                            [](const auto& a, const auto& b) { return !(a.first < b.first); }) == entries.end();
}

// Entries of weight `w` form one contiguous run in canonical order.
std::span<const CompositionMultiset::Entry> layer(std::span<const CompositionMultiset::Entry> entries,
                                                  std::uint64_t w) {
  auto lo = std::partition_point(entries.begin(), entries.end(),
                                 [w](const auto& e) { return e.first.weight() < w; });
  auto hi = std::partition_point(lo, entries.end(), [w](const auto& e) { return e.first.weight() == w; });
  return {lo, hi};
}

std::uint64_t triangular_root(std::uint64_t total) {
  auto n = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(total) + 1.0L) - 1.0L) / 2.0L);
  while (n * (n + 1) / 2 > total) --n;
  while ((n + 1) * (n + 2) / 2 <= total) ++n;
  return n;
}

}  // namespace

CompositionMultiset::CompositionMultiset(Alphabet alphabet, std::vector<Entry> entries,
                                         std::optional<std::uint64_t> declared_length)
    : alphabet_(std::move(alphabet)), declared_length_(declared_length) {
  for (const auto& [c, m] : entries) {
    if (c.size() != alphabet_.size()) throw std::invalid_argument("composition arity differs from alphabet size");
    if (m == 0) throw std::invalid_argument("multiplicities must be positive");
  }
  if (!strictly_sorted(entries)) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (auto& e : entries) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(std::move(e));
      }
    }
    entries = std::move(merged);
  }
  entries_ = std::move(entries);
}

std::uint64_t CompositionMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

std::uint64_t CompositionMultiset::multiplicity(const Composition& c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Composition& key) { return e.first < key; });
  return (it != entries_.end() && it->first == c) ? it->second : 0;
}

CompositionMultiset composition_multiset(const Alphabet& alphabet, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot build the composition multiset of an empty string");
  const std::size_t n = text.size();
  const std::size_t k = alphabet.size();
  if (n > std::numeric_limits<std::uint32_t>::max() / 2) throw std::invalid_argument("string too long");
  const auto symbols = alphabet.encode(text);

  // prefix[t*k + c] = occurrences of symbol c in text[0, t)
  std::vector<std::uint32_t> prefix((n + 1) * k, 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::copy_n(prefix.begin() + t * k, k, prefix.begin() + (t + 1) * k);
    ++prefix[(t + 1) * k + symbols[t]];
  }

  // One record per substring: weight followed by counts, so a plain
  // lexicographic record comparison is the canonical composition order.
  const std::size_t stride = k + 1;
  const std::size_t count = n * (n + 1) / 2;
  std::vector<std::uint32_t> records(count * stride);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j, ++r) {
      std::uint32_t* rec = records.data() + r * stride;
      rec[0] = static_cast<std::uint32_t>(j - i);
      for (std::size_t c = 0; c < k; ++c) rec[c + 1] = prefix[j * k + c] - prefix[i * k + c];
    }
  }
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t* ra = records.data() + std::size_t{a} * stride;
    const std::uint32_t* rb = records.data() + std::size_t{b} * stride;
    return std::lexicographical_compare(ra, ra + stride, rb, rb + stride);
  };
  std::sort(order.begin(), order.end(), less);

  std::vector<CompositionMultiset::Entry> entries;
  for (std::size_t idx = 0; idx < count;) {
    std::size_t run = idx + 1;
    while (run < count && !less(order[idx], order[run])) ++run;
    const std::uint32_t* rec = records.data() + std::size_t{order[idx]} * stride;
    entries.emplace_back(Composition(std::vector<std::uint32_t>(rec + 1, rec + stride)), run - idx);
    idx = run;
  }
  return CompositionMultiset(alphabet, std::move(entries), n);
}

CompositionMultiset composition_multiset(std::string_view text) {
  return composition_multiset(Alphabet::infer(text), text);
}

namespace detail {

std::uint64_t check_layers(const CompositionMultiset& s) {
  const auto entries = s.entries();
  if (entries.empty()) throw InvalidMultiset("multiset is empty");
  for (const auto& [c, m] : entries) {
    if (c.weight() == 0) throw InvalidMultiset("empty composition present");
  }
  const std::uint64_t total = s.total();
  const std::uint64_t n = triangular_root(total);
  if (n * (n + 1) / 2 != total) {
    throw InvalidMultiset("total multiplicity " + std::to_string(total) + " is not a triangular number");
  }
  if (auto declared = s.declared_length(); declared && *declared != n) {
    throw InvalidMultiset("declared length " + std::to_string(*declared) + " but multiplicities imply " +
                          std::to_string(n));
  }
  if (entries.back().first.weight() > n) throw InvalidMultiset("composition heavier than the string length");
  for (std::uint64_t w = 1; w <= n; ++w) {
    std::uint64_t layer_total = 0;
    for (const auto& e : layer(entries, w)) layer_total += e.second;
    if (layer_total != n + 1 - w) {
      throw InvalidMultiset("weight " + std::to_string(w) + " layer has " + std::to_string(layer_total) +
                            " compositions, expected " + std::to_string(n + 1 - w));
    }
  }
  return n;
}

MirrorPairs derive_mirror_pairs(const CompositionMultiset& s, std::uint64_t n) {
  const std::size_t k = s.alphabet().size();
  const auto entries = s.entries();
  using Signed = std::vector<std::int64_t>;

  auto layer_sum = [&](std::uint64_t w) {
    Signed sum(k, 0);
    for (const auto& [c, m] : layer(entries, w)) {
      for (std::size_t a = 0; a < k; ++a) sum[a] += static_cast<std::int64_t>(c[a]) * static_cast<std::int64_t>(m);
    }
    return sum;
  };
  const Signed full = layer_sum(n);
  const Signed m1 = layer_sum(1);

  const std::uint64_t half = n / 2;
  const std::uint64_t by_formula = (n - 1) / 2;  // pairs p with p + 1 <= (n + 1) / 2

  // d[i] = i*M_1 - M_i = sum_{p<i} (i - p) * pair_p, valid while 2i <= n + 1.
  std::vector<Signed> d(by_formula + 2, Signed(k, 0));
  for (std::uint64_t i = 2; i <= by_formula + 1; ++i) {
    const Signed mi = layer_sum(i);
    for (std::size_t a = 0; a < k; ++a) d[i][a] = static_cast<std::int64_t>(i) * m1[a] - mi[a];
  }

  std::vector<Signed> raw;
  Signed used(k, 0);
  for (std::uint64_t p = 1; p <= by_formula; ++p) {
    Signed pair(k);
    for (std::size_t a = 0; a < k; ++a) {
      pair[a] = d[p + 1][a] - 2 * d[p][a] + d[p - 1][a];
      used[a] += pair[a];
    }
    raw.push_back(std::move(pair));
  }
  Signed rest(k);
  for (std::size_t a = 0; a < k; ++a) rest[a] = full[a] - used[a];
  if (half > by_formula) raw.push_back(rest);

  auto symbols_of = [&](const Signed& v, std::int64_t expected, std::uint64_t position) {
    std::vector<Symbol> out;
    std::int64_t sum = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (v[a] < 0) {
        throw InvalidMultiset("negative symbol count at mirror position " + std::to_string(position));
      }
      sum += v[a];
      for (std::int64_t t = 0; t < v[a] && out.size() < 2; ++t) out.push_back(static_cast<Symbol>(a));
    }
    if (sum != expected) {
      throw InvalidMultiset("mirror position " + std::to_string(position) + " holds " + std::to_string(sum) +
                            " symbols, expected " + std::to_string(expected));
    }
    return out;
  };

  MirrorPairs result;
  for (std::uint64_t p = 0; p < raw.size(); ++p) {
    const auto sym = symbols_of(raw[p], 2, p + 1);
    result.pairs.push_back({sym[0], sym[1]});
  }
  if (n % 2 == 1) result.middle = symbols_of(rest, 1, half + 1)[0];
  return result;
}

}  // namespace detail

std::uint64_t validate(const CompositionMultiset& s) {
  const std::uint64_t n = detail::check_layers(s);
  detail::derive_mirror_pairs(s, n);
  if (layer_union(s, 1) != s.entries().back().first) {
    throw InvalidMultiset("weight-1 compositions do not add up to the full composition");
  }
  return n;
}

Composition layer_union(const CompositionMultiset& s, std::uint64_t i) {
  const std::uint64_t n = detail::check_layers(s);
  if (i < 1 || i > n) throw std::out_of_range("layer index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  const std::size_t k = s.alphabet().size();
  std::vector<std::uint64_t> sum(k, 0);
  for (const auto& [c, m] : layer(s.entries(), i)) {
    for (std::size_t a = 0; a < k; ++a) sum[a] += std::uint64_t{c[a]} * m;
  }
  std::vector<std::uint32_t> counts(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (sum[a] > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("layer union count overflow");
    counts[a] = static_cast<std::uint32_t>(sum[a]);
  }
  return Composition(std::move(counts));
}

MirrorPairs mirror_pairs(const CompositionMultiset& s) {
  return detail::derive_mirror_pairs(s, validate(s));
}

CompositionMultiset project(const CompositionMultiset& s, std::string_view ones) {
  const std::uint64_t n = validate(s);
  const Alphabet& alphabet = s.alphabet();
  std::vector<bool> selected(alphabet.size(), false);
  for (char c : ones) selected[alphabet.index(c)] = true;

  std::vector<CompositionMultiset::Entry> entries;
  entries.reserve(s.distinct());
  for (const auto& [c, m] : s.entries()) {
    std::uint32_t hit = 0;
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (selected[a]) hit += c[a];
    }
    entries.emplace_back(Composition({static_cast<std::uint32_t>(c.weight()) - hit, hit}), m);
  }
  return CompositionMultiset(Alphabet::binary(), std::move(entries), n);
}

std::vector<std::uint64_t> to_turnpike(const CompositionMultiset& s) {
  if (s.alphabet().size() != 2) throw std::invalid_argument("turnpike reduction needs a two-symbol alphabet");
  const std::uint64_t n = validate(s);
  std::vector<std::uint64_t> out;
  out.reserve(n * (n + 1) / 2);
  for (const auto& [c, m] : s.entries()) {
    const std::uint64_t value = std::uint64_t{c[0]} + std::uint64_t{c[1]} * (n + 1);
    out.insert(out.end(), m, value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace compreco
