#include <algorithm>
#include <thread>
#include <unordered_map>

#include "compreco/errors.hpp"
#include "compreco/multiset.hpp"
#include "compreco/multiset_io.hpp"
#include "compreco/oracle.hpp"
#include "compreco/parallel.hpp"

namespace compreco {

namespace {

using Groups = std::unordered_map<std::string, std::vector<std::string>>;

void enumerate_range(std::uint64_t n, const Alphabet& alphabet, std::uint64_t begin, std::uint64_t end,
                     Groups& groups) {
  const std::uint64_t k = alphabet.size();
  std::string s(n, alphabet.symbol(0));
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t v = idx;
    for (std::uint64_t pos = n; pos-- > 0;) {
      s[pos] = alphabet.symbol(v % k);
      v /= k;
    }
    groups[to_text(composition_multiset(alphabet, s))].push_back(s);
  }
}

}  // namespace

const std::vector<std::string>* ClassTable::class_of(std::string_view s) const {
  for (const auto& c : classes) {
    if (std::binary_search(c.begin(), c.end(), s)) return &c;
  }
  return nullptr;
}

ClassTable enumerate_classes(std::uint64_t n, const Alphabet& alphabet, std::uint64_t cap, unsigned threads) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > cap / alphabet.size()) {
      throw CapExceeded(std::to_string(alphabet.size()) + "^" + std::to_string(n) + " strings exceed the cap of " +
                        std::to_string(cap));
    }
    total *= alphabet.size();
  }
  if (total > cap) throw CapExceeded(std::to_string(total) + " strings exceed the cap of " + std::to_string(cap));

  if (threads == 0) threads = configured_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Groups> shards(threads);
  if (threads == 1) {
    enumerate_range(n, alphabet, 0, total, shards[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { enumerate_range(n, alphabet, begin, end, shards[t]); });
    }
  }

  Groups merged = std::move(shards[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (auto& [key, members] : shards[t]) {
      auto& dst = merged[key];
      dst.insert(dst.end(), members.begin(), members.end());
    }
  }

  ClassTable table;
  table.n = n;
  table.alphabet = alphabet;
  table.classes.reserve(merged.size());
  for (auto& [key, members] : merged) {
    std::sort(members.begin(), members.end());
    table.e_n = std::max<std::uint64_t>(table.e_n, members.size());
    table.classes.push_back(std::move(members));
  }
  std::sort(table.classes.begin(), table.classes.end());
  return table;
}

std::uint64_t exact_en(std::uint64_t n, const Alphabet& alphabet, std::uint64_t cap) {
  return enumerate_classes(n, alphabet, cap).e_n;
}

}  // namespace compreco
