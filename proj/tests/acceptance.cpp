// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance below is fixed here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "compreco/cyclotomic.hpp"
#include "compreco/generating.hpp"
#include "compreco/interleave.hpp"
#include "compreco/multiset.hpp"
#include "compreco/multiset_io.hpp"
#include "compreco/oracle.hpp"
#include "compreco/reconstruct.hpp"

using namespace compreco;

namespace {

constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kTailRatioSpread = 2.0;    // max/min tail ratio, k = 4
constexpr std::uint64_t kTailMinCount = 100;
constexpr double kScalingSpread = 4.0;      // max/min of time / (n^2 log n)
constexpr int kScalingRepeats = 7;
constexpr std::uint64_t kStatsSeed = 20240601;
constexpr std::uint64_t kScalingSeed = 991;

struct Outcome {
  bool pass;
  std::string detail;
};

std::map<std::uint64_t, ClassTable> tables;

const ClassTable& table(std::uint64_t n) {
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, enumerate_classes(n, Alphabet::binary())).first;
  return it->second;
}

std::string strip_spaces(std::string s) {
  std::erase(s, ' ');
  return s;
}

Outcome reconstructable_up_to_7() {
  std::size_t largest = 0;
  for (std::uint64_t n = 1; n <= 7; ++n) {
    for (const auto& c : table(n).classes) largest = std::max(largest, c.size());
  }
  return {largest <= 2, "largest class " + std::to_string(largest)};
}

Outcome length_eight_confusion() {
  const auto& t = table(8);
  const auto* c = t.class_of("01001101");
  const std::vector<std::string> expected = {"01001101", "01101001", "10010110", "10110010"};
  const bool ok = t.e_n == 4 && c && *c == expected;
  return {ok, "e_8=" + std::to_string(t.e_n) + " class size " + std::to_string(c ? c->size() : 0)};
}

Outcome prime_power_exactness() {
  const auto e15 = table(15).e_n;
  const auto e8 = table(8).e_n;
  const bool ok = e15 == 4 && e15 == (1u << (4 / 2)) && e8 == 4 && e8 == (1u << 2);
  return {ok, "e_15=" + std::to_string(e15) + " e_8=" + std::to_string(e8)};
}

Outcome prime_lengths() {
  std::string detail;
  bool ok = true;
  for (std::uint64_t n : {4, 6, 9, 10, 12, 13}) {
    const auto e = table(n).e_n;
    ok = ok && e == 2;
    detail += "e_" + std::to_string(n) + "=" + std::to_string(e) + " ";
  }
  return {ok, detail};
}

Outcome bound_envelope() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t n = 1; n <= 15; ++n) {
    const auto b = en_bounds(n);
    const Integer e = table(n).e_n;
    if (!(b.lower <= e && b.contains(e))) {
      ok = false;
      detail += "n=" + std::to_string(n) + " outside ";
    }
  }
  return {ok, ok ? "lower <= e_n <= min(2^(d-1), (n+1)^1.23) for n <= 15" : detail};
}

Outcome algebraic_equivalence() {
  std::uint64_t pairs = 0, equal = 0, skipped = 0, bad = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    // Group by the number of ones; read that count back from both sides so
    // that skipped cross-group pairs are certified unequal on both sides.
    std::map<std::uint64_t, std::vector<std::size_t>> groups;
    std::vector<CompositionMultiset> ms;
    std::vector<BivariatePoly> ps;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < total; ++v) {
      std::string s(n, '0');
      for (std::size_t i = 0; i < n; ++i) s[i] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
      ms.push_back(composition_multiset(Alphabet::binary(), s));
      ps.push_back(self_reciprocal_product(s));
      const std::uint64_t ones_from_multiset = layer_union(ms.back(), n)[1];
      const std::uint64_t ones_from_poly = ps.back().y_degree() / 2;
      if (ones_from_multiset != ones_from_poly) ++bad;
      groups[ones_from_multiset].push_back(ms.size() - 1);
    }
    std::uint64_t in_group = 0;
    for (const auto& [ones, members] : groups) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const bool by_multiset = ms[members[a]] == ms[members[b]];
          const bool by_poly = ps[members[a]] == ps[members[b]];
          ++in_group;
          equal += by_multiset;
          if (by_multiset != by_poly) ++bad;
        }
      }
    }
    pairs += total * (total - 1) / 2;
    skipped += total * (total - 1) / 2 - in_group;
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(skipped) + " skipped by composition, " +
                        std::to_string(equal) + " equicomposable, " + std::to_string(bad) + " disagreements"};
}

Outcome cyclotomic_identities() {
  bool ok = true;
  for (std::uint64_t m = 1; m <= 200; ++m) {
    UnivariatePoly product({1});
    for (auto d : divisors(m)) product = product * cyclotomic(d);
    ok = ok && product == UnivariatePoly::x_pow_minus_one(m);
    if (m >= 2) ok = ok && cyclotomic(m).is_palindromic();
  }
  const std::vector<std::string> printed = {"x-1", "x+1", "x^2+x+1", "x^2+1", "x^4+x^3+x^2+x+1", "x^2-x+1"};
  for (std::uint64_t d = 1; d <= 6; ++d) ok = ok && strip_spaces(cyclotomic(d).to_string()) == printed[d - 1];
  return {ok, "product identity and palindromicity for m <= 200, table for d <= 6"};
}

Outcome engine_oracle_agreement() {
  std::uint64_t classes = 0, mismatches = 0;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (const auto& c : table(n).classes) {
      ++classes;
      const auto got = reconstruct_all(composition_multiset(Alphabet::binary(), c.front()));
      if (got != std::set<std::string>(c.begin(), c.end())) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(classes) + " classes, " + std::to_string(mismatches) + " mismatches"};
}

Outcome constructions() {
  const auto family = reversal_family({"01", "01", "01"});
  bool ok = family.size() == 8;
  std::set<std::string> texts;
  for (const auto& s : family) {
    ok = ok && s.size() == 26;
    texts.insert(to_text(composition_multiset(Alphabet::binary(), s)));
  }
  ok = ok && texts.size() == 1;

  const auto [a, b] = crlcnf_pair({"010", "001"}, "01", "0");
  ok = ok && a == "01000101010000100011001" && b == "01010100010000110010001";
  ok = ok && composition_multiset(Alphabet::binary(), a) == composition_multiset(Alphabet::binary(), b);
  ok = ok && interleave_factorize(a).factors.size() == 1 && interleave_factorize(b).factors.size() == 1;
  return {ok, std::to_string(family.size()) + " family members, 23-bit pair checked"};
}

Outcome randomized_runtime() {
  char buf[256];
  const auto four = ell_statistics(1000, 4, 10000, kStatsSeed);
  std::vector<double> ratios;
  for (std::uint64_t m = 1; m <= 3; ++m) {
    if (four.at_least(m) >= kTailMinCount && four.at_least(m + 1) >= kTailMinCount) {
      ratios.push_back(static_cast<double>(four.at_least(m + 1)) / static_cast<double>(four.at_least(m)));
    }
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const bool tail_ok = ratios.size() >= 2 && *hi / *lo < kTailRatioSpread;

  const double n = 10000;
  const auto three = ell_statistics(10000, 3, 1000, kStatsSeed);
  const auto two = ell_statistics(10000, 2, 1000, kStatsSeed);
  const double bound3 = 0.84 * std::log(n) + 0.84 * kEulerGamma;
  const double bound2 = 1.9 * std::sqrt(n) + 0.84 * kEulerGamma;
  std::snprintf(buf, sizeof buf, "k=4 ratios %zu spread %.3f; k=3 mean %.3f < %.3f; k=2 mean %.3f < %.3f",
                ratios.size(), ratios.empty() ? 0.0 : *hi / *lo, three.mean, bound3, two.mean, bound2);
  return {tail_ok && three.mean < bound3 && two.mean < bound2, buf};
}

Outcome collision_bounds() {
  std::uint64_t checked = 0, violations = 0;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t k = 2; k <= 6; ++k) {
      ++checked;
      if (!check_collision_bound(n, k).within) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " grid points, " + std::to_string(violations) + " violations"};
}

Outcome scaling() {
  std::mt19937_64 rng(kScalingSeed);
  const Alphabet acgt("ACGT");
  std::vector<double> ratios;
  std::string detail;
  bool found_all = true;
  for (std::uint64_t n : {250, 500, 1000, 2000}) {
    std::vector<double> seconds;
    for (int r = 0; r < kScalingRepeats; ++r) {
      std::string s(n, 'A');
      for (auto& c : s) c = acgt.symbol(((rng() >> 32) * 4) >> 32);
      const auto m = composition_multiset(acgt, s);
      const auto start = std::chrono::steady_clock::now();
      const auto result = reconstruct_first(m);
      seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      found_all = found_all && result.strings.count(s) == 1;
    }
    std::nth_element(seconds.begin(), seconds.begin() + kScalingRepeats / 2, seconds.end());
    const double median = seconds[kScalingRepeats / 2];
    const double nd = static_cast<double>(n);
    ratios.push_back(median / (nd * nd * std::log(nd)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%llu %.4fs ", static_cast<unsigned long long>(n), median);
    detail += buf;
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  char buf[64];
  std::snprintf(buf, sizeof buf, "spread %.3f", *hi / *lo);
  return {found_all && *hi / *lo <= kScalingSpread, detail + buf};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "every binary class has size <= 2 for n <= 7", 5, reconstructable_up_to_7},
      {2, "E_8 = 4 and the class of 01001101", 5, length_eight_confusion},
      {3, "e_15 = 4 and e_8 = 4 at prime-power lengths", 120, prime_power_exactness},
      {4, "e_n = 2 for n in {4,6,9,10,12,13}", 60, prime_lengths},
      {5, "bound envelope for n <= 15", 1, bound_envelope},
      {6, "multiset equality iff P*P^R equality, n <= 10", 600, algebraic_equivalence},
      {7, "cyclotomic identities", 5, cyclotomic_identities},
      {8, "engine matches oracle classes, n <= 12", 600, engine_oracle_agreement},
      {9, "reversal family and 23-bit pair", 5, constructions},
      {10, "random-string ell statistics", 120, randomized_runtime},
      {11, "collision probability bounds, n <= 12, k in 2..6", 30, collision_bounds},
      {12, "reconstruction time scales as n^2 log n", 600, scaling},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s  %2d  %s: %s (%.2fs of %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), elapsed,
                c.budget_seconds, in_time ? "" : " over time");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
