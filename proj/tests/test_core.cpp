#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "compreco/errors.hpp"
#include "compreco/multiset.hpp"
#include "compreco/multiset_io.hpp"

using namespace compreco;

namespace {

brute::Multiset as_brute(const CompositionMultiset& s) {
  brute::Multiset m;
  for (const auto& [c, mult] : s.entries()) {
    std::vector<int> v(c.counts().begin(), c.counts().end());
    m[v] += static_cast<int>(mult);
  }
  return m;
}

Composition comp(std::vector<std::uint32_t> counts) { return Composition(std::move(counts)); }

}  // namespace

TEST_CASE("alphabet") {
  CHECK(Alphabet::infer("0010").size() == 2);
  CHECK(Alphabet::infer("CAB").symbol(0) == 'A');
  CHECK(Alphabet::infer("111") == Alphabet::binary());
  CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::binary().index('2'), std::invalid_argument);
}

TEST_CASE("composition order and rendering") {
  const Alphabet abc("ABC");
  CHECK(Composition::of(abc, "ABAC").to_string(abc) == "A^2BC");
  CHECK(comp({1, 0}) < comp({0, 2}));  // weight first
  CHECK(comp({0, 1}) < comp({1, 0}));  // then counts lexicographically
  CHECK_THROWS_AS(comp({1, 0}) - comp({0, 1}), std::domain_error);
}

TEST_CASE("composition multiset examples") {
  const Alphabet bin = Alphabet::binary();
  const auto s001 = composition_multiset(bin, "001");
  CHECK(s001.multiplicity(comp({1, 0})) == 2);
  CHECK(s001.multiplicity(comp({0, 1})) == 1);
  CHECK(s001.multiplicity(comp({2, 0})) == 1);
  CHECK(s001.multiplicity(comp({1, 1})) == 1);
  CHECK(s001.multiplicity(comp({2, 1})) == 1);
  CHECK(s001.distinct() == 5);

  const auto s010 = composition_multiset(bin, "010");
  CHECK(s010.multiplicity(comp({1, 0})) == 2);
  CHECK(s010.multiplicity(comp({0, 1})) == 1);
  CHECK(s010.multiplicity(comp({1, 1})) == 2);
  CHECK(s010.multiplicity(comp({2, 1})) == 1);
  CHECK(s010.distinct() == 4);

  const auto a = composition_multiset("A");
  CHECK(a.total() == 1);
  CHECK(a.distinct() == 1);
}

TEST_CASE("composition multiset matches brute force on random strings") {
  std::mt19937_64 rng(11);
  for (const std::string symbols : {"01", "ACGT", "xyz"}) {
    const Alphabet alphabet(symbols);
    for (int t = 0; t < 200; ++t) {
      const auto s = brute::random_string(rng, 1 + rng() % 20, symbols);
      const auto m = composition_multiset(alphabet, s);
      CHECK(as_brute(m) == brute::multiset(s, symbols));
      CHECK(validate(m) == s.size());
      CHECK(m == composition_multiset(alphabet, brute::rev(s)));
    }
  }
}

TEST_CASE("validate") {
  const Alphabet bin = Alphabet::binary();
  CHECK(validate(composition_multiset(bin, "001")) == 3);
  CHECK(validate(CompositionMultiset(bin, {{comp({1, 0}), 1}})) == 1);
  CHECK_THROWS_AS(validate(CompositionMultiset(bin, {{comp({1, 0}), 2}, {comp({0, 1}), 1}})), InvalidMultiset);
  // Right layer sizes but the weight-2 layer disagrees with the singles.
  CHECK_THROWS_AS(validate(CompositionMultiset(bin, {{comp({1, 0}), 2}, {comp({0, 2}), 1}})), InvalidMultiset);
  // Declared length must agree.
  CHECK_THROWS_AS(validate(CompositionMultiset(bin, {{comp({1, 0}), 1}}, 2)), InvalidMultiset);
}

TEST_CASE("layer unions") {
  const Alphabet abc("ABC");
  const auto s = composition_multiset(abc, "ABAC");
  CHECK(layer_union(s, 1).to_string(abc) == "A^2BC");
  CHECK(layer_union(s, 2).to_string(abc) == "A^3B^2C");
  CHECK(layer_union(s, 4) == Composition::of(abc, "ABAC"));
  CHECK_THROWS_AS(layer_union(s, 0), std::out_of_range);
  CHECK_THROWS_AS(layer_union(s, 5), std::out_of_range);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto str = brute::random_string(rng, 1 + rng() % 25, "ABC");
    const auto m = composition_multiset(abc, str);
    const std::uint64_t n = str.size();
    for (std::uint64_t i = 1; i <= n / 2; ++i) CHECK(layer_union(m, n + 1 - i) == layer_union(m, i));
  }
}

TEST_CASE("mirror pairs") {
  const Alphabet abc("ABC");
  auto read_off = [](const Alphabet& alphabet, const std::string& s) {
    MirrorPairs p;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
      const Symbol a = alphabet.index(s[i]), b = alphabet.index(s[n - 1 - i]);
      p.pairs.push_back({std::min(a, b), std::max(a, b)});
    }
    if (n % 2 == 1) p.middle = alphabet.index(s[n / 2]);
    return p;
  };

  const auto acab = mirror_pairs(composition_multiset(abc, "ACAB"));
  REQUIRE(acab.pairs.size() == 2);
  CHECK(acab.pairs[0] == SymbolPair{0, 1});
  CHECK(acab.pairs[1] == SymbolPair{0, 2});
  CHECK(!acab.middle);

  const auto zz = mirror_pairs(composition_multiset(Alphabet::binary(), "00"));
  REQUIRE(zz.pairs.size() == 1);
  CHECK(zz.pairs[0] == SymbolPair{0, 0});

  const auto z1z = mirror_pairs(composition_multiset(Alphabet::binary(), "010"));
  REQUIRE(z1z.pairs.size() == 1);
  CHECK(z1z.pairs[0] == SymbolPair{0, 0});
  CHECK(z1z.middle == Symbol{1});

  std::mt19937_64 rng(5);
  for (const std::string symbols : {"01", "ABC", "ACGT"}) {
    const Alphabet alphabet(symbols);
    for (int t = 0; t < 200; ++t) {
      const auto s = brute::random_string(rng, 1 + rng() % 30, symbols);
      const auto expected = read_off(alphabet, s);
      const auto got = mirror_pairs(composition_multiset(alphabet, s));
      CHECK(got.pairs == expected.pairs);
      CHECK(got.middle == expected.middle);
    }
  }
}

TEST_CASE("projection") {
  const Alphabet abc("ABC");
  const auto acab = composition_multiset(abc, "ACAB");
  CHECK(project(acab, "A") == composition_multiset(Alphabet::binary(), "1010"));
  CHECK(project(acab, "B") == composition_multiset(Alphabet::binary(), "0001"));
  CHECK(project(acab, "") == composition_multiset(Alphabet::binary(), "0000"));

  std::mt19937_64 rng(9);
  const std::string symbols = "ACGT";
  const Alphabet acgt(symbols);
  for (int t = 0; t < 100; ++t) {
    const auto s = brute::random_string(rng, 1 + rng() % 20, symbols);
    std::string ones;
    for (char c : symbols) {
      if (rng() % 2) ones += c;
    }
    std::string image = s;
    for (auto& c : image) c = ones.find(c) == std::string::npos ? '0' : '1';
    CHECK(project(composition_multiset(acgt, s), ones) == composition_multiset(Alphabet::binary(), image));
  }
}

TEST_CASE("turnpike reduction") {
  const Alphabet bin = Alphabet::binary();
  CHECK(to_turnpike(composition_multiset(bin, "1011")) ==
        std::vector<std::uint64_t>{1, 5, 5, 5, 6, 6, 10, 11, 11, 16});
  CHECK(to_turnpike(composition_multiset(bin, "0")) == std::vector<std::uint64_t>{1});
  CHECK(to_turnpike(composition_multiset(bin, "01")) == std::vector<std::uint64_t>{1, 3, 4});
  CHECK_THROWS(to_turnpike(composition_multiset(Alphabet("ABC"), "ABC")));

  // a + b(n+1) is injective on compositions of weight at most n.
  for (std::uint64_t n = 1; n <= 30; ++n) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a <= n; ++a) {
      for (std::uint64_t b = 0; a + b <= n; ++b) CHECK(seen.insert(a + b * (n + 1)).second);
    }
  }
}

TEST_CASE("multiset text format") {
  const auto s = composition_multiset(Alphabet::binary(), "001");
  const std::string text = to_text(s);
  CHECK(text == "n=3 alphabet=01\n0,1 x1\n1,0 x2\n1,1 x1\n2,0 x1\n2,1 x1\n");
  CHECK(parse_multiset(text) == s);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto m = composition_multiset(Alphabet("ACGT"), brute::random_string(rng, 1 + rng() % 40, "ACGT"));
    CHECK(parse_multiset(to_text(m)) == m);
  }

  CHECK_THROWS_AS(parse_multiset("n=1 alphabet=01\n1,0 x0\n"), InvalidMultiset);
  CHECK_THROWS_AS(parse_multiset("n=1 alphabet=01\n1,0,0 x1\n"), InvalidMultiset);
  CHECK_THROWS_AS(parse_multiset("n=2 alphabet=01\n1,0 x1\n1,0 x1\n0,1 x1\n"), InvalidMultiset);
  CHECK_THROWS_AS(parse_multiset("alphabet=01\n1,0 x1\n"), InvalidMultiset);

  std::istringstream lines("0101\n\n0011\r\n");
  CHECK(read_strings(lines) == std::vector<std::string>{"0101", "0011"});
}
