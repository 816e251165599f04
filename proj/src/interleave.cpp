#include "compreco/interleave.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "compreco/cyclotomic.hpp"

namespace compreco {

std::string reversed(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

std::string interleave(std::string_view s, std::string_view t) {
  std::string out;
  out.reserve((s.size() + 1) * (t.size() + 1) - 1);
  out += s;
  for (char c : t) {
    out.push_back(c);
    out += s;
  }
  return out;
}

std::string InterleaveFactorization::fold() const {
  if (factors.empty()) return {};
  std::string acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = interleave(acc, factors[i]);
  return acc;
}

namespace {

// If s = u o v with |u| = block - 1, returns v.
std::optional<std::string> split_with_block(std::string_view s, std::size_t block) {
  const std::size_t copies = (s.size() + 1) / block;
  const std::string_view u = s.substr(0, block - 1);
  std::string v;
  v.reserve(copies - 1);
  for (std::size_t j = 0; j < copies; ++j) {
    if (s.substr(j * block, block - 1) != u) return std::nullopt;
    if (j + 1 < copies) v.push_back(s[j * block + block - 1]);
  }
  return v;
}

}  // namespace

InterleaveFactorization interleave_factorize(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("cannot factor the empty string");
  InterleaveFactorization result;
  std::string rest(s);
  while (true) {
    bool split = false;
    for (std::uint64_t block : divisors(rest.size() + 1)) {
      if (block == 1 || block == rest.size() + 1) continue;
      if (auto v = split_with_block(rest, block)) {
        result.factors.push_back(rest.substr(0, block - 1));
        rest = std::move(*v);
        split = true;
        break;
      }
    }
    if (!split) {
      result.factors.push_back(std::move(rest));
      return result;
    }
  }
}

std::set<std::string> reversal_family(const std::vector<std::string>& factors) {
  if (factors.empty()) throw std::invalid_argument("reversal_family needs at least one factor");
  if (factors.size() >= 63) throw std::invalid_argument("too many factors");
  std::set<std::string> out;
  const std::uint64_t combos = std::uint64_t{1} << factors.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    InterleaveFactorization f;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      f.factors.push_back((mask >> i) & 1 ? reversed(factors[i]) : factors[i]);
    }
    out.insert(f.fold());
  }
  return out;
}

std::vector<std::string> lower_bound_factors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  std::vector<std::string> factors;
  for (const auto& [p, e] : factorize(n + 1)) {
    if (p == 2) {
      if (e % 2 == 1) factors.emplace_back("0");
      for (std::uint32_t i = 0; i < e / 2; ++i) factors.emplace_back("001");
    } else {
      for (std::uint32_t i = 0; i < e; ++i) factors.push_back(std::string(p - 2, '0') + "1");
    }
  }
  return factors;
}

std::set<std::string> lower_bound_witness(std::uint64_t n) { return reversal_family(lower_bound_factors(n)); }

std::pair<std::string, std::string> crlcnf_pair(const std::vector<std::string>& parts, std::string_view core,
                                                std::string_view separators) {
  if (parts.empty()) throw std::invalid_argument("need at least one part");
  if (separators.size() + 1 != parts.size()) {
    throw std::invalid_argument("expected " + std::to_string(parts.size() - 1) + " separator symbols, got " +
                                std::to_string(separators.size()));
  }
  auto sorted = [](std::string s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  const std::string reference = sorted(parts.front());
  for (const auto& part : parts) {
    if (sorted(part) != reference) throw std::invalid_argument("parts do not share one composition");
  }
  const std::string core_rev = reversed(core);
  std::string first, second;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) {
      first.push_back(separators[i - 1]);
      second.push_back(separators[i - 1]);
    }
    first += interleave(parts[i], core);
    second += interleave(parts[i], core_rev);
  }
  return {first, second};
}

}  // namespace compreco
