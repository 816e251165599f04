#include "compreco/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace compreco {

namespace {

struct CyclotomicTable {
  std::shared_mutex mutex;
  std::map<std::uint64_t, UnivariatePoly> polys;
};

CyclotomicTable& table() {
  static CyclotomicTable t;
  return t;
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

PrimeSignature factorize(std::uint64_t m) {
  PrimeSignature out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

const UnivariatePoly& cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.polys.find(d); it != t.polys.end()) return it->second;
  }
  UnivariatePoly product = UnivariatePoly::monomial(0);
  for (std::uint64_t e : divisors(d)) {
    if (e != d) product = product * cyclotomic(e);
  }
  auto [quotient, remainder] = divmod(UnivariatePoly::x_pow_minus_one(d), product);
  if (!remainder.is_zero()) throw std::logic_error("x^d - 1 not divisible by its lower cyclotomic factors");

  std::unique_lock lock(t.mutex);
  return t.polys.try_emplace(d, std::move(quotient)).first->second;
}

double BoundReport::upper_log2() const {
  return std::min(static_cast<double>(upper_pow2_log2), 1.23 * std::log2(static_cast<double>(n + 1)));
}

bool BoundReport::contains(const Integer& value) const {
  if (value < lower || value > upper_pow2) return false;
  return std::log2(value.convert_to<double>()) <= 1.23 * std::log2(static_cast<double>(n + 1));
}

BoundReport en_bounds(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  BoundReport r;
  r.n = n;
  r.prime_signature = factorize(n + 1);
  std::uint64_t divisor_count = 1;
  std::uint64_t lower_exp = 0;
  for (const auto& [p, e] : r.prime_signature) {
    divisor_count *= e + 1;
    lower_exp += p == 2 ? e / 2 : e;
  }
  r.divisor_count = divisor_count;
  r.lower_log2 = lower_exp;
  r.upper_pow2_log2 = divisor_count - 1;
  r.lower = Integer(1) << lower_exp;
  r.upper_pow2 = Integer(1) << (divisor_count - 1);
  r.upper_poly = std::pow(static_cast<double>(n + 1), 1.23);

  const auto& sig = r.prime_signature;
  const bool power_of_two = sig.size() == 1 && sig[0].first == 2;
  const bool odd_prime_power = sig.size() == 1 && sig[0].first != 2;
  const bool twice_odd_prime_power = sig.size() == 2 && sig[0].first == 2 && sig[0].second == 1;
  if (power_of_two) {
    r.exact = Integer(1) << (sig[0].second / 2);
  } else if (odd_prime_power) {
    r.exact = Integer(1) << sig[0].second;
  } else if (twice_odd_prime_power) {
    r.exact = Integer(1) << sig[1].second;
  }
  return r;
}

}  // namespace compreco
