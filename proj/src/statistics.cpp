#include <numeric>
#include <random>
#include <stdexcept>

#include "compreco/oracle.hpp"
#include "compreco/reconstruct.hpp"

namespace compreco {

std::uint64_t EllDistribution::at_least(std::uint64_t m) const {
  std::uint64_t count = 0;
  for (std::uint64_t l = m; l < histogram.size(); ++l) count += histogram[l];
  return count;
}

double EllDistribution::tail(std::uint64_t m) const {
  return trials == 0 ? 0.0 : static_cast<double>(at_least(m)) / static_cast<double>(trials);
}

EllDistribution ell_statistics(std::uint64_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed) {
  if (k < 2 || k > 255) throw std::invalid_argument("alphabet size must be in 2..255");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  if (n == 0) throw std::invalid_argument("length must be positive");

  EllDistribution dist;
  dist.k = k;
  dist.n = n;
  dist.trials = trials;
  dist.seed = seed;
  dist.generator = "mt19937_64";

  std::mt19937_64 rng(seed);
  std::vector<Symbol> s(n);
  double sum = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (auto& c : s) c = static_cast<Symbol>(((rng() >> 32) * k) >> 32);
    const std::uint64_t l = ell(s);
    if (l >= dist.histogram.size()) dist.histogram.resize(l + 1, 0);
    ++dist.histogram[l];
    sum += static_cast<double>(l);
  }
  dist.mean = sum / static_cast<double>(trials);
  return dist;
}

}  // namespace compreco
