#include "compreco/reconstruct.hpp"

#include <algorithm>

namespace compreco {

std::uint64_t ell(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  const std::size_t k = static_cast<std::size_t>(*std::max_element(s.begin(), s.end())) + 1;
  // diff[c] = (# of c in prefix) - (# of c in suffix); unequal tracks nonzero entries.
  std::vector<std::int64_t> diff(k, 0);
  std::size_t unequal = 0;
  auto bump = [&](Symbol c, std::int64_t delta) {
    const bool was_zero = diff[c] == 0;
    diff[c] += delta;
    const bool is_zero = diff[c] == 0;
    if (was_zero && !is_zero) ++unequal;
    if (!was_zero && is_zero) --unequal;
  };
  std::uint64_t count = 0;
  for (std::size_t i = 1; 2 * i < n; ++i) {
    bump(s[i - 1], +1);
    bump(s[n - i], -1);
    if (unequal == 0 && s[i] != s[n - 1 - i]) ++count;
  }
  return count;
}

std::uint64_t ell(const Alphabet& alphabet, std::string_view s) {
  const auto symbols = alphabet.encode(s);
  return ell(symbols);
}

EllStats ell_stats(const Alphabet& alphabet, std::string_view s) {
  EllStats stats;
  stats.ell = ell(alphabet, s);
  for (const auto& t : reconstruct_all(composition_multiset(alphabet, s))) {
    stats.big_l = std::max(stats.big_l, ell(alphabet, t));
  }
  return stats;
}

}  // namespace compreco
