#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compreco {

/// s o t = s t_1 s t_2 ... t_m s. Length (|s|+1)(|t|+1) - 1.
std::string interleave(std::string_view s, std::string_view t);

/// Unique maximal factorization under interleaving. Folding interleave
/// over `factors` from the left reproduces the original string, and no
/// factor can be split further.
struct InterleaveFactorization {
  std::vector<std::string> factors;

  std::string fold() const;
  friend bool operator==(const InterleaveFactorization&, const InterleaveFactorization&) = default;
};

/// Tries inner factor lengths in increasing order: the shortest u with
/// s = u o v is irreducible, and v is factored recursively.
InterleaveFactorization interleave_factorize(std::string_view s);

/// Every s~_1 o s~_2 o ... o s~_k with each s~_i either s_i or its
/// reversal. Duplicates (from palindromic factors) collapse.
std::set<std::string> reversal_family(const std::vector<std::string>& factors);

/// Factor list realizing the lower bound for length n: "0" for an odd power
/// of two, "001" for each remaining pair of twos, and 0^{p-2}1 once per
/// power of each odd prime p dividing n + 1.
std::vector<std::string> lower_bound_factors(std::uint64_t n);

/// reversal_family(lower_bound_factors(n)).
std::set<std::string> lower_bound_witness(std::uint64_t n);

/// ((s1 o s0) x1 (s2 o s0) x2 ... , (s1 o s0*) x1 (s2 o s0*) x2 ...).
/// Parts must share one composition and |separators| = |parts| - 1;
/// otherwise std::invalid_argument.
std::pair<std::string, std::string> crlcnf_pair(const std::vector<std::string>& parts, std::string_view core,
                                                std::string_view separators);

std::string reversed(std::string_view s);

}  // namespace compreco
