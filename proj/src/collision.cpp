#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <functional>
#include <stdexcept>

#include "compreco/errors.hpp"
#include "compreco/oracle.hpp"

namespace compreco {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Integer factorial(std::uint64_t n) {
  Integer f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  Integer b = 1;
  for (std::uint64_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace

Rational collision_probability(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k == 0) throw std::invalid_argument("alphabet size must be positive");
  const Integer compositions = binomial(n + k - 1, k - 1);
  if (compositions > cap) {
    throw CapExceeded(compositions.str() + " compositions exceed the cap of " + std::to_string(cap));
  }
  std::vector<Integer> fact(n + 1);
  fact[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;

  // Sum over i_1 + ... + i_k = n of multinomial(n; i)^2.
  Integer sum = 0;
  std::function<void(std::uint64_t, std::uint64_t, const Integer&)> walk = [&](std::uint64_t part, std::uint64_t left,
                                                                               const Integer& denom) {
    if (part + 1 == k) {
      const Integer multinomial = fact[n] / (denom * fact[left]);
      sum += multinomial * multinomial;
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) walk(part + 1, left - c, denom * fact[c]);
  };
  walk(0, n, Integer(1));

  Integer strings = 1;
  for (std::uint64_t i = 0; i < n; ++i) strings *= k;
  return Rational(sum, strings * strings);
}

CollisionCheck check_collision_bound(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("n and k must be positive");
  CollisionCheck check;
  check.exact = collision_probability(n, k);
  check.exact_value = check.exact.convert_to<double>();
  check.factorial_branch = k >= n;

  Real bound;
  if (check.factorial_branch) {
    Integer kn = 1;
    for (std::uint64_t i = 0; i < n; ++i) kn *= k;
    check.rational_bound = Rational(factorial(n), kn);
    check.within = check.exact <= *check.rational_bound;
    bound = Real(numerator(*check.rational_bound)) / Real(denominator(*check.rational_bound));
  } else {
    const Real pi = boost::math::constants::pi<Real>();
    const Real kr(k), nr(n);
    bound = pow(kr, kr / 2) * exp(Real(1) / (12 * nr)) / pow(2 * pi * nr, (kr - 1) / 2);
    const Real exact = Real(numerator(check.exact)) / Real(denominator(check.exact));
    check.within = exact <= bound;
  }
  check.bound_value = bound.convert_to<double>();
  check.bound_decimal = bound.str(50);
  return check;
}

}  // namespace compreco
