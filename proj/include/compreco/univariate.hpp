#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "compreco/integer.hpp"

namespace compreco {

/// Dense integer polynomial in one variable; coefficient i multiplies x^i.
/// The leading stored coefficient is never zero.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Integer> coefficients);

  static UnivariatePoly monomial(std::size_t degree, Integer coefficient = 1);
  /// x^m - 1
  static UnivariatePoly x_pow_minus_one(std::size_t m);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) = default;

  /// Quotient and remainder over the integers. The divisor must be nonzero
  /// and every intermediate quotient coefficient must be an integer
  /// (always the case for monic divisors); otherwise std::domain_error.
  friend std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);

  /// x^deg * P(1/x)
  UnivariatePoly reciprocal() const;
  bool is_palindromic() const { return *this == reciprocal(); }

  /// Descending powers, e.g. "x^2 - x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace compreco
