#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "compreco/integer.hpp"

namespace compreco {

/// Exponent pair x^x_exp y^y_exp. Ordered by total degree, then x exponent.
struct Monomial {
  std::uint32_t x_exp = 0;
  std::uint32_t y_exp = 0;

  std::uint64_t total() const { return std::uint64_t{x_exp} + y_exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.x_exp <=> b.x_exp;
  }
};

/// Sparse bivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
class BivariatePoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  BivariatePoly() = default;
  static BivariatePoly constant(Integer c);
  static BivariatePoly term(std::uint32_t x_exp, std::uint32_t y_exp, Integer c = 1);

  /// Adds c * x^i y^j, pruning the term if it cancels.
  void add_term(Monomial m, const Integer& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(Monomial m) const;

  std::uint32_t x_degree() const;
  std::uint32_t y_degree() const;
  /// 0 for the zero polynomial.
  std::uint64_t total_degree() const;

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) = default;

  /// Canonical rendering, e.g. "1 + x + x*y" or "-2*x + 3*y + x*y".
  std::string to_string() const;
  /// Parses the rendering format (whitespace-insensitive; "x^2*y", "3*x",
  /// "- y" ...). Throws std::invalid_argument on malformed input.
  static BivariatePoly parse(std::string_view text);

 private:
  Terms terms_;
};

/// Exact product of sparse polynomials.
BivariatePoly multiply(const BivariatePoly& p, const BivariatePoly& q);

/// x^{deg_x P} y^{deg_y P} P(1/x, 1/y)
BivariatePoly reciprocal(const BivariatePoly& p);

/// P == P*
bool is_palindromic(const BivariatePoly& p);

}  // namespace compreco
