#include "compreco/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace compreco {

UnivariatePoly::UnivariatePoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::monomial(std::size_t degree, Integer coefficient) {
  std::vector<Integer> c(degree + 1);
  c[degree] = std::move(coefficient);
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::x_pow_minus_one(std::size_t m) {
  std::vector<Integer> c(m + 1);
  c[0] = -1;
  c[m] += 1;
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(c));
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Integer> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  const Integer& lead = b.coeffs_.back();
  if (rem.size() <= db) return {UnivariatePoly{}, a};
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw std::domain_error("division is not exact over the integers");
    Integer q = rem[i] / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs_[j];
    quot[i - db] = std::move(q);
  }
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::reciprocal() const {
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return UnivariatePoly(std::move(c));
}

std::string UnivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) {
      out += magnitude.str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace compreco
