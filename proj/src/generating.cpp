#include "compreco/generating.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "compreco/errors.hpp"

namespace compreco {

namespace {

void require_binary(std::string_view bits) {
  if (bits.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("generating polynomials need a string over {0,1}");
  }
}

// The terms of a generating polynomial sorted by total degree, if it is one.
std::optional<std::vector<Monomial>> generating_chain(const BivariatePoly& p) {
  if (p.is_zero()) return std::nullopt;
  std::vector<Monomial> chain;
  for (const auto& [m, c] : p.terms()) {
    if (c != 1) return std::nullopt;
    if (m.total() != chain.size()) return std::nullopt;
    if (!chain.empty()) {
      const Monomial& prev = chain.back();
      const bool times_x = m.x_exp == prev.x_exp + 1 && m.y_exp == prev.y_exp;
      const bool times_y = m.y_exp == prev.y_exp + 1 && m.x_exp == prev.x_exp;
      if (!times_x && !times_y) return std::nullopt;
    }
    chain.push_back(m);
  }
  return chain;
}

}  // namespace

BivariatePoly generating_poly(std::string_view bits) {
  require_binary(bits);
  BivariatePoly p = BivariatePoly::constant(1);
  Monomial m;
  for (char b : bits) {
    (b == '0' ? m.x_exp : m.y_exp) += 1;
    p.add_term(m, 1);
  }
  return p;
}

bool is_generating(const BivariatePoly& p) { return generating_chain(p).has_value(); }

std::string string_of_generating(const BivariatePoly& p) {
  auto chain = generating_chain(p);
  if (!chain) throw NotGenerating(p.to_string());
  std::string bits;
  for (std::size_t i = 1; i < chain->size(); ++i) bits.push_back((*chain)[i].x_exp > (*chain)[i - 1].x_exp ? '0' : '1');
  return bits;
}

BivariatePoly self_reciprocal_product(std::string_view bits) {
  const BivariatePoly p = generating_poly(bits);
  return p * reciprocal(p);
}

bool equicomposable_poly(std::string_view s, std::string_view t) {
  if (s.size() != t.size()) throw std::invalid_argument("strings differ in length");
  return self_reciprocal_product(s) == self_reciprocal_product(t);
}

UnivariatePoly eval_diag(const BivariatePoly& p) {
  std::vector<Integer> c(p.is_zero() ? 0 : p.total_degree() + 1);
  for (const auto& [m, coeff] : p.terms()) c[m.total()] += coeff;
  return UnivariatePoly(std::move(c));
}

BivariatePoly compose_interleave_poly(const BivariatePoly& ps, std::uint32_t a, std::uint32_t b,
                                      const BivariatePoly& pt) {
  BivariatePoly substituted;
  for (const auto& [m, c] : pt.terms()) {
    // (x^{a+1} y^b)^i (x^a y^{b+1})^j
    const std::uint64_t x = std::uint64_t{a + 1} * m.x_exp + std::uint64_t{a} * m.y_exp;
    const std::uint64_t y = std::uint64_t{b} * m.x_exp + std::uint64_t{b + 1} * m.y_exp;
    if (x > UINT32_MAX || y > UINT32_MAX) throw std::overflow_error("exponent overflow");
    substituted.add_term({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)}, c);
  }
  return ps * substituted;
}

}  // namespace compreco
