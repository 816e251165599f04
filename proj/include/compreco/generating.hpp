#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "compreco/bivariate.hpp"
#include "compreco/univariate.hpp"

namespace compreco {

// Generating polynomials of binary strings. A string over {0,1} maps to
// sum_i x^{a_i} y^{i - a_i}, where a_i counts the zeros among its first i
// bits. Non-binary input throws std::invalid_argument.

BivariatePoly generating_poly(std::string_view bits);

/// 0-1 coefficients, one term per total degree 0..n, and each term is the
/// previous one times x or times y.
bool is_generating(const BivariatePoly& p);

/// Inverse of generating_poly. Throws NotGenerating.
std::string string_of_generating(const BivariatePoly& p);

/// P_s P_s^* == P_t P_t^*. Throws std::invalid_argument on length mismatch.
bool equicomposable_poly(std::string_view s, std::string_view t);

/// P_s P_s^*, the polynomial fingerprint of the equicomposability class.
BivariatePoly self_reciprocal_product(std::string_view bits);

/// P(x, x), collected by total degree.
UnivariatePoly eval_diag(const BivariatePoly& p);

/// P_s(x,y) * P_t(x^{a+1} y^b, x^a y^{b+1}), which generates s o t when s
/// has a zeros and b ones.
BivariatePoly compose_interleave_poly(const BivariatePoly& ps, std::uint32_t a, std::uint32_t b,
                                      const BivariatePoly& pt);

}  // namespace compreco
