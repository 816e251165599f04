#include "compreco/bivariate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace compreco {

BivariatePoly BivariatePoly::constant(Integer c) { return term(0, 0, std::move(c)); }

BivariatePoly BivariatePoly::term(std::uint32_t x_exp, std::uint32_t y_exp, Integer c) {
  BivariatePoly p;
  p.add_term({x_exp, y_exp}, c);
  return p;
}

void BivariatePoly::add_term(Monomial m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BivariatePoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t BivariatePoly::x_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_exp);
  return d;
}

std::uint32_t BivariatePoly::y_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y_exp);
  return d;
}

std::uint64_t BivariatePoly::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.total(); }

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, ca * cb);
  }
  return r;
}

BivariatePoly multiply(const BivariatePoly& p, const BivariatePoly& q) { return p * q; }

BivariatePoly reciprocal(const BivariatePoly& p) {
  const std::uint32_t dx = p.x_degree();
  const std::uint32_t dy = p.y_degree();
  BivariatePoly r;
  for (const auto& [m, c] : p.terms()) r.add_term({dx - m.x_exp, dy - m.y_exp}, c);
  return r;
}

bool is_palindromic(const BivariatePoly& p) { return p == reciprocal(p); }

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto factor = [&mono](char var, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor('x', m.x_exp);
    factor('y', m.y_exp);
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
  }
  return out;
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse polynomial \"") + std::string(text) + "\": " + why);
  };
  auto read_digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  };

  BivariatePoly result;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer coefficient = 1;
    Monomial m;
    bool any = false;
    while (true) {
      if (pos >= s.size()) fail("dangling operator");
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coefficient *= Integer(read_digits());
      } else if (c == 'x' || c == 'y') {
        ++pos;
        std::uint32_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        (c == 'x' ? m.x_exp : m.y_exp) += e;
      } else {
        fail("unexpected character");
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    result.add_term(m, negative ? Integer(-coefficient) : coefficient);
  }
  return result;
}

}  // namespace compreco
