#include "compreco/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace compreco {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (symbols_.size() > 255) throw std::invalid_argument("alphabet has more than 255 symbols");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto byte = static_cast<unsigned char>(symbols_[i]);
    if (!std::isgraph(byte)) throw std::invalid_argument("alphabet symbols must be visible characters");
    if (index_[byte] >= 0) throw std::invalid_argument(std::string("repeated alphabet symbol '") + symbols_[i] + "'");
    index_[byte] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string distinct(text);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.find_first_not_of("01") == std::string::npos) return binary();
  return Alphabet(distinct);
}

std::optional<Symbol> Alphabet::find(char c) const {
  const auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<Symbol>(i);
}

Symbol Alphabet::index(char c) const {
  if (auto i = find(c)) return *i;
  throw std::invalid_argument(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
}

bool Alphabet::contains(std::string_view text) const {
  return std::all_of(text.begin(), text.end(), [this](char c) { return find(c).has_value(); });
}

std::vector<Symbol> Alphabet::encode(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(index(c));
  return out;
}

std::string Alphabet::decode(const std::vector<Symbol>& symbols) const {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(symbols_.at(s));
  return out;
}

}  // namespace compreco
