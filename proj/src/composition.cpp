#include "compreco/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace compreco {

Composition::Composition(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)), weight_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}

Composition Composition::of(const Alphabet& alphabet, std::string_view text) {
  Composition c(alphabet.size());
  for (char ch : text) c.add(alphabet.index(ch));
  return c;
}

void Composition::add(std::size_t symbol, std::uint32_t times) {
  counts_.at(symbol) += times;
  weight_ += times;
}

Composition& Composition::operator+=(const Composition& other) {
  if (other.size() != size()) throw std::invalid_argument("composition arity mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  weight_ += other.weight_;
  return *this;
}

Composition& Composition::operator-=(const Composition& other) {
  if (other.size() != size()) throw std::invalid_argument("composition arity mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < other.counts_[i]) throw std::domain_error("composition difference has a negative count");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  weight_ -= other.weight_;
  return *this;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.counts_.begin(), a.counts_.end(), b.counts_.begin(),
                                                b.counts_.end());
}

std::string Composition::to_string(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    out.push_back(alphabet.symbol(i));
    if (counts_[i] > 1) out += "^" + std::to_string(counts_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace compreco
