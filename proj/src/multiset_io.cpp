#include "compreco/multiset_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "compreco/errors.hpp"

namespace compreco {

namespace {

std::uint64_t parse_uint(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidMultiset(std::string("malformed ") + what + " \"" + std::string(text) + "\"");
  }
  return value;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void write_multiset(std::ostream& out, const CompositionMultiset& s) {
  const std::uint64_t n = s.declared_length() ? *s.declared_length() : validate(s);
  out << "n=" << n << " alphabet=" << s.alphabet().symbols() << '\n';
  for (const auto& [c, m] : s.entries()) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (a) out << ',';
      out << c[a];
    }
    out << " x" << m << '\n';
  }
}

std::string to_text(const CompositionMultiset& s) {
  std::ostringstream out;
  write_multiset(out, s);
  return out.str();
}

CompositionMultiset parse_multiset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidMultiset("missing header line");
  std::string_view header = strip_cr(line);
  const auto space = header.find(' ');
  if (header.substr(0, 2) != "n=" || space == std::string_view::npos ||
      header.substr(space + 1, 9) != "alphabet=") {
    throw InvalidMultiset("header must read 'n=<int> alphabet=<symbols>'");
  }
  const std::uint64_t n = parse_uint(header.substr(2, space - 2), "length");
  Alphabet alphabet = [&] {
    try {
      return Alphabet(std::string(header.substr(space + 10)));
    } catch (const std::invalid_argument& e) {
      throw InvalidMultiset(e.what());
    }
  }();
  const std::size_t k = alphabet.size();

  std::vector<CompositionMultiset::Entry> entries;
  std::set<Composition> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = strip_cr(line);
    if (body.empty()) continue;
    const auto sep = body.find(" x");
    if (sep == std::string_view::npos) {
      throw InvalidMultiset("line " + std::to_string(line_no) + ": expected '<counts> x<multiplicity>'");
    }
    std::vector<std::uint32_t> counts;
    std::string_view rest = body.substr(0, sep);
    while (true) {
      const auto comma = rest.find(',');
      const std::uint64_t v = parse_uint(rest.substr(0, comma), "count");
      if (v > UINT32_MAX) throw InvalidMultiset("count out of range");
      counts.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (counts.size() != k) {
      throw InvalidMultiset("line " + std::to_string(line_no) + ": " + std::to_string(counts.size()) +
                            " counts for an alphabet of " + std::to_string(k));
    }
    const std::uint64_t m = parse_uint(body.substr(sep + 2), "multiplicity");
    if (m == 0) throw InvalidMultiset("line " + std::to_string(line_no) + ": zero multiplicity");
    Composition c(std::move(counts));
    if (!seen.insert(c).second) {
      throw InvalidMultiset("line " + std::to_string(line_no) + ": composition listed twice");
    }
    entries.emplace_back(std::move(c), m);
  }
  return CompositionMultiset(std::move(alphabet), std::move(entries), n);
}

CompositionMultiset parse_multiset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_multiset(in);
}

std::vector<std::string> read_strings(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = strip_cr(line);
    if (!body.empty()) out.emplace_back(body);
  }
  return out;
}

}  // namespace compreco
