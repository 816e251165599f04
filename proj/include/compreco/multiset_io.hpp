#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "compreco/multiset.hpp"

namespace compreco {

// Text format:
//   n=<int> alphabet=<symbols in order>
//   <c1>,<c2>,...,<ck> x<multiplicity>      (one line per composition,
//                                            canonical order)

/// Canonical serialization. Uses the declared length when present and
/// validate() otherwise.
std::string to_text(const CompositionMultiset& s);
void write_multiset(std::ostream& out, const CompositionMultiset& s);

/// Parses the text format. Throws InvalidMultiset on malformed input or
/// repeated compositions. The result is not validated.
CompositionMultiset parse_multiset(std::istream& in);
CompositionMultiset parse_multiset(std::string_view text);

/// One string per line; blank lines are skipped.
std::vector<std::string> read_strings(std::istream& in);

}  // namespace compreco
