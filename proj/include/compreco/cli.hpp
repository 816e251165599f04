#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compreco {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 for domain errors and 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace compreco
