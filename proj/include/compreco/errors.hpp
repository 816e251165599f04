#pragma once

#include <stdexcept>
#include <string>

namespace compreco {

// Domain errors. Usage problems (bad flags, empty inputs) are reported with
// std::invalid_argument instead.

/// The composition multiset is not the multiset of any string.
class InvalidMultiset : public std::runtime_error {
 public:
  explicit InvalidMultiset(const std::string& what) : std::runtime_error("invalid multiset: " + what) {}
};

/// The search tree (within the guess budget) produced no string.
class NoSolution : public std::runtime_error {
 public:
  explicit NoSolution(const std::string& what) : std::runtime_error("no solution: " + what) {}
};

class NotGenerating : public std::runtime_error {
 public:
  explicit NotGenerating(const std::string& what) : std::runtime_error("not a generating polynomial: " + what) {}
};

/// An exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error("cap exceeded: " + what) {}
};

}  // namespace compreco
