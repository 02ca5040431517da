#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

// Bad user input: out-of-range parameters, unknown presets, malformed files.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape violations: mismatched dimensions, dependent bases, broken invariants
// of input data.
class StructuralError : public std::runtime_error {
public:
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal cross-checks failed; signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace delpezzo
