#pragma once

#include <stdexcept>
#include <string>

namespace hodgecone {

// Raised when an input diamond/file violates a structural invariant.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised for malformed parameters (bad ranges, unknown names, parse failures).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hodgecone
