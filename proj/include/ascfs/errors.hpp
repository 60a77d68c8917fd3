#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ascfs {

// Malformed textual input; line is 1-based within the offending stream.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Work refused because it would exceed a memory or capacity budget.
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ascfs
