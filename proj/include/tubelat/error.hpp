#pragma once

#include <stdexcept>
#include <string>

namespace tubelat {

// Malformed input: bad graph parameters, non-tubes, invalid trees or words.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tubelat
