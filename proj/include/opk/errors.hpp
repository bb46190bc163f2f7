#pragma once

#include <stdexcept>
#include <string>

namespace opk {

// Bad user input (CLI exit code 2).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation asked for data outside the truncation window of an object.
struct window_error : std::runtime_error {
  explicit window_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis-count cap exceeded (OPK_MAX_BASIS).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace opk
