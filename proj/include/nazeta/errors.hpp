#pragma once

// Error taxonomy. Three classes, matching the CLI exit codes:
//   input_error   (1)  malformed or out-of-domain input, budget exceeded
//   math_error    (2)  an exact consistency check failed (functional equation,
//                      coefficient recurrences disagreeing, non-integral counts)
//   numeric_error (3)  a floating-point iteration or quadrature did not converge

#include <stdexcept>
#include <string>

namespace nazeta {

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nazeta
