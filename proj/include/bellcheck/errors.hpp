#pragma once

#include <stdexcept>
#include <string>

namespace bellcheck {

/// Malformed input: bad file contents, unknown identifiers, violated
/// preconditions. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Conditioning on a null event. Kept distinct so callers can tell a
/// genuinely undefined conditional from a malformed model.
class NullConditional : public InputError {
 public:
  explicit NullConditional(const std::string& what) : InputError(what) {}
};

}  // namespace bellcheck
