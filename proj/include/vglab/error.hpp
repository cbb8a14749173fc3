#pragma once

#include <stdexcept>
#include <string>

namespace vglab {

/// Input could not be read at all (bad JSON, malformed rational, ...).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Input parsed but violates a structural law or an operation precondition;
/// the message carries the violated law and a witness when one exists.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vglab
