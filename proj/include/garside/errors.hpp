#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Base class of all errors thrown by this library.
class GarsideError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixing simples or elements that belong to different structures.
class StructureMismatchError : public GarsideError {
 public:
  using GarsideError::GarsideError;
};

/// Malformed group spec or word. Carries the byte offset of the offending
/// token in the input text.
class ParseError : public GarsideError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : GarsideError(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configurable resource cap (summit set member limit) was exceeded.
class ResourceLimitError : public GarsideError {
 public:
  using GarsideError::GarsideError;
};

/// An invariant guaranteed by the underlying theory failed. Signals an
/// implementation bug, never a property of the input.
class InternalConsistencyError : public GarsideError {
 public:
  using GarsideError::GarsideError;
};

}  // namespace garside
