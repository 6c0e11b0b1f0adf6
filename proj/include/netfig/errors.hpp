#pragma once

#include <stdexcept>
#include <string>

namespace netfig {

enum class ErrorKind {
  Parse,             // malformed cell, number, color expression, ...
  InvalidOption,     // value out of range or unknown token
  MissingColumn,     // required CSV column absent
  BooleanCellMissing,// boolean column present but cell left empty
  DuplicateVertexId,
  UnknownEndpoint,
  UnknownPathRef,
  UnknownColor,
  DegenerateEdge,
  Io,
  Usage,
};

// Single exception type for all input-level failures. The kind keeps errors
// testable; the message carries file/row/column context where applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netfig
