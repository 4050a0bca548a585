#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroVectorError : public Error {
 public:
  ZeroVectorError() : Error("zero vector has no primitive form") {}
};

class DependentGeneratorsError : public Error {
 public:
  DependentGeneratorsError() : Error("generators are linearly dependent") {}
};

class BadIndexError : public Error {
 public:
  explicit BadIndexError(const std::string& w) : Error(w) {}
};

class NotAConeError : public Error {
 public:
  explicit NotAConeError(const std::string& w) : Error(w) {}
};

class DimensionTooSmallError : public Error {
 public:
  explicit DimensionTooSmallError(const std::string& w) : Error(w) {}
};

class NotCompleteError : public Error {
 public:
  explicit NotCompleteError(const std::string& w) : Error(w) {}
};

class NotPrimitiveError : public Error {
 public:
  explicit NotPrimitiveError(const std::string& w) : Error(w) {}
};

class NotFanoError : public Error {
 public:
  explicit NotFanoError(const std::string& w) : Error(w) {}
};

class UnknownBuiltinError : public Error {
 public:
  explicit UnknownBuiltinError(const std::string& w) : Error(w) {}
};

// Impossible on smooth complete fans; kept as a consistency trap.
class NonIntegralRelationError : public Error {
 public:
  explicit NonIntegralRelationError(const std::string& w) : Error(w) {}
};

// The two Fano criteria disagreed; a bug, never a property of the input.
class CriterionMismatchError : public Error {
 public:
  explicit CriterionMismatchError(const std::string& w) : Error(w) {}
};

// Violation of an invariant that is a theorem for validated inputs.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& w) : Error(w) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace toric
