#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

enum class ErrorKind {
  Parse,
  UniverseMismatch,
  TruncationExceeded,
  NotReachable,
  MissingGeneratorAssignment,
  RingMismatch,
  EngineMismatch,
  SigmaStrategyFailed,
  ZeroElement,
  NotAcyclic,
  WrongShape,
  InvalidStructure,
  TooLarge,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& expected)
      : Error(ErrorKind::Parse,
              std::to_string(line) + ":" + std::to_string(col) + ": expected " + expected),
        line_(line), col_(col), expected_(expected) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_, col_;
  std::string expected_;
};

}  // namespace lpa
