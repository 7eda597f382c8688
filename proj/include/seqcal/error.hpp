#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqcal {

// Every failure the library reports derives from Error, so the CLI can map
// them to exit status 2 in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UndefinedAtomError : public Error {
 public:
  explicit UndefinedAtomError(const std::string& atom)
      : Error("undefined atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

class IsolatedVertexError : public Error {
 public:
  using Error::Error;
};

class EmptyWordError : public Error {
 public:
  EmptyWordError() : Error("words must be non-empty") {}
};

class RejectedResolution : public Error {
 public:
  using Error::Error;
};

class NoClashError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace seqcal
