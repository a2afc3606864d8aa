#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvalid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

/// Matching or tree that violates a structural precondition.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A word that is not balanced in a base where balance is required.
class BalanceError : public Error {
 public:
  using Error::Error;
};

/// Survey refused because the word space exceeds the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class JournalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pvalid
