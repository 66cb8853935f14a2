#pragma once

#include <stdexcept>
#include <string>

namespace dmt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad input or violated precondition
struct DomainError : Error {
  using Error::Error;
};

// an internal invariant or certificate failed
struct IntegrityError : Error {
  using Error::Error;
};

struct OverflowError : IntegrityError {
  using IntegrityError::IntegrityError;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace dmt
