#pragma once

#include <stdexcept>
#include <string>

namespace tsid {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An input exceeds a hard size guard (enumeration would not finish).
class SizeGuardError : public Error {
public:
  using Error::Error;
};

/// A counter exhausted its work budget. Never confused with a zero count.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed DGF/1, TRN/1 or BCV/1 input.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace tsid
