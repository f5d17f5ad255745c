#pragma once

#include <stdexcept>
#include <string>

namespace paretolab {

/// Operation called outside its contract (dimension mismatch, invalid
/// argument, infeasible input).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration guard would be exceeded (2^n blowups and friends).
/// The message names the limit.
class GuardError : public std::length_error {
 public:
  explicit GuardError(const std::string& what) : std::length_error(what) {}
};

/// Instance file could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Internal consistency violation. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace paretolab
