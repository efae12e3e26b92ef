#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ussr {

// Exit-code contract shared by the library's error types and the CLI.
enum ExitCode : int {
  exit_ok = 0,        // success / verified
  exit_disagree = 1,  // verification found a disagreement
  exit_parse = 2,     // malformed input text
  exit_domain = 3,    // value outside an operation's declared domain
  exit_resource = 4,  // work or size beyond a caller-supplied cap
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates an operation's precondition (e.g. k < 1, instance
/// outside an advice domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance/advice/report text. Carries the 1-based line number
/// the parser was looking at.
class ParseError : public Error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

/// An enumeration, precision refinement, or constraint set exceeded its cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace ussr
