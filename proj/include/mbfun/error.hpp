#pragma once

#include <stdexcept>
#include <string>

namespace mbfun {

// Input is outside the supported size or a computation exceeded a configured
// resource bound.  Reported by the CLI with exit code 1.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition failed (non-coprime input, non quasi-homogeneous
// input, zero specialization, ...).  Also exit code 1.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial text failed to parse.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Command line misuse.  Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mbfun
