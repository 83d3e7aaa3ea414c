#pragma once

#include <stdexcept>
#include <string>

namespace shadow {

// Raised for inputs that are well formed but mathematically or structurally
// unacceptable. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needed catalog data that is marked unresolved.
class DataMissing : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Internal consistency breach (e.g. a reduction verdict contradicting the
// determinant oracle). Never expected to fire.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shadow
