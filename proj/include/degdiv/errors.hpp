#pragma once

#include <stdexcept>
#include <string>

namespace degdiv {

/// Thrown when an exact search is asked to run beyond its configured guard.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input; carries the 1-based line number of the offence.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace degdiv
