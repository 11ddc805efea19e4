#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfilt {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different ring contexts, or dimensions disagree.
class ring_mismatch_error : public error {
public:
  explicit ring_mismatch_error(const std::string& msg) : error(msg) {}
};

/// A documented precondition was violated (zero/unit ideal, prime not
/// associated, colon by zero, out-of-table index, ...).
class domain_error : public error {
public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

/// The library derived contradictory facts. Always a bug, never a math fact.
class internal_error : public error {
public:
  explicit internal_error(const std::string& msg) : error(msg) {}
};

/// Text input could not be parsed; carries a 1-based position.
class parse_error : public error {
public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Input exceeds the configured scale limits.
class scale_limit_error : public error {
public:
  explicit scale_limit_error(const std::string& msg) : error(msg) {}
};

}  // namespace vfilt
