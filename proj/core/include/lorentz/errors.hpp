#ifndef LORENTZ_ERRORS_HPP
#define LORENTZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lorentz {

/// Malformed text input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace lorentz

#endif  // LORENTZ_ERRORS_HPP
