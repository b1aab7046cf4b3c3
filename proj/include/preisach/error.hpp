#pragma once

#include <stdexcept>
#include <string>

namespace preisach {

// Raised when a caller breaks an operation's precondition (e.g. an
// update_increase that does not increase the input).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Configuration-file or override problems. `key()` names the offending dotted key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Malformed input data (CSV). `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace preisach
