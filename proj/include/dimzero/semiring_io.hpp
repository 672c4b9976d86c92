#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dimzero/semiring.hpp"

namespace dimzero {

/// Error while reading a semiring definition file.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Dimension, Range };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based; 0 when the error is not tied to a line (e.g. premature end).
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads the plain-text semiring format:
///
///   semiring <n>
///   labels <s0> ... <s(n-1)>
///   zero <i>
///   one <j>
///   add
///   <n rows of n indices>
///   mul
///   <n rows of n indices>
///
/// `#` starts a comment; blank lines and extra whitespace are ignored.
/// Axioms are not checked.
Semiring parse_semiring(std::string_view text);

Semiring load_semiring(const std::string& path);

/// Inverse of parse_semiring.
std::string to_text(const Semiring& s);

}  // namespace dimzero
