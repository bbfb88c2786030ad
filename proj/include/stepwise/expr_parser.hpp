#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepwise/expr.hpp"

namespace stepwise {

/// Malformed expression text. `position` is 1-based and points at the first
/// character that could not be accepted (one past the end for truncated
/// input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected);
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Parses the concrete syntax
///
///   expr   := "con" number | "div" "(" expr "," expr ")"
///   number := ["-"] digits ["." digits]
///
/// with arbitrary whitespace between tokens. The whole input must be one
/// expression.
Expr parse_expr(std::string_view src);

/// Accepts exactly `number` from the grammar above (no surrounding
/// whitespace). Used for scenario argument tokens as well.
std::optional<double> parse_number_literal(std::string_view text);

}  // namespace stepwise
