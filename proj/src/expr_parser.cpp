#include "stepwise/expr_parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace stepwise {

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Length of the longest prefix of `text` matching the number grammar, or 0.
std::size_t scan_number(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits_start = i;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == digits_start) return 0;
  if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
    ++i;
    while (i < text.size() && is_digit(text[i])) ++i;
  }
  return i;
}

constexpr std::size_t kMaxNesting = 10000;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr(0);
    skip_space();
    if (pos_ != src_.size()) fail("end of input");
    return e;
  }

 private:
  Expr parse_expr(std::size_t nesting) {
    if (nesting > kMaxNesting) fail("shallower nesting");
    skip_space();
    std::size_t start = pos_;
    std::string_view word = scan_word();
    if (word == "con") {
      return Expr::con(parse_number());
    }
    if (word == "div") {
      expect('(');
      Expr left = parse_expr(nesting + 1);
      expect(',');
      Expr right = parse_expr(nesting + 1);
      expect(')');
      return Expr::div(std::move(left), std::move(right));
    }
    pos_ = start;
    fail("\"con\" or \"div\"");
  }

  double parse_number() {
    skip_space();
    std::size_t len = scan_number(src_.substr(pos_));
    if (len == 0) fail("number");
    auto v = parse_number_literal(src_.substr(pos_, len));
    if (!v) fail("finite number");
    pos_ += len;
    return *v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("\"") + c + "\"");
    ++pos_;
  }

  std::string_view scan_word() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_alpha(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(std::string expected) const {
    throw ParseError(pos_ + 1, std::move(expected));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse_all(); }

std::optional<double> parse_number_literal(std::string_view text) {
  if (text.empty() || scan_number(text) != text.size()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace stepwise
