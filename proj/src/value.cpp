#include "stepwise/value.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace stepwise {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  // Fixed notation of the smallest subnormal needs ~330 characters.
  std::array<char, 512> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed);
  if (ec != std::errc{}) {
    auto [alt_end, alt_ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), alt_end);
  }
  return std::string(buf.data(), end);
}

std::string render_value(const Value& v) {
  struct Visitor {
    std::string operator()(Unit) const { return "done"; }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace stepwise
