#pragma once

#include <string>
#include <variant>

namespace stepwise {

/// The unit value answered by effect-only computations; renders as "done".
struct Unit {
  friend bool operator==(Unit, Unit) noexcept { return true; }
};

inline constexpr Unit unit_value{};

/// A dynamically typed value: what expressions compute, what requests carry,
/// and what handlers answer.
using Value = std::variant<Unit, double, std::string>;

/// Integer-valued numbers print without a fractional part ("42"); all other
/// finite numbers print in the shortest fixed-notation form that reads back
/// to the same double ("0.5").
std::string format_number(double v);

/// Unit -> "done", numbers via format_number, text verbatim.
std::string render_value(const Value& v);

/// A (result, state) pair threaded through stateful computations.
template <class Result, class State>
struct Response {
  Result result;
  State state;

  friend bool operator==(const Response&, const Response&) = default;
};

}  // namespace stepwise
