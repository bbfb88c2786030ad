#include "stepwise/callbacks.hpp"

#include <utility>

namespace stepwise {

namespace {

void expect_arity(std::string_view op, std::span<const Value> args, std::size_t n) {
  if (args.size() != n) {
    throw HandlerFailure("ArityError: " + std::string(op) + " expects " + std::to_string(n) +
                         " argument" + (n == 1 ? "" : "s") + ", got " +
                         std::to_string(args.size()));
  }
}

const NameDirectory& directory_of(const ServerState& state) {
  if (const auto* d = state.get<NameDirectory>()) return *d;
  throw HandlerFailure("StateError: nameServer state is not a name directory");
}

double memory_of(const ServerState& state) {
  if (const auto* m = state.get<double>()) return *m;
  throw HandlerFailure("StateError: calculator state is not a number");
}

ServerResponse add_place(std::span<const Value> args, const ServerState& state) {
  expect_arity("add()place()", args, 2);
  NameDirectory next = directory_of(state);
  next.places.insert_or_assign(render_value(args[0]), args[1]);
  return {args[1], ServerState::of(std::move(next))};
}

ServerResponse where_is(std::span<const Value> args, const ServerState& state) {
  expect_arity("whereIs()", args, 1);
  const NameDirectory& directory = directory_of(state);
  std::string name = render_value(args[0]);
  auto it = directory.places.find(name);
  if (it == directory.places.end()) throw HandlerFailure("KeyNotFound: " + name);
  return {it->second, state};
}

ServerResponse clear(std::span<const Value>, const ServerState&) {
  return {0.0, ServerState::of(0.0)};
}

ServerResponse add(std::span<const Value> args, const ServerState& state) {
  expect_arity("add()", args, 1);
  const auto* e = std::get_if<double>(&args[0]);
  if (!e) throw HandlerFailure("TypeError: add expects a number");
  double sum = memory_of(state) + *e;
  return {sum, ServerState::of(sum)};
}

}  // namespace

std::string render_state(const NameDirectory& directory) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, place] : directory.places) {
    if (!first) out += ", ";
    first = false;
    out += name + ": " + render_value(place);
  }
  return out + "}";
}

CallbackInstance make_name_server() {
  return CallbackInstance("nameServer", ServerState::of(NameDirectory{}),
                          {{"add()place()state", add_place}, {"whereIs()state", where_is}});
}

CallbackInstance make_calculator() {
  return CallbackInstance("calculator", ServerState::of(0.0),
                          {{"clearstate", clear}, {"add()state", add}});
}

CallbackInstance load_callback(std::string_view name) {
  if (name == "nameServer") return make_name_server();
  if (name == "calculator") return make_calculator();
  throw UnknownCallback(std::string(name));
}

std::vector<std::string> registered_callbacks() { return {"nameServer", "calculator"}; }

}  // namespace stepwise
