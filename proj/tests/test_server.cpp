#include <string>
#include <vector>

#include "doctest.h"
#include "stepwise/callbacks.hpp"
#include "stepwise/server.hpp"
#include "support/generators.hpp"

using namespace stepwise;

namespace {

Value text(const char* s) { return std::string(s); }

const NameDirectory& directory(const BasicServer& s) {
  const auto* d = s.state().get<NameDirectory>();
  REQUIRE(d != nullptr);
  return *d;
}

std::vector<std::string> tail(const std::vector<std::string>& log, std::size_t from) {
  return {log.begin() + static_cast<std::ptrdiff_t>(from), log.end()};
}

}  // namespace

TEST_CASE("load_callback") {
  CallbackInstance names = load_callback("nameServer");
  CHECK(names.name() == "nameServer");
  CHECK(names.handlers().size() == 2);
  CHECK(names.find("add()place()state") != nullptr);
  CHECK(names.find("whereIs()state") != nullptr);
  CHECK(names.initial_state() == ServerState::of(NameDirectory{}));

  CallbackInstance calc = load_callback("calculator");
  CHECK(calc.find("clearstate") != nullptr);
  CHECK(calc.find("add()state") != nullptr);
  CHECK(calc.initial_state() == ServerState::of(0.0));

  CHECK_THROWS_AS(load_callback("bogus"), UnknownCallback);
}

TEST_CASE("handler names must end in state") {
  Handler h = [](std::span<const Value>, const ServerState& s) { return ServerResponse{0.0, s}; };
  CHECK_THROWS_AS(CallbackInstance("x", ServerState::of(0.0), {{"add()", h}}), std::invalid_argument);
}

TEST_CASE("start_up logs the kind name") {
  CHECK(start_up(ServerKind::basic, "nameServer")->log() ==
        std::vector<std::string>{"starting basicServer"});
  CHECK(start_up(ServerKind::transactional, "nameServer")->log() ==
        std::vector<std::string>{"starting transactionServer"});
  CHECK(start_up(ServerKind::hotswap, "nameServer")->log() ==
        std::vector<std::string>{"starting hotSwapServer"});
  CHECK_THROWS_AS(start_up(ServerKind::basic, "bogus"), UnknownCallback);
}

TEST_CASE("dispatch") {
  CallbackInstance names = make_name_server();
  ServerResponse r = dispatch(names, {"add()place()", {text("BuckinghamPalace"), text("London")}},
                              names.initial_state());
  CHECK(r.result == text("London"));
  NameDirectory expected;
  expected.places["BuckinghamPalace"] = text("London");
  CHECK(r.state == ServerState::of(expected));

  try {
    dispatch(names, {"boojum()", {text("EiffelTower")}}, names.initial_state());
    FAIL("expected NoSuchMethod");
  } catch (const NoSuchMethod& e) {
    CHECK(e.handler_name() == "boojum()state");
    CHECK(std::string(e.what()) == "NoSuchMethod: no method boojum()state in mirror for a callback");
  }

  CallbackInstance calc = make_calculator();
  CHECK(dispatch(calc, {"add()", {3.0}}, ServerState::of(0.0)) ==
        ServerResponse{3.0, ServerState::of(3.0)});
}

TEST_CASE("dispatch wraps foreign handler exceptions") {
  Handler throws = [](std::span<const Value>, const ServerState&) -> ServerResponse {
    throw std::out_of_range("boom");
  };
  CallbackInstance cb("x", ServerState::of(0.0), {{"fstate", throws}});
  CHECK_THROWS_WITH_AS(dispatch(cb, {"f", {}}, cb.initial_state()), "boom", HandlerFailure);
}

TEST_CASE("basic handle logs after completion") {
  auto s = start_up(ServerKind::basic, "nameServer");
  CHECK(s->handle({"add()place()", {text("EiffelTower"), text("Paris")}}) == text("Paris"));
  CHECK(tail(s->log(), 1) ==
        std::vector<std::string>{"handle: add()place() args: [EiffelTower, Paris]", "    result: Paris"});
  CHECK(s->handle({"whereIs()", {text("EiffelTower")}}) == text("Paris"));

  std::size_t before = s->log().size();
  CHECK_THROWS_WITH_AS(s->handle({"whereIs()", {text("Atlantis")}}), "KeyNotFound: Atlantis",
                       HandlerFailure);
  CHECK(s->log().size() == before);
}

TEST_CASE("basic server loop stops at the first failure") {
  auto s = start_up(ServerKind::basic, "nameServer");
  std::vector<Request> reqs{{"boojum()", {}}, {"add()place()", {text("a"), text("b")}}};
  CHECK_THROWS_AS(s->serve(reqs), NoSuchMethod);
  CHECK(s->log() == std::vector<std::string>{"starting basicServer"});
  CHECK_THROWS_AS(server_loop(ServerKind::basic, "nameServer", reqs), NoSuchMethod);
}

TEST_CASE("transactional handle rolls back and logs the crash first") {
  auto s = start_up(ServerKind::transactional, "nameServer");
  s->handle({"add()place()", {text("BuckinghamPalace"), text("London")}});
  ServerState before = s->state();
  std::size_t mark = s->log().size();

  CHECK(s->handle({"boojum()", {text("EiffelTower")}}) == Value{std::string(kCrashResult)});
  CHECK(tail(s->log(), mark) ==
        std::vector<std::string>{
            "Error --- server crashed with NoSuchMethod: no method boojum()state in mirror for a callback",
            "handle: boojum() args: [EiffelTower]", "    result: !CRASH!"});
  CHECK(s->state() == before);
  CHECK(s->handle({"whereIs()", {text("BuckinghamPalace")}}) == text("London"));

  mark = s->log().size();
  s->handle({"whereIs()", {text("Atlantis")}});
  CHECK(s->log()[mark] == "Error --- server crashed with KeyNotFound: Atlantis");
  CHECK(s->state() == before);
}

TEST_CASE("hot swap installs the new callback and resets state") {
  auto s = start_up(ServerKind::hotswap, "nameServer");
  s->handle({"add()place()", {text("EiffelTower"), text("Paris")}});
  CHECK(s->handle({"!HOTSWAP!", {text("calculator")}}) == text("calculator started."));
  CHECK(s->callback().name() == "calculator");
  CHECK(s->state() == load_callback("calculator").initial_state());

  std::size_t mark = s->log().size();
  CHECK(s->handle({"whereIs()", {text("EiffelTower")}}) == Value{std::string(kCrashResult)});
  CHECK(s->log()[mark] ==
        "Error --- server crashed with NoSuchMethod: no method whereIs()state in mirror for a callback");
  CHECK(s->handle({"add()", {3.0}}) == Value{3.0});
  CHECK(s->handle({"add()", {4.0}}) == Value{7.0});
}

TEST_CASE("failed hot swaps leave callback and state alone") {
  auto s = start_up(ServerKind::hotswap, "nameServer");
  s->handle({"add()place()", {text("EiffelTower"), text("Paris")}});
  ServerState before = s->state();
  std::size_t mark = s->log().size();
  CHECK(s->handle({"!HOTSWAP!", {text("bogus")}}) == Value{std::string(kCrashResult)});
  CHECK(s->log()[mark] == "Error --- server crashed with UnknownCallback: bogus");
  CHECK(s->handle({"!HOTSWAP!", {}}) == Value{std::string(kCrashResult)});
  CHECK(s->callback().name() == "nameServer");
  CHECK(s->state() == before);
}

TEST_CASE("hot swap is not understood by the transaction server") {
  auto s = start_up(ServerKind::transactional, "nameServer");
  std::size_t mark = s->log().size();
  s->handle({"!HOTSWAP!", {text("calculator")}});
  CHECK(s->log()[mark] ==
        "Error --- server crashed with NoSuchMethod: no method !HOTSWAP!state in mirror for a callback");
  CHECK(s->callback().name() == "nameServer");
}

TEST_CASE("log listener sees every line as it is appended") {
  std::vector<std::string> seen;
  auto s = start_up(ServerKind::transactional, "nameServer",
                    [&](std::string_view line) { seen.emplace_back(line); });
  s->serve(std::vector<Request>{{"boojum()", {}}, {"add()place()", {text("a"), text("b")}}});
  CHECK(seen == s->log());
  CHECK(seen.back() == "done");
}

TEST_CASE("rollback: crashing requests leave no trace in the state") {
  testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    bool calc = i % 2 == 1;
    auto reqs = calc ? testing::random_calculator_scenario(rng, true)
                     : testing::random_name_scenario(rng, true);
    const char* cb = calc ? "calculator" : "nameServer";
    auto full = start_up(ServerKind::transactional, cb);
    std::vector<Request> survivors;
    for (const Request& r : reqs) {
      ServerState before = full->state();
      if (full->handle(r) == Value{std::string(kCrashResult)}) {
        CHECK(full->state() == before);
      } else {
        survivors.push_back(r);
      }
    }
    auto replay = server_loop(ServerKind::transactional, cb, survivors);
    CHECK(replay->state() == full->state());
  }
}

TEST_CASE("handlers are pure and the log only grows") {
  testing::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto reqs = testing::random_name_scenario(rng, true);
    auto s = start_up(ServerKind::hotswap, "nameServer");
    std::vector<std::string> previous = s->log();
    for (const Request& r : reqs) {
      ServerState before = s->state();
      try {
        auto a = dispatch(s->callback(), r, before);
        auto b = dispatch(s->callback(), r, before);
        CHECK(a == b);
      } catch (const ServerError&) {
      }
      s->handle(r);
      REQUIRE(s->log().size() >= previous.size());
      CHECK(std::equal(previous.begin(), previous.end(), s->log().begin()));
      previous = s->log();
    }
  }
}

TEST_CASE("name server remembers the last place; calculator sums since clear") {
  testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    auto names = server_loop(ServerKind::basic, "nameServer",
                             testing::random_name_scenario(rng, false));
    std::map<std::string, Value, std::less<>> last;
    for (std::size_t j = 1; j + 1 < names->log().size(); j += 2) {
      const std::string& line = names->log()[j];
      if (!line.starts_with("handle: add()place() args: [")) continue;
      auto open = line.find('[') + 1;
      auto comma = line.find(", ", open);
      last[line.substr(open, comma - open)] =
          line.substr(comma + 2, line.size() - comma - 3);
    }
    CHECK(directory(*names).places == last);

    auto reqs = testing::random_calculator_scenario(rng, false);
    double sum = 0;
    for (const Request& r : reqs) sum = r.op == "clear" ? 0 : sum + std::get<double>(r.args[0]);
    CHECK(server_loop(ServerKind::basic, "calculator", reqs)->state() == ServerState::of(sum));
  }
}
