// Command-line front end over the C interface.
//
//   stepwise eval --mode <simple|monadic|exceptions|state|output> "<expr>"
//   stepwise serve --kind <basic|transaction|hotswap> --callback <name> [--scenario FILE]
//
// Exit codes: 0 ok, 1 usage or parse error, 2 basic server crashed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "stepwise/stepwise.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrashed = 2;

int run_eval(const std::string& mode, const std::string& src) {
  char* out = nullptr;
  sw_status status = sw_eval(mode.c_str(), src.c_str(), &out);
  if (status != SW_OK) {
    std::cerr << "error: " << sw_last_error() << '\n';
    return kExitUsage;
  }
  std::cout << out << std::flush;
  sw_string_free(out);
  return kExitOk;
}

void print_line(const char* line, void*) {
  std::cout << line << '\n' << std::flush;
}

struct ServerDeleter {
  void operator()(sw_server* s) const { sw_server_destroy(s); }
};

int run_serve(const std::string& kind, const std::string& callback, const std::string& scenario) {
  std::ifstream file;
  if (!scenario.empty()) {
    file.open(scenario);
    if (!file) {
      std::cerr << "error: cannot open scenario " << scenario << '\n';
      return kExitUsage;
    }
  }
  std::istream& in = scenario.empty() ? std::cin : file;

  sw_server* raw = nullptr;
  if (sw_server_start(kind.c_str(), callback.c_str(), print_line, nullptr, &raw) != SW_OK) {
    std::cerr << "error: " << sw_last_error() << '\n';
    return kExitUsage;
  }
  std::unique_ptr<sw_server, ServerDeleter> server(raw);

  std::string line;
  while (std::getline(in, line)) {
    sw_status status = sw_server_feed_line(server.get(), line.c_str());
    if (status == SW_ERR_SERVER_CRASHED) {
      std::cerr << "server crashed: " << sw_last_error() << '\n';
      return kExitCrashed;
    }
    if (status != SW_OK) {
      std::cerr << "error: " << sw_last_error() << '\n';
      return kExitUsage;
    }
  }
  if (sw_server_finish(server.get()) != SW_OK) {
    std::cerr << "error: " << sw_last_error() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered evaluators and generic servers"};
  app.require_subcommand(1);

  std::string mode;
  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a con/div expression");
  eval->add_option("--mode", mode, "simple, monadic, exceptions, state or output")->required();
  eval->add_option("expr", expr, "Expression, e.g. \"div(con 1, con 2)\"")->required();

  std::string kind;
  std::string callback;
  std::string scenario;
  auto* serve = app.add_subcommand("serve", "Run a scenario through a generic server");
  serve->add_option("--kind", kind, "basic, transaction or hotswap")->required();
  serve->add_option("--callback", callback, "nameServer or calculator")->required();
  serve->add_option("--scenario", scenario, "Scenario file (stdin when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*eval) return run_eval(mode, expr);
  return run_serve(kind, callback, scenario);
}
