#include "stepwise/stepwise.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "stepwise/expr.hpp"
#include "stepwise/expr_parser.hpp"
#include "stepwise/runner.hpp"

struct sw_server {
  std::unique_ptr<stepwise::ServeSession> session;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_parse_position = 0;

sw_status fail(sw_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

sw_status ok() {
  g_last_error.clear();
  return SW_OK;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps every exception escaping the C++ core onto a status code.
template <class F>
sw_status guard(F&& body) {
  try {
    return body();
  } catch (const stepwise::ParseError& e) {
    g_last_parse_position = e.position();
    return fail(SW_ERR_PARSE, e.what());
  } catch (const stepwise::DivideByZero& e) {
    return fail(SW_ERR_DIVIDE_BY_ZERO, e.what());
  } catch (const stepwise::UnknownCallback& e) {
    return fail(SW_ERR_UNKNOWN_CALLBACK, e.what());
  } catch (const stepwise::ScenarioFormatError& e) {
    return fail(SW_ERR_SCENARIO_FORMAT, e.what());
  } catch (const std::exception& e) {
    return fail(SW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SW_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* sw_last_error(void) { return g_last_error.c_str(); }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "ok";
    case SW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SW_ERR_PARSE: return "parse error";
    case SW_ERR_DIVIDE_BY_ZERO: return "divide by zero";
    case SW_ERR_UNKNOWN_CALLBACK: return "unknown callback";
    case SW_ERR_SCENARIO_FORMAT: return "scenario format error";
    case SW_ERR_SERVER_CRASHED: return "server crashed";
    case SW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sw_string_free(char* s) { std::free(s); }

size_t sw_last_parse_position(void) { return g_last_parse_position; }

sw_status sw_eval(const char* mode, const char* src, char** out) {
  if (!mode || !src || !out) return fail(SW_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  g_last_parse_position = 0;
  auto parsed = stepwise::parse_eval_mode(mode);
  if (!parsed) return fail(SW_ERR_INVALID_ARGUMENT, std::string("unknown mode: ") + mode);
  return guard([&] {
    *out = duplicate(stepwise::evaluate_to_text(*parsed, src));
    return ok();
  });
}

sw_status sw_server_start(const char* kind, const char* callback_name, sw_log_fn log,
                          void* user_data, sw_server** out) {
  if (!kind || !callback_name || !out) return fail(SW_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto parsed = stepwise::parse_server_kind(kind);
  if (!parsed) return fail(SW_ERR_INVALID_ARGUMENT, std::string("unknown server kind: ") + kind);
  return guard([&] {
    stepwise::BasicServer::LogListener listener;
    if (log) {
      listener = [log, user_data](std::string_view line) {
        std::string copy(line);
        log(copy.c_str(), user_data);
      };
    }
    auto server = std::make_unique<sw_server>();
    server->session = std::make_unique<stepwise::ServeSession>(*parsed, callback_name,
                                                               std::move(listener));
    *out = server.release();
    return ok();
  });
}

sw_status sw_server_feed_line(sw_server* server, const char* line) {
  if (!server || !line) return fail(SW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    auto status = server->session->feed_line(line);
    if (status == stepwise::ServeSession::Status::crashed) {
      return fail(SW_ERR_SERVER_CRASHED, *server->session->crash_reason());
    }
    return ok();
  });
}

sw_status sw_server_finish(sw_server* server) {
  if (!server) return fail(SW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    if (server->session->finish() == stepwise::ServeSession::Status::crashed) {
      return fail(SW_ERR_SERVER_CRASHED, *server->session->crash_reason());
    }
    return ok();
  });
}

size_t sw_server_log_size(const sw_server* server) {
  return server ? server->session->server().log().size() : 0;
}

const char* sw_server_log_line(const sw_server* server, size_t index) {
  if (!server) return nullptr;
  const auto& log = server->session->server().log();
  return index < log.size() ? log[index].c_str() : nullptr;
}

sw_status sw_server_state(const sw_server* server, char** out) {
  if (!server || !out) return fail(SW_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = duplicate(server->session->server().state().render());
    return ok();
  });
}

const char* sw_server_callback_name(const sw_server* server) {
  return server ? server->session->server().callback().name().c_str() : nullptr;
}

void sw_server_destroy(sw_server* server) { delete server; }

}  // extern "C"
