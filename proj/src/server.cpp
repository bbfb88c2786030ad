#include "stepwise/server.hpp"

#include "stepwise/callbacks.hpp"

namespace stepwise {

std::string render_state(double memory) { return format_number(memory); }

CallbackInstance::CallbackInstance(std::string name, ServerState initial_state,
                                   HandlerTable handlers)
    : name_(std::move(name)),
      initial_state_(std::move(initial_state)),
      handlers_(std::move(handlers)) {
  for (const auto& [handler_name, handler] : handlers_) {
    if (!std::string_view(handler_name).ends_with(kHandlerSuffix)) {
      throw std::invalid_argument("handler name \"" + handler_name + "\" of callback " + name_ +
                                  " does not end with \"state\"");
    }
    if (!handler) throw std::invalid_argument("handler " + handler_name + " is empty");
  }
}

const Handler* CallbackInstance::find(std::string_view handler_name) const {
  auto it = handlers_.find(handler_name);
  return it == handlers_.end() ? nullptr : &it->second;
}

NoSuchMethod::NoSuchMethod(const std::string& handler_name)
    : ServerError("NoSuchMethod: no method " + handler_name + " in mirror for a callback"),
      handler_name_(handler_name) {}

UnknownCallback::UnknownCallback(const std::string& name)
    : std::runtime_error("UnknownCallback: " + name), name_(name) {}

ServerResponse dispatch(const CallbackInstance& cb, const Request& req, const ServerState& state) {
  std::string handler_name = req.op + std::string(kHandlerSuffix);
  const Handler* handler = cb.find(handler_name);
  if (!handler) throw NoSuchMethod(handler_name);
  try {
    return (*handler)(req.args, state);
  } catch (const ServerError&) {
    throw;
  } catch (const std::exception& e) {
    throw HandlerFailure(e.what());
  }
}

std::string_view kind_name(ServerKind kind) {
  switch (kind) {
    case ServerKind::basic:
      return "basicServer";
    case ServerKind::transactional:
      return "transactionServer";
    case ServerKind::hotswap:
      return "hotSwapServer";
  }
  return "server";
}

BasicServer::BasicServer(CallbackInstance callback, LogListener listener)
    : callback_(std::move(callback)),
      state_(callback_.initial_state()),
      listener_(std::move(listener)) {}

void BasicServer::start() { append_log("starting " + std::string(kind_name(kind()))); }

Value BasicServer::handle(const Request& req) {
  ServerResponse r = dispatch(callback_, req, state_);
  state_ = std::move(r.state);
  log_handled(req, r.result);
  return r.result;
}

void BasicServer::serve(std::span<const Request> requests) {
  for (const Request& req : requests) handle(req);
  finish();
}

void BasicServer::finish() { append_log("done"); }

void BasicServer::append_log(std::string line) {
  log_.push_back(std::move(line));
  if (listener_) listener_(log_.back());
}

void BasicServer::log_handled(const Request& req, const Value& result) {
  std::string line = "handle: " + req.op + " args: [";
  for (std::size_t i = 0; i < req.args.size(); ++i) {
    if (i > 0) line += ", ";
    line += render_value(req.args[i]);
  }
  line += "]";
  append_log(std::move(line));
  append_log("    result: " + render_value(result));
}

Value TransactionServer::handle(const Request& req) {
  return guarded(req, [&] { return BasicServer::handle(req); });
}

Value TransactionServer::guarded(const Request& req, const std::function<Value()>& step) {
  try {
    return step();
  } catch (const ServerError& e) {
    // The basic step only commits state after the handler returns, so there
    // is nothing to undo here.
    append_log("Error --- server crashed with " + std::string(e.what()));
    Value crash{std::string(kCrashResult)};
    log_handled(req, crash);
    return crash;
  }
}

Value HotSwapServer::handle(const Request& req) {
  if (req.op != kHotSwapOp) return TransactionServer::handle(req);
  return guarded(req, [&]() -> Value {
    const auto* name = req.args.empty() ? nullptr : std::get_if<std::string>(&req.args.front());
    if (!name) throw HandlerFailure("HotSwapError: " + std::string(kHotSwapOp) + " expects a callback name");
    CallbackInstance next = [&] {
      try {
        return load_callback(*name);
      } catch (const UnknownCallback& e) {
        throw HandlerFailure(e.what());
      }
    }();
    callback_ = std::move(next);
    state_ = callback_.initial_state();
    Value result{*name + " started."};
    log_handled(req, result);
    return result;
  });
}

std::unique_ptr<BasicServer> start_up(ServerKind kind, std::string_view callback_name,
                                      BasicServer::LogListener listener) {
  CallbackInstance cb = load_callback(callback_name);
  std::unique_ptr<BasicServer> server;
  switch (kind) {
    case ServerKind::basic:
      server = std::make_unique<BasicServer>(std::move(cb), std::move(listener));
      break;
    case ServerKind::transactional:
      server = std::make_unique<TransactionServer>(std::move(cb), std::move(listener));
      break;
    case ServerKind::hotswap:
      server = std::make_unique<HotSwapServer>(std::move(cb), std::move(listener));
      break;
  }
  server->start();
  return server;
}

std::unique_ptr<BasicServer> server_loop(ServerKind kind, std::string_view callback_name,
                                         std::span<const Request> requests) {
  auto server = start_up(kind, callback_name);
  server->serve(requests);
  return server;
}

}  // namespace stepwise
