#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <typeindex>
#include <vector>

#include "stepwise/value.hpp"

namespace stepwise {

/// Text form of a plain number state. Callback state types supply their own
/// render_state overload, found by argument-dependent lookup.
std::string render_state(double memory);

/// Opaque, immutable callback state. Whatever a callback stores is only
/// reachable through `get<T>()` by code that knows T; the server itself just
/// threads it from one handler to the next. Copies share the payload.
class ServerState {
 public:
  ServerState() = default;

  template <class T>
  static ServerState of(T value) {
    return ServerState(std::make_shared<const Model<T>>(std::move(value)));
  }

  /// nullptr when empty or holding something other than T.
  template <class T>
  const T* get() const noexcept {
    if (!self_ || self_->type() != typeid(T)) return nullptr;
    return &static_cast<const Model<T>&>(*self_).value;
  }

  bool empty() const noexcept { return !self_; }
  std::string render() const { return self_ ? self_->render() : "<empty>"; }

  friend bool operator==(const ServerState& a, const ServerState& b) {
    if (a.self_ == b.self_) return true;
    if (!a.self_ || !b.self_) return false;
    return a.self_->equals(*b.self_);
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual std::type_index type() const noexcept = 0;
    virtual bool equals(const Concept& other) const = 0;
    virtual std::string render() const = 0;
  };

  template <class T>
  struct Model final : Concept {
    explicit Model(T v) : value(std::move(v)) {}
    std::type_index type() const noexcept override { return typeid(T); }
    bool equals(const Concept& other) const override {
      return other.type() == type() && static_cast<const Model&>(other).value == value;
    }
    std::string render() const override {
      if constexpr (requires(const T& t) { render_state(t); }) {
        return render_state(value);
      } else {
        return "<opaque>";
      }
    }
    T value;
  };

  explicit ServerState(std::shared_ptr<const Concept> self) : self_(std::move(self)) {}
  std::shared_ptr<const Concept> self_;
};

/// A named operation plus its arguments, e.g. "add()place()" with
/// [BuckinghamPalace, London].
struct Request {
  std::string op;
  std::vector<Value> args;

  friend bool operator==(const Request&, const Request&) = default;
};

using ServerResponse = Response<Value, ServerState>;

/// Handlers answer a new state rather than modifying their input.
using Handler = std::function<ServerResponse(std::span<const Value> args, const ServerState& state)>;

/// Suffix appended to a request's op to name the handler serving it.
inline constexpr std::string_view kHandlerSuffix = "state";

/// A named behaviour: its initial state and the handlers serving requests.
class CallbackInstance {
 public:
  using HandlerTable = std::map<std::string, Handler, std::less<>>;

  /// Throws std::invalid_argument if any handler name lacks the "state" suffix.
  CallbackInstance(std::string name, ServerState initial_state, HandlerTable handlers);

  const std::string& name() const noexcept { return name_; }
  const ServerState& initial_state() const noexcept { return initial_state_; }
  const HandlerTable& handlers() const noexcept { return handlers_; }
  const Handler* find(std::string_view handler_name) const;

 private:
  std::string name_;
  ServerState initial_state_;
  HandlerTable handlers_;
};

/// A request the current callback could not serve. Transactional servers
/// turn these into "!CRASH!" results; a basic server dies of them.
class ServerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSuchMethod : public ServerError {
 public:
  explicit NoSuchMethod(const std::string& handler_name);
  const std::string& handler_name() const noexcept { return handler_name_; }

 private:
  std::string handler_name_;
};

class HandlerFailure : public ServerError {
 public:
  using ServerError::ServerError;
};

class UnknownCallback : public std::runtime_error {
 public:
  explicit UnknownCallback(const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Looks up `req.op + "state"` and applies it to (req.args, state).
/// Throws NoSuchMethod when absent; anything the handler throws surfaces as
/// HandlerFailure.
ServerResponse dispatch(const CallbackInstance& cb, const Request& req, const ServerState& state);

enum class ServerKind { basic, transactional, hotswap };

/// "basicServer", "transactionServer", "hotSwapServer".
std::string_view kind_name(ServerKind kind);

inline constexpr std::string_view kCrashResult = "!CRASH!";
inline constexpr std::string_view kHotSwapOp = "!HOTSWAP!";

/// Generic request loop around a pluggable callback. The basic server knows
/// nothing about failures: the first failing request propagates out of
/// handle() and ends the session.
class BasicServer {
 public:
  using LogListener = std::function<void(std::string_view line)>;

  explicit BasicServer(CallbackInstance callback, LogListener listener = {});
  virtual ~BasicServer() = default;

  BasicServer(const BasicServer&) = delete;
  BasicServer& operator=(const BasicServer&) = delete;

  virtual ServerKind kind() const noexcept { return ServerKind::basic; }

  /// Writes the "starting <kindName>" line. Called once by start_up.
  void start();

  /// Processes one request, threading the state.
  virtual Value handle(const Request& req);

  /// Handles each request in order, then logs "done".
  void serve(std::span<const Request> requests);

  /// Appends the closing "done" line.
  void finish();

  const CallbackInstance& callback() const noexcept { return callback_; }
  const ServerState& state() const noexcept { return state_; }
  const std::vector<std::string>& log() const noexcept { return log_; }

 protected:
  void append_log(std::string line);
  /// The "handle: ..." and "    result: ..." pair.
  void log_handled(const Request& req, const Value& result);

  CallbackInstance callback_;
  ServerState state_;

 private:
  std::vector<std::string> log_;
  LogListener listener_;
};

/// A failing request leaves the state exactly as it was and answers
/// "!CRASH!" instead of ending the session.
class TransactionServer : public BasicServer {
 public:
  using BasicServer::BasicServer;

  ServerKind kind() const noexcept override { return ServerKind::transactional; }
  Value handle(const Request& req) override;

 protected:
  /// Runs `step`; on ServerError logs the crash and answers "!CRASH!".
  Value guarded(const Request& req, const std::function<Value()>& step);
};

/// Also understands "!HOTSWAP!" [name], which installs another callback and
/// resets the state to its initial state.
class HotSwapServer : public TransactionServer {
 public:
  using TransactionServer::TransactionServer;

  ServerKind kind() const noexcept override { return ServerKind::hotswap; }
  Value handle(const Request& req) override;
};

/// Loads `callback_name`, builds a server of the given kind and logs its
/// starting line. Throws UnknownCallback.
std::unique_ptr<BasicServer> start_up(ServerKind kind, std::string_view callback_name,
                                      BasicServer::LogListener listener = {});

/// Runs `requests` through a fresh server and returns it. For a basic
/// server the first ServerError propagates; the partial log is lost with
/// the server, so callers that need it should use start_up and serve.
std::unique_ptr<BasicServer> server_loop(ServerKind kind, std::string_view callback_name,
                                         std::span<const Request> requests);

}  // namespace stepwise
