#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepwise/server.hpp"

namespace stepwise {

// ---- expression evaluation ------------------------------------------------

enum class EvalMode { simple, monadic, exceptions, state, output };

std::optional<EvalMode> parse_eval_mode(std::string_view name);

/// Parses `src` and evaluates it in `mode`. `simple` answers the number;
/// the other modes answer the rendered monad. The text always ends in a
/// single newline. Throws ParseError, and DivideByZero in modes that do not
/// handle exceptions.
std::string evaluate_to_text(EvalMode mode, std::string_view src);

// ---- scenarios ------------------------------------------------------------

class ScenarioFormatError : public std::runtime_error {
 public:
  ScenarioFormatError(std::size_t line_number, const std::string& message);
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

/// Blank lines and lines whose first non-blank character is '#'.
bool is_skippable_line(std::string_view line);

/// "<op> :: <arg1> | <arg2> | ..." with each token trimmed. Tokens that are
/// numeric literals become numbers, everything else stays text. "<op> ::"
/// alone means no arguments.
Request parse_scenario_line(std::string_view line, std::size_t line_number);

/// "basic", "transaction", "hotswap".
std::optional<ServerKind> parse_server_kind(std::string_view name);

/// Line-at-a-time driver around a server, shared by file and interactive
/// input.
class ServeSession {
 public:
  enum class Status { ok, skipped, crashed };

  /// Starts the server (logging its first line). Throws UnknownCallback.
  ServeSession(ServerKind kind, std::string_view callback_name,
               BasicServer::LogListener listener = {});

  /// Handles one scenario line. Answers `crashed` once a basic server has
  /// died; later lines are ignored. Throws ScenarioFormatError.
  Status feed_line(std::string_view line);

  /// Logs "done" unless the server crashed. Idempotent.
  Status finish();

  bool crashed() const noexcept { return crash_.has_value(); }
  /// The error that killed a basic server.
  const std::optional<std::string>& crash_reason() const noexcept { return crash_; }
  const BasicServer& server() const noexcept { return *server_; }
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::unique_ptr<BasicServer> server_;
  std::size_t line_number_ = 0;
  std::optional<std::string> crash_;
  bool finished_ = false;
};

}  // namespace stepwise
