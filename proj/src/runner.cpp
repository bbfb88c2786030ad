#include "stepwise/runner.hpp"

#include "stepwise/evaluators.hpp"
#include "stepwise/expr_parser.hpp"

namespace stepwise {

std::optional<EvalMode> parse_eval_mode(std::string_view name) {
  if (name == "simple") return EvalMode::simple;
  if (name == "monadic") return EvalMode::monadic;
  if (name == "exceptions") return EvalMode::exceptions;
  if (name == "state") return EvalMode::state;
  if (name == "output") return EvalMode::output;
  return std::nullopt;
}

std::string evaluate_to_text(EvalMode mode, std::string_view src) {
  Expr e = parse_expr(src);
  std::string text;
  switch (mode) {
    case EvalMode::simple:
      text = format_number(eval_simple(e));
      break;
    case EvalMode::monadic:
      text = render_monad(eval_monadic(e));
      break;
    case EvalMode::exceptions:
      text = render_monad(*eval_with_exceptions(e));
      break;
    case EvalMode::state:
      text = render_monad(eval_counting(e));
      break;
    case EvalMode::output:
      text = render_monad(eval_tracing(e));
      break;
  }
  if (!text.ends_with('\n')) text += '\n';
  return text;
}

ScenarioFormatError::ScenarioFormatError(std::size_t line_number, const std::string& message)
    : std::runtime_error("scenario line " + std::to_string(line_number) + ": " + message),
      line_number_(line_number) {}

namespace {

constexpr std::string_view kBlank = " \t\r\n\f\v";

std::string_view trim(std::string_view s) {
  auto begin = s.find_first_not_of(kBlank);
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(kBlank);
  return s.substr(begin, end - begin + 1);
}

Value scenario_token(std::string_view token) {
  if (auto number = parse_number_literal(token)) return *number;
  return std::string(token);
}

}  // namespace

bool is_skippable_line(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

Request parse_scenario_line(std::string_view line, std::size_t line_number) {
  auto sep = line.find("::");
  if (sep == std::string_view::npos) {
    throw ScenarioFormatError(line_number, "missing \"::\" separator");
  }
  Request req{std::string(trim(line.substr(0, sep))), {}};
  if (req.op.empty()) throw ScenarioFormatError(line_number, "missing operation name");

  std::string_view rest = trim(line.substr(sep + 2));
  if (rest.empty()) return req;
  while (true) {
    auto bar = rest.find('|');
    req.args.push_back(scenario_token(trim(rest.substr(0, bar))));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return req;
}

std::optional<ServerKind> parse_server_kind(std::string_view name) {
  if (name == "basic") return ServerKind::basic;
  if (name == "transaction") return ServerKind::transactional;
  if (name == "hotswap") return ServerKind::hotswap;
  return std::nullopt;
}

ServeSession::ServeSession(ServerKind kind, std::string_view callback_name,
                           BasicServer::LogListener listener)
    : server_(start_up(kind, callback_name, std::move(listener))) {}

ServeSession::Status ServeSession::feed_line(std::string_view line) {
  ++line_number_;
  if (crash_) return Status::crashed;
  if (is_skippable_line(line)) return Status::skipped;
  Request req = parse_scenario_line(line, line_number_);
  try {
    server_->handle(req);
  } catch (const ServerError& e) {
    crash_ = e.what();
    return Status::crashed;
  }
  return Status::ok;
}

ServeSession::Status ServeSession::finish() {
  if (crash_) return Status::crashed;
  if (!finished_) {
    server_->finish();
    finished_ = true;
  }
  return Status::ok;
}

}  // namespace stepwise
