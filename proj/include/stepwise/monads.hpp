#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepwise/value.hpp"

namespace stepwise {

/// Number of divisions performed so far.
struct CountState {
  std::uint64_t count = 0;
  friend bool operator==(const CountState&, const CountState&) = default;
};

using CountResponse = Response<Value, CountState>;

class Monad;
using MonadPtr = std::shared_ptr<const Monad>;
using Continuation = std::function<MonadPtr(const Value&)>;

/// Common contract of every effect kind: an immutable wrapped computation
/// that can be sequenced with bind and rendered as text.
///
/// The family is open. A continuation may answer a different kind than the
/// monad it was bound to (pure values bind into raises, for instance); kinds
/// that thread something through the continuation (State, Output) require
/// the continuation to answer their own kind and throw MonadKindMismatch
/// otherwise.
class Monad : public std::enable_shared_from_this<Monad> {
 public:
  virtual ~Monad() = default;
  virtual std::string_view kind() const noexcept = 0;
  virtual MonadPtr bind(Continuation k) const = 0;
  virtual std::string render() const = 0;
};

class MonadKindMismatch : public std::logic_error {
 public:
  MonadKindMismatch(std::string_view expected, std::string_view actual);
};

/// Effect-free computation answering `contents`.
class Pure final : public Monad {
 public:
  explicit Pure(Value contents) : contents_(std::move(contents)) {}
  const Value& contents() const noexcept { return contents_; }

  static constexpr std::string_view kind_name = "pure";
  std::string_view kind() const noexcept override { return kind_name; }
  MonadPtr bind(Continuation k) const override;
  std::string render() const override;

  friend bool operator==(const Pure& a, const Pure& b) { return a.contents_ == b.contents_; }

 private:
  Value contents_;
};

/// A computation that stopped with an exception; binding it discards the
/// continuation.
class Raise final : public Monad {
 public:
  /// Throws std::invalid_argument on an empty reason.
  explicit Raise(std::string reason);
  const std::string& reason() const noexcept { return reason_; }

  static constexpr std::string_view kind_name = "raise";
  std::string_view kind() const noexcept override { return kind_name; }
  MonadPtr bind(Continuation k) const override;
  std::string render() const override;

  friend bool operator==(const Raise& a, const Raise& b) { return a.reason_ == b.reason_; }

 private:
  std::string reason_;
};

/// A computation that, given a CountState, answers a Response.
class State final : public Monad {
 public:
  using Computation = std::function<CountResponse(CountState)>;
  using StateContinuation = std::function<State(const Value&)>;

  explicit State(Computation computation) : computation_(std::move(computation)) {}

  CountResponse execute_in(CountState s) const { return computation_(s); }
  State then(StateContinuation k) const;

  static constexpr std::string_view kind_name = "state";
  std::string_view kind() const noexcept override { return kind_name; }
  MonadPtr bind(Continuation k) const override;
  /// Executes in state 0: "result(<v>) count(<n>)".
  std::string render() const override;

 private:
  Computation computation_;
};

/// A value together with the text emitted while computing it.
class Output final : public Monad {
 public:
  using OutputContinuation = std::function<Output(const Value&)>;

  Output(Value contents, std::string output)
      : contents_(std::move(contents)), output_(std::move(output)) {}
  const Value& contents() const noexcept { return contents_; }
  const std::string& output() const noexcept { return output_; }

  Output then(const OutputContinuation& k) const;

  static constexpr std::string_view kind_name = "output";
  std::string_view kind() const noexcept override { return kind_name; }
  MonadPtr bind(Continuation k) const override;
  /// The accumulated output followed by "value: <v>\n".
  std::string render() const override;

  friend bool operator==(const Output& a, const Output& b) {
    return a.contents_ == b.contents_ && a.output_ == b.output_;
  }

 private:
  Value contents_;
  std::string output_;
};

enum class UnitKind { pure, state, output };

MonadPtr unit(UnitKind kind, Value v);
State unit_state(Value v);

MonadPtr bind_pure(const Pure& m, const Continuation& k);
MonadPtr bind_raise(const Raise& m, const Continuation& k);
State bind_state(const State& m, State::StateContinuation k);
Output bind_output(const Output& m, const Output::OutputContinuation& k);

CountResponse execute_in(const State& m, CountState s);

/// Maps n to Response(unit, n + 1).
State tally();

std::string render_monad(const Monad& m);

template <class M>
MonadPtr make_monad(M m) {
  return std::make_shared<const M>(std::move(m));
}

/// Downcast helper; throws MonadKindMismatch when `m` is not an M.
template <class M>
const M& monad_cast(const MonadPtr& m) {
  if (const auto* p = dynamic_cast<const M*>(m.get())) return *p;
  throw MonadKindMismatch(M::kind_name, m->kind());
}

}  // namespace stepwise
