#include "stepwise/monads.hpp"

namespace stepwise {

MonadKindMismatch::MonadKindMismatch(std::string_view expected, std::string_view actual)
    : std::logic_error("continuation answered a " + std::string(actual) +
                       " monad where a " + std::string(expected) + " monad is required") {}

MonadPtr Pure::bind(Continuation k) const { return k(contents_); }

std::string Pure::render() const { return "pure(" + render_value(contents_) + ")"; }

Raise::Raise(std::string reason) : reason_(std::move(reason)) {
  if (reason_.empty()) throw std::invalid_argument("raise reason must be non-empty");
}

MonadPtr Raise::bind(Continuation) const {
  // Owned instances answer themselves; a stack-held Raise answers an equal copy.
  if (auto self = weak_from_this().lock()) return self;
  return make_monad(*this);
}

std::string Raise::render() const { return "raise(" + reason_ + ")"; }

State State::then(StateContinuation k) const {
  return State([first = computation_, k = std::move(k)](CountState s) {
    CountResponse r = first(s);
    return k(r.result).execute_in(r.state);
  });
}

MonadPtr State::bind(Continuation k) const {
  return make_monad(then([k = std::move(k)](const Value& v) {
    return monad_cast<State>(k(v));
  }));
}

std::string State::render() const {
  CountResponse r = execute_in(CountState{0});
  return "result(" + render_value(r.result) + ") count(" + std::to_string(r.state.count) + ")";
}

Output Output::then(const OutputContinuation& k) const {
  Output next = k(contents_);
  return Output(next.contents_, output_ + next.output_);
}

MonadPtr Output::bind(Continuation k) const {
  return make_monad(then([&k](const Value& v) { return monad_cast<Output>(k(v)); }));
}

std::string Output::render() const { return output_ + "value: " + render_value(contents_) + "\n"; }

State unit_state(Value v) {
  return State([v = std::move(v)](CountState s) { return CountResponse{v, s}; });
}

MonadPtr unit(UnitKind kind, Value v) {
  switch (kind) {
    case UnitKind::pure:
      return make_monad(Pure(std::move(v)));
    case UnitKind::state:
      return make_monad(unit_state(std::move(v)));
    case UnitKind::output:
      return make_monad(Output(std::move(v), ""));
  }
  throw std::invalid_argument("unknown unit kind");
}

MonadPtr bind_pure(const Pure& m, const Continuation& k) { return m.bind(k); }

MonadPtr bind_raise(const Raise& m, const Continuation& k) { return m.bind(k); }

State bind_state(const State& m, State::StateContinuation k) { return m.then(std::move(k)); }

Output bind_output(const Output& m, const Output::OutputContinuation& k) { return m.then(k); }

CountResponse execute_in(const State& m, CountState s) { return m.execute_in(s); }

State tally() {
  return State([](CountState s) { return CountResponse{unit_value, CountState{s.count + 1}}; });
}

std::string render_monad(const Monad& m) { return m.render(); }

}  // namespace stepwise
