#include "stepwise/evaluators.hpp"

namespace stepwise {

namespace {

double as_number(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  throw std::logic_error("expression evaluated to a non-number: " + render_value(v));
}

}  // namespace

MonadPtr MonadicEvaluator::eval(const Expr& e) const {
  return e.is_con() ? eval_con(e) : eval_div(e);
}

MonadPtr MonadicEvaluator::lift(const Expr&, Value v) const {
  return make_monad(Pure(std::move(v)));
}

MonadPtr MonadicEvaluator::eval_con(const Expr& node) const { return lift(node, node.value()); }

MonadPtr MonadicEvaluator::eval_div(const Expr& node) const {
  return eval(node.left())->bind([this, node](const Value& a) {
    return eval(node.right())->bind([this, node, numerator = as_number(a)](const Value& b) {
      return divide(node, numerator, as_number(b));
    });
  });
}

MonadPtr MonadicEvaluator::divide(const Expr& node, double numerator, double divisor) const {
  return lift(node, checked_divide(numerator, divisor));
}

MonadPtr ExceptionEvaluator::divide(const Expr& node, double numerator, double divisor) const {
  if (divisor == 0) return make_monad(Raise(DivideByZero(numerator).what()));
  return MonadicEvaluator::divide(node, numerator, divisor);
}

MonadPtr StatefulEvaluator::lift(const Expr&, Value v) const {
  return make_monad(unit_state(std::move(v)));
}

MonadPtr CountingEvaluator::eval_div(const Expr& node) const {
  return make_monad(tally())->bind(
      [this, node](const Value&) { return StatefulEvaluator::eval_div(node); });
}

MonadPtr TracingEvaluator::lift(const Expr& node, Value v) const {
  std::string line = trace_line(node, v);
  return make_monad(Output(std::move(v), std::move(line)));
}

std::string trace_line(const Expr& e, const Value& v) {
  return "eval(" + render_expr(e) + ") => " + render_value(v) + "\n";
}

namespace {

const MonadicEvaluator kMonadic;
const ExceptionEvaluator kExceptions;
const StatefulEvaluator kStateful;
const CountingEvaluator kCounting;
const TracingEvaluator kTracing;

}  // namespace

Pure eval_monadic(const Expr& e) { return monad_cast<Pure>(kMonadic.eval(e)); }

MonadPtr eval_with_exceptions(const Expr& e) { return kExceptions.eval(e); }

State eval_stateful(const Expr& e) { return monad_cast<State>(kStateful.eval(e)); }

State eval_counting(const Expr& e) { return monad_cast<State>(kCounting.eval(e)); }

Output eval_tracing(const Expr& e) { return monad_cast<Output>(kTracing.eval(e)); }

}  // namespace stepwise
