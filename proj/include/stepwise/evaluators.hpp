#pragma once

#include <string>

#include "stepwise/expr.hpp"
#include "stepwise/monads.hpp"

namespace stepwise {

/// Monadic evaluation skeleton. Each node kind has its own overridable
/// action, and the monad a variant works in is chosen by `lift`. Variants
/// derive from one another and override only what changes.
///
/// Computations answered by `eval` may refer back to the evaluator (State
/// runs lazily), so an evaluator must outlive everything it produced.
class MonadicEvaluator {
 public:
  virtual ~MonadicEvaluator() = default;

  MonadPtr eval(const Expr& e) const;

 protected:
  /// Injects the value computed at `node` into this variant's monad.
  virtual MonadPtr lift(const Expr& node, Value v) const;
  virtual MonadPtr eval_con(const Expr& node) const;
  /// Left operand, then right operand, then `divide`.
  virtual MonadPtr eval_div(const Expr& node) const;
  virtual MonadPtr divide(const Expr& node, double numerator, double divisor) const;
};

/// Zero divisors become Raise values instead of thrown errors.
class ExceptionEvaluator : public MonadicEvaluator {
 protected:
  MonadPtr divide(const Expr& node, double numerator, double divisor) const override;
};

/// Lifts into the state monad; nodes themselves are unchanged.
class StatefulEvaluator : public MonadicEvaluator {
 protected:
  MonadPtr lift(const Expr& node, Value v) const override;
};

/// Stateful evaluation that tallies every division before performing it.
class CountingEvaluator : public StatefulEvaluator {
 protected:
  MonadPtr eval_div(const Expr& node) const override;
};

/// Every node emits a trace line for the value it computed.
class TracingEvaluator : public MonadicEvaluator {
 protected:
  MonadPtr lift(const Expr& node, Value v) const override;
};

/// "eval(<expr>) => <value>\n"
std::string trace_line(const Expr& e, const Value& v);

/// Pure(eval_simple(e)); DivideByZero propagates.
Pure eval_monadic(const Expr& e);
/// Pure, or the Raise for the first zero division in left-to-right order.
MonadPtr eval_with_exceptions(const Expr& e);
/// State evaluation without counting.
State eval_stateful(const Expr& e);
/// State evaluation adding the number of divisions to the count.
State eval_counting(const Expr& e);
/// Output whose trace lists every node in postorder.
Output eval_tracing(const Expr& e);

}  // namespace stepwise
