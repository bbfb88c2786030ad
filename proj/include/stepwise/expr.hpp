#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace stepwise {

/// Immutable expression tree of constants and divisions.
///
/// Nodes are shared and never modified after construction, so copying an
/// Expr is cheap and copies may be handed to deferred computations freely.
class Expr {
 public:
  enum class Kind { con, div };

  static Expr con(double value);
  static Expr div(Expr left, Expr right);

  Kind kind() const noexcept;
  bool is_con() const noexcept { return kind() == Kind::con; }
  bool is_div() const noexcept { return kind() == Kind::div; }

  /// Precondition: is_con().
  double value() const;
  /// Precondition: is_div().
  const Expr& left() const;
  const Expr& right() const;

  /// Structural equality; constants compare by bit pattern so that -0 and 0
  /// are distinct (they render differently).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Thrown by the direct evaluator when a divisor is exactly zero.
class DivideByZero : public std::domain_error {
 public:
  explicit DivideByZero(double numerator);
  double numerator() const noexcept { return numerator_; }

 private:
  double numerator_;
};

/// Fractional division; throws DivideByZero when `divisor == 0`.
double checked_divide(double numerator, double divisor);

/// Effect-free evaluation.
double eval_simple(const Expr& e);

/// "con 5", "div(con 1, con 2)".
std::string render_expr(const Expr& e);

std::size_t node_count(const Expr& e);
std::size_t div_count(const Expr& e);
std::size_t depth(const Expr& e);

}  // namespace stepwise
