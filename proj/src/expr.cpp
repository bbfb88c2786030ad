#include "stepwise/expr.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <variant>

#include "stepwise/value.hpp"

namespace stepwise {

struct Expr::Node {
  struct ConNode {
    double value;
  };
  struct DivNode {
    Expr left;
    Expr right;
  };
  std::variant<ConNode, DivNode> data;
};

Expr Expr::con(double value) {
  return Expr(std::make_shared<const Node>(Node{Node::ConNode{value}}));
}

Expr Expr::div(Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{Node::DivNode{std::move(left), std::move(right)}}));
}

Expr::Kind Expr::kind() const noexcept {
  return std::holds_alternative<Node::ConNode>(node_->data) ? Kind::con : Kind::div;
}

double Expr::value() const {
  if (const auto* c = std::get_if<Node::ConNode>(&node_->data)) return c->value;
  throw std::logic_error("Expr::value called on a div node");
}

const Expr& Expr::left() const {
  if (const auto* d = std::get_if<Node::DivNode>(&node_->data)) return d->left;
  throw std::logic_error("Expr::left called on a con node");
}

const Expr& Expr::right() const {
  if (const auto* d = std::get_if<Node::DivNode>(&node_->data)) return d->right;
  throw std::logic_error("Expr::right called on a con node");
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_con()) {
    return std::bit_cast<std::uint64_t>(a.value()) ==
           std::bit_cast<std::uint64_t>(b.value());
  }
  return a.left() == b.left() && a.right() == b.right();
}

DivideByZero::DivideByZero(double numerator)
    : std::domain_error("dividing " + format_number(numerator) + " by zero"),
      numerator_(numerator) {}

double checked_divide(double numerator, double divisor) {
  if (divisor == 0) throw DivideByZero(numerator);
  return numerator / divisor;
}

double eval_simple(const Expr& e) {
  if (e.is_con()) return e.value();
  double numerator = eval_simple(e.left());
  double divisor = eval_simple(e.right());
  return checked_divide(numerator, divisor);
}

std::string render_expr(const Expr& e) {
  if (e.is_con()) return "con " + format_number(e.value());
  return "div(" + render_expr(e.left()) + ", " + render_expr(e.right()) + ")";
}

std::size_t node_count(const Expr& e) {
  return e.is_con() ? 1 : 1 + node_count(e.left()) + node_count(e.right());
}

std::size_t div_count(const Expr& e) {
  return e.is_con() ? 0 : 1 + div_count(e.left()) + div_count(e.right());
}

std::size_t depth(const Expr& e) {
  return e.is_con() ? 1 : 1 + std::max(depth(e.left()), depth(e.right()));
}

}  // namespace stepwise
