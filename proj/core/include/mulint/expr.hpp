#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mulint/errors.hpp"

namespace mulint {

enum class NodeKind {
  Constant,
  Variable,
  NamedConstant,  // pi, e, i
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Pow,
  Exp,
  Log,
  Sin,
  Cos,
};

/// Immutable expression tree over complex scalars.
///
/// Variables carry both a name and a slot index; the index addresses the value
/// span passed to `evaluate`. Trees share structure and are cheap to copy.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(ComplexValue value);
  static Expr variable(std::string name, std::size_t slot = 0);
  /// One of "pi", "e", "i".
  static Expr named(std::string_view name);
  static Expr unary(NodeKind kind, Expr operand);
  static Expr binary(NodeKind kind, Expr lhs, Expr rhs);

  static Expr exp(Expr u) { return unary(NodeKind::Exp, std::move(u)); }
  static Expr log(Expr u) { return unary(NodeKind::Log, std::move(u)); }
  static Expr sin(Expr u) { return unary(NodeKind::Sin, std::move(u)); }
  static Expr cos(Expr u) { return unary(NodeKind::Cos, std::move(u)); }
  static Expr pow(Expr base, Expr exponent) {
    return binary(NodeKind::Pow, std::move(base), std::move(exponent));
  }

  NodeKind kind() const noexcept;
  ComplexValue value() const noexcept;
  const std::string& name() const noexcept;
  std::size_t slot() const noexcept;
  std::span<const Expr> children() const noexcept;

  bool is_constant() const noexcept { return kind() == NodeKind::Constant; }
  bool is_constant(ComplexValue v) const noexcept { return is_constant() && value() == v; }

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

using ConstantTable = std::map<std::string, ComplexValue, std::less<>>;
using Bindings = std::map<std::string, ComplexValue, std::less<>>;

/// Parses `source`. Identifiers resolve in order: declared variables (slot =
/// position in `variables`), bound constants (replaced by their value), the
/// named constants pi, e, i. Builtin functions: exp, log, sin, cos.
Expr parse_expression(std::string_view source, std::span<const std::string> variables,
                      const ConstantTable& constants = {});

/// Fast path: `values[slot]` supplies each variable.
ComplexValue evaluate(const Expr& ast, std::span<const ComplexValue> values);
ComplexValue evaluate(const Expr& ast, const Bindings& bindings);
inline ComplexValue evaluate(const Expr& ast, ComplexValue single) {
  return evaluate(ast, std::span<const ComplexValue>(&single, 1));
}

Expr differentiate(const Expr& ast, std::string_view var);

/// Replaces every occurrence of `var` by `replacement`.
Expr substitute(const Expr& ast, std::string_view var, const Expr& replacement);

bool depends_on(const Expr& ast, std::string_view var);

/// Fully parenthesised text that parses back to a structurally equal tree
/// (for trees whose constants are non-negative reals or imaginaries).
std::string to_string(const Expr& ast);

/// Principal logarithm ln|w| + i Arg w with Arg in (-pi, pi].
ComplexValue principal_log(ComplexValue w);

}  // namespace mulint
