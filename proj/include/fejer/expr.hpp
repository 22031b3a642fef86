#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace fejer {

/// A parsed scalar function of the single variable `x`.
///
/// Grammar (whitespace insignificant):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?          right-associative
///     primary := number | 'x' | call | '(' expr ')'
///     call    := name '(' expr (',' expr)* ')'   name in {abs exp log sqrt sin cos pow}
///
/// Expressions are immutable; copies share the underlying tree.
class Expression {
 public:
  enum class Op { Add, Sub, Mul, Div, Pow };
  enum class Func { Abs, Exp, Log, Sqrt, Sin, Cos, Pow };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Constant {
    double value;
  };
  struct Variable {};
  struct Negate {
    NodePtr operand;
  };
  struct Binary {
    Op op;
    NodePtr lhs, rhs;
  };
  struct Call {
    Func func;
    NodePtr arg0, arg1;  // arg1 only for pow
  };

  struct Node {
    std::variant<Constant, Variable, Negate, Binary, Call> value;
  };

  /// Throws SyntaxError or UnknownIdentifierError.
  static Expression parse(std::string_view source);

  /// Throws DomainError for out-of-domain operations or non-finite results.
  double operator()(double x) const;
  double evaluate(double x) const { return (*this)(x); }

  /// Fully parenthesised text that parses back to an identical tree.
  std::string to_string() const;

  /// Structural equality of trees.
  bool same_structure(const Expression& other) const;

  const Node& root() const { return *root_; }

 private:
  explicit Expression(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

inline constexpr double kDefaultDerivativeScale = 1e-6;

/// Central difference (e(x+h) - e(x-h)) / 2h with h = scale * max(1, |x|).
double numeric_derivative(const Expression& e, double x, double scale = kDefaultDerivativeScale);

}  // namespace fejer
