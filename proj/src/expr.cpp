#include "fejer/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"

namespace fejer {

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Op = Expression::Op;
using Func = Expression::Func;

template <class T>
NodePtr make(T value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

struct FuncInfo {
  std::string_view name;
  Func func;
  int arity;
};

constexpr FuncInfo kFunctions[] = {
    {"abs", Func::Abs, 1},  {"exp", Func::Exp, 1}, {"log", Func::Log, 1}, {"sqrt", Func::Sqrt, 1},
    {"sin", Func::Sin, 1},  {"cos", Func::Cos, 1}, {"pow", Func::Pow, 2},
};

std::string_view func_name(Func f) {
  for (const auto& info : kFunctions)
    if (info.func == f) return info.name;
  return "?";
}

char op_char(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
    case Op::Pow: return '^';
  }
  return '?';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError("empty expression", pos_);
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size())
        throw SyntaxError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw SyntaxError(std::string("expected '") + c + "', found '" + src_[pos_] + "'", pos_);
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(Expression::Binary{Op::Add, lhs, term()});
      else if (accept('-'))
        lhs = make(Expression::Binary{Op::Sub, lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Expression::Binary{Op::Mul, lhs, unary()});
      else if (accept('/'))
        lhs = make(Expression::Binary{Op::Div, lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Expression::Negate{unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Expression::Binary{Op::Pow, base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) throw SyntaxError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // not an exponent; leave 'e' for the next token
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_ || !std::isfinite(value))
      throw SyntaxError("malformed number", start);
    return make(Expression::Constant{value});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Expression::Variable{});
    const auto it = std::find_if(std::begin(kFunctions), std::end(kFunctions),
                                 [&](const FuncInfo& f) { return f.name == name; });
    if (it == std::end(kFunctions)) throw UnknownIdentifierError(std::string(name), start);
    expect('(');
    Expression::Call call{it->func, expr(), nullptr};
    if (it->arity == 2) {
      expect(',');
      call.arg1 = expr();
    }
    expect(')');
    return make(std::move(call));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string print(const Node& n) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Expression::Constant>) {
          return detail::shortest(v.value);
        } else if constexpr (std::is_same_v<T, Expression::Variable>) {
          return "x";
        } else if constexpr (std::is_same_v<T, Expression::Negate>) {
          return "(-" + print(*v.operand) + ")";
        } else if constexpr (std::is_same_v<T, Expression::Binary>) {
          return "(" + print(*v.lhs) + op_char(v.op) + print(*v.rhs) + ")";
        } else {
          std::string s(func_name(v.func));
          s += "(" + print(*v.arg0);
          if (v.arg1) s += "," + print(*v.arg1);
          return s + ")";
        }
      },
      n.value);
}

bool same(const Node& a, const Node& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b.value);
        if constexpr (std::is_same_v<T, Expression::Constant>) {
          return va.value == vb.value;
        } else if constexpr (std::is_same_v<T, Expression::Variable>) {
          return true;
        } else if constexpr (std::is_same_v<T, Expression::Negate>) {
          return same(*va.operand, *vb.operand);
        } else if constexpr (std::is_same_v<T, Expression::Binary>) {
          return va.op == vb.op && same(*va.lhs, *vb.lhs) && same(*va.rhs, *vb.rhs);
        } else {
          if (va.func != vb.func || !same(*va.arg0, *vb.arg0)) return false;
          if (!va.arg1 || !vb.arg1) return !va.arg1 && !vb.arg1;
          return same(*va.arg1, *vb.arg1);
        }
      },
      a.value);
}

double checked_pow(const Node& n, double base, double exponent, double x) {
  if (base == 0.0 && exponent < 0.0) throw DomainError(print(n), x, "zero to a negative power");
  if (base < 0.0 && std::trunc(exponent) != exponent)
    throw DomainError(print(n), x, "negative base with non-integer exponent");
  return std::pow(base, exponent);
}

double eval(const Node& n, double x) {
  const double r = std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Expression::Constant>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, Expression::Variable>) {
          return x;
        } else if constexpr (std::is_same_v<T, Expression::Negate>) {
          return -eval(*v.operand, x);
        } else if constexpr (std::is_same_v<T, Expression::Binary>) {
          const double l = eval(*v.lhs, x);
          const double r = eval(*v.rhs, x);
          switch (v.op) {
            case Op::Add: return l + r;
            case Op::Sub: return l - r;
            case Op::Mul: return l * r;
            case Op::Div:
              if (r == 0.0) throw DomainError(print(n), x, "division by zero");
              return l / r;
            case Op::Pow: return checked_pow(n, l, r, x);
          }
          return 0.0;
        } else {
          const double a = eval(*v.arg0, x);
          switch (v.func) {
            case Func::Abs: return std::fabs(a);
            case Func::Exp: return std::exp(a);
            case Func::Log:
              if (a <= 0.0) throw DomainError(print(n), x, "log of a nonpositive value");
              return std::log(a);
            case Func::Sqrt:
              if (a < 0.0) throw DomainError(print(n), x, "sqrt of a negative value");
              return std::sqrt(a);
            case Func::Sin: return std::sin(a);
            case Func::Cos: return std::cos(a);
            case Func::Pow: return checked_pow(n, a, eval(*v.arg1, x), x);
          }
          return 0.0;
        }
      },
      n.value);
  if (!std::isfinite(r)) throw DomainError(print(n), x, "non-finite result");
  return r;
}

}  // namespace

Expression Expression::parse(std::string_view source) { return Expression(Parser(source).parse()); }

double Expression::operator()(double x) const { return eval(*root_, x); }

std::string Expression::to_string() const { return print(*root_); }

bool Expression::same_structure(const Expression& other) const { return same(*root_, *other.root_); }

double numeric_derivative(const Expression& e, double x, double scale) {
  const double h = scale * std::max(1.0, std::fabs(x));
  return (e(x + h) - e(x - h)) / (2.0 * h);
}

}  // namespace fejer
