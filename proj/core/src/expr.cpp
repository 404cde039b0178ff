#include "mulint/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

namespace mulint {

struct Expr::Node {
  NodeKind kind = NodeKind::Constant;
  ComplexValue value{};
  std::string name;
  std::size_t slot = 0;
  std::vector<Expr> children;
};

namespace {

int arity(NodeKind kind) {
  switch (kind) {
    case NodeKind::Constant:
    case NodeKind::Variable:
    case NodeKind::NamedConstant:
      return 0;
    case NodeKind::Neg:
    case NodeKind::Exp:
    case NodeKind::Log:
    case NodeKind::Sin:
    case NodeKind::Cos:
      return 1;
    default:
      return 2;
  }
}

const std::string& empty_name() {
  static const std::string empty;
  return empty;
}

}  // namespace

Expr::Expr() : Expr(std::make_shared<const Node>()) {}
Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(ComplexValue value) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name, std::size_t slot) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->name = std::move(name);
  n->slot = slot;
  return Expr(std::move(n));
}

Expr Expr::named(std::string_view name) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::NamedConstant;
  n->name = std::string(name);
  if (name == "pi") {
    n->value = std::numbers::pi;
  } else if (name == "e") {
    n->value = std::numbers::e;
  } else if (name == "i") {
    n->value = ComplexValue(0.0, 1.0);
  } else {
    throw Error(ErrorKind::UnknownIdentifier, "unknown named constant '" + n->name + "'");
  }
  return Expr(std::move(n));
}

Expr Expr::unary(NodeKind kind, Expr operand) {
  if (arity(kind) != 1) throw Error(ErrorKind::InvalidArgument, "node kind is not unary");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(operand));
  return Expr(std::move(n));
}

Expr Expr::binary(NodeKind kind, Expr lhs, Expr rhs) {
  if (arity(kind) != 2) throw Error(ErrorKind::InvalidArgument, "node kind is not binary");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
ComplexValue Expr::value() const noexcept { return node_->value; }
const std::string& Expr::name() const noexcept {
  return node_ ? node_->name : empty_name();
}
std::size_t Expr::slot() const noexcept { return node_->slot; }
std::span<const Expr> Expr::children() const noexcept { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::Constant:
      return a.value() == b.value();
    case NodeKind::Variable:
      return a.name() == b.name() && a.slot() == b.slot();
    case NodeKind::NamedConstant:
      return a.name() == b.name();
    default:
      break;
  }
  auto ca = a.children();
  auto cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Expr operator+(Expr a, Expr b) { return Expr::binary(NodeKind::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(NodeKind::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(NodeKind::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(NodeKind::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(NodeKind::Neg, std::move(a)); }

ComplexValue principal_log(ComplexValue w) {
  // Arg(-x - 0i) must be +pi, not -pi.
  if (w.imag() == 0.0) w = ComplexValue(w.real(), 0.0);
  return std::log(w);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Imaginary, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
  double number = 0.0;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Imaginary: return "imaginary number";
    case Tok::Name: return "name";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      if (pos < src.size() && src[pos] == '.') {
        ++pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      }
      // Exponent only when digits follow; "2e" alone is not a literal.
      if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
        std::size_t q = pos + 1;
        if (q < src.size() && (src[q] == '+' || src[q] == '-')) ++q;
        if (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) {
          pos = q;
          while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
      }
      Token tok{Tok::Number, start, std::string(src.substr(start, pos - start))};
      if (tok.text == ".") throw SyntaxError(start, "malformed number");
      const auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                       tok.number);
      if (res.ec != std::errc() || res.ptr != tok.text.data() + tok.text.size()) {
        throw SyntaxError(start, "malformed number '" + tok.text + "'");
      }
      if (pos < src.size() && src[pos] == 'i' && (pos + 1 == src.size() || !is_ident(src[pos + 1]))) {
        ++pos;
        tok.kind = Tok::Imaginary;
      }
      out.push_back(std::move(tok));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < src.size() && is_ident(src[pos])) ++pos;
      out.push_back({Tok::Name, start, std::string(src.substr(start, pos - start))});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    ++pos;
    out.push_back({kind, start, std::string(1, c)});
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

std::optional<NodeKind> builtin_function(std::string_view name) {
  if (name == "exp") return NodeKind::Exp;
  if (name == "log") return NodeKind::Log;
  if (name == "sin") return NodeKind::Sin;
  if (name == "cos") return NodeKind::Cos;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::span<const std::string> variables,
         const ConstantTable& constants)
      : toks_(std::move(tokens)), vars_(variables), consts_(constants) {}

  Expr parse() {
    Expr e = expr();
    expect(Tok::End, "operator or end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      throw SyntaxError(peek().offset, "expected " + what + ", found " + describe(peek().kind));
    }
    ++pos_;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Tok op = next().kind;
      Expr rhs = term();
      lhs = Expr::binary(op == Tok::Plus ? NodeKind::Add : NodeKind::Sub, lhs, rhs);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Tok op = next().kind;
      Expr rhs = factor();
      lhs = Expr::binary(op == Tok::Star ? NodeKind::Mul : NodeKind::Div, lhs, rhs);
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return Expr::unary(NodeKind::Neg, factor());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (peek().kind == Tok::Caret) {
      ++pos_;
      return Expr::pow(base, factor());
    }
    return base;
  }

  Expr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number:
        ++pos_;
        return Expr::constant(tok.number);
      case Tok::Imaginary:
        ++pos_;
        return Expr::constant(ComplexValue(0.0, tok.number));
      case Tok::LParen: {
        ++pos_;
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Name:
        return name_atom();
      default:
        throw SyntaxError(tok.offset, "expected number, name or '(', found " + describe(tok.kind));
    }
  }

  Expr name_atom() {
    const Token tok = next();
    if (peek().kind == Tok::LParen) {
      const auto fn = builtin_function(tok.text);
      if (!fn) {
        throw Error(ErrorKind::UnknownIdentifier,
                    "unknown function '" + tok.text + "' at offset " + std::to_string(tok.offset));
      }
      ++pos_;
      Expr arg = expr();
      expect(Tok::RParen, "')'");
      return Expr::unary(*fn, arg);
    }
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (vars_[k] == tok.text) return Expr::variable(tok.text, k);
    }
    if (auto it = consts_.find(tok.text); it != consts_.end()) return Expr::constant(it->second);
    if (tok.text == "pi" || tok.text == "e" || tok.text == "i") return Expr::named(tok.text);
    if (builtin_function(tok.text)) {
      throw SyntaxError(peek().offset, "expected '(' after function '" + tok.text + "'");
    }
    throw Error(ErrorKind::UnknownIdentifier,
                "unknown identifier '" + tok.text + "' at offset " + std::to_string(tok.offset));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::span<const std::string> vars_;
  const ConstantTable& consts_;
};

}  // namespace

Expr parse_expression(std::string_view source, std::span<const std::string> variables,
                      const ConstantTable& constants) {
  if (source.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw SyntaxError(0, "empty expression");
  }
  return Parser(lex(source), variables, constants).parse();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

ComplexValue checked(ComplexValue v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::Evaluation, std::string("non-finite result in ") + what);
  }
  return v;
}

std::optional<long> integer_exponent(ComplexValue w) {
  if (w.imag() != 0.0) return std::nullopt;
  const double r = w.real();
  if (r != std::floor(r) || std::abs(r) > 1e9) return std::nullopt;
  return static_cast<long>(r);
}

ComplexValue integer_power(ComplexValue base, long n) {
  const bool invert = n < 0;
  unsigned long m = static_cast<unsigned long>(invert ? -n : n);
  ComplexValue result(1.0, 0.0);
  ComplexValue b = base;
  while (m != 0) {
    if (m & 1UL) result *= b;
    b *= b;
    m >>= 1;
  }
  if (invert) {
    if (result == ComplexValue(0.0, 0.0)) throw Error(ErrorKind::Evaluation, "division by zero in power");
    result = 1.0 / result;
  }
  return result;
}

template <typename Lookup>
ComplexValue eval(const Expr& e, const Lookup& lookup) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::NamedConstant:
      return e.value();
    case NodeKind::Variable:
      return lookup(e);
    default:
      break;
  }
  auto c = e.children();
  switch (e.kind()) {
    case NodeKind::Add: return checked(eval(c[0], lookup) + eval(c[1], lookup), "addition");
    case NodeKind::Sub: return checked(eval(c[0], lookup) - eval(c[1], lookup), "subtraction");
    case NodeKind::Mul: return checked(eval(c[0], lookup) * eval(c[1], lookup), "multiplication");
    case NodeKind::Div: {
      const ComplexValue num = eval(c[0], lookup);
      const ComplexValue den = eval(c[1], lookup);
      if (den == ComplexValue(0.0, 0.0)) throw Error(ErrorKind::Evaluation, "division by zero");
      return checked(num / den, "division");
    }
    case NodeKind::Neg: return -eval(c[0], lookup);
    case NodeKind::Exp: return checked(std::exp(eval(c[0], lookup)), "exp");
    case NodeKind::Log: {
      const ComplexValue u = eval(c[0], lookup);
      if (u == ComplexValue(0.0, 0.0)) throw Error(ErrorKind::Evaluation, "log(0)");
      return checked(principal_log(u), "log");
    }
    case NodeKind::Sin: return checked(std::sin(eval(c[0], lookup)), "sin");
    case NodeKind::Cos: return checked(std::cos(eval(c[0], lookup)), "cos");
    case NodeKind::Pow: {
      const ComplexValue base = eval(c[0], lookup);
      const ComplexValue w = eval(c[1], lookup);
      if (auto n = integer_exponent(w)) return checked(integer_power(base, *n), "power");
      if (base == ComplexValue(0.0, 0.0)) throw Error(ErrorKind::Evaluation, "log(0) in power");
      return checked(std::exp(w * principal_log(base)), "power");
    }
    default:
      break;
  }
  throw Error(ErrorKind::Evaluation, "malformed expression tree");
}

}  // namespace

ComplexValue evaluate(const Expr& ast, std::span<const ComplexValue> values) {
  return eval(ast, [&](const Expr& v) {
    if (v.slot() >= values.size()) {
      throw Error(ErrorKind::Evaluation, "variable '" + v.name() + "' is not bound");
    }
    return values[v.slot()];
  });
}

ComplexValue evaluate(const Expr& ast, const Bindings& bindings) {
  return eval(ast, [&](const Expr& v) {
    auto it = bindings.find(v.name());
    if (it == bindings.end()) {
      throw Error(ErrorKind::Evaluation, "variable '" + v.name() + "' is not bound");
    }
    return it->second;
  });
}

// ---------------------------------------------------------------------------
// Symbolic differentiation with constant folding and identity elimination

namespace {

bool is_zero(const Expr& e) { return e.is_constant(ComplexValue(0.0, 0.0)); }
bool is_one(const Expr& e) { return e.is_constant(ComplexValue(1.0, 0.0)); }

Expr add(const Expr& a, const Expr& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
  return a + b;
}

Expr sub(const Expr& a, const Expr& b) {
  if (is_zero(b)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() - b.value());
  if (is_zero(a)) return -b;
  return a - b;
}

Expr mul(const Expr& a, const Expr& b) {
  if (is_zero(a) || is_zero(b)) return Expr::constant(0.0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
  return a * b;
}

Expr div(const Expr& a, const Expr& b) {
  if (is_one(b)) return a;
  if (is_zero(a)) return Expr::constant(0.0);
  if (a.is_constant() && b.is_constant() && b.value() != ComplexValue(0.0, 0.0)) {
    return Expr::constant(a.value() / b.value());
  }
  return a / b;
}

Expr neg(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.value());
  return -a;
}

Expr power(const Expr& base, const Expr& w) {
  if (is_zero(w)) return Expr::constant(1.0);
  if (is_one(w)) return base;
  return Expr::pow(base, w);
}

}  // namespace

bool depends_on(const Expr& ast, std::string_view var) {
  if (ast.kind() == NodeKind::Variable) return ast.name() == var;
  for (const Expr& c : ast.children()) {
    if (depends_on(c, var)) return true;
  }
  return false;
}

Expr differentiate(const Expr& e, std::string_view var) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::NamedConstant:
      return Expr::constant(0.0);
    case NodeKind::Variable:
      return Expr::constant(e.name() == var ? 1.0 : 0.0);
    default:
      break;
  }
  auto c = e.children();
  switch (e.kind()) {
    case NodeKind::Add:
      return add(differentiate(c[0], var), differentiate(c[1], var));
    case NodeKind::Sub:
      return sub(differentiate(c[0], var), differentiate(c[1], var));
    case NodeKind::Neg:
      return neg(differentiate(c[0], var));
    case NodeKind::Mul:
      return add(mul(differentiate(c[0], var), c[1]), mul(c[0], differentiate(c[1], var)));
    case NodeKind::Div: {
      // (u/v)' = u'/v - u v'/v^2
      const Expr du = differentiate(c[0], var);
      const Expr dv = differentiate(c[1], var);
      return sub(div(du, c[1]), div(mul(c[0], dv), power(c[1], Expr::constant(2.0))));
    }
    case NodeKind::Exp:
      return mul(differentiate(c[0], var), e);
    case NodeKind::Log:
      return div(differentiate(c[0], var), c[0]);
    case NodeKind::Sin:
      return mul(differentiate(c[0], var), Expr::cos(c[0]));
    case NodeKind::Cos:
      return neg(mul(differentiate(c[0], var), Expr::sin(c[0])));
    case NodeKind::Pow: {
      const Expr& base = c[0];
      const Expr& w = c[1];
      const Expr db = differentiate(base, var);
      if (!depends_on(w, var)) {
        // w * b^(w-1) * b'
        const Expr w_minus_1 = sub(w, Expr::constant(1.0));
        return mul(mul(w, power(base, w_minus_1)), db);
      }
      // b^w (w' Log b + w b'/b)
      const Expr dw = differentiate(w, var);
      return mul(e, add(mul(dw, Expr::log(base)), div(mul(w, db), base)));
    }
    default:
      break;
  }
  throw Error(ErrorKind::NonDifferentiable, "unsupported node in differentiation");
}

Expr substitute(const Expr& e, std::string_view var, const Expr& replacement) {
  if (e.kind() == NodeKind::Variable) return e.name() == var ? replacement : e;
  auto c = e.children();
  if (c.empty()) return e;
  if (c.size() == 1) return Expr::unary(e.kind(), substitute(c[0], var, replacement));
  return Expr::binary(e.kind(), substitute(c[0], var, replacement),
                      substitute(c[1], var, replacement));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string constant_text(ComplexValue v) {
  if (v.imag() == 0.0) {
    if (std::signbit(v.real())) return "(-" + format_double(-v.real()) + ")";
    return format_double(v.real());
  }
  if (v.real() == 0.0 && !std::signbit(v.imag())) return format_double(v.imag()) + "i";
  // Not representable as a single literal; round-trips by value, not by structure.
  std::string s = "(" + format_double(v.real());
  s += std::signbit(v.imag()) ? "-" : "+";
  s += format_double(std::abs(v.imag())) + "i)";
  return s;
}

const char* function_name(NodeKind k) {
  switch (k) {
    case NodeKind::Exp: return "exp";
    case NodeKind::Log: return "log";
    case NodeKind::Sin: return "sin";
    case NodeKind::Cos: return "cos";
    default: return "";
  }
}

const char* operator_text(NodeKind k) {
  switch (k) {
    case NodeKind::Add: return " + ";
    case NodeKind::Sub: return " - ";
    case NodeKind::Mul: return " * ";
    case NodeKind::Div: return " / ";
    case NodeKind::Pow: return "^";
    default: return "";
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant:
      return constant_text(e.value());
    case NodeKind::Variable:
    case NodeKind::NamedConstant:
      return e.name();
    case NodeKind::Neg:
      return "-(" + to_string(e.children()[0]) + ")";
    case NodeKind::Exp:
    case NodeKind::Log:
    case NodeKind::Sin:
    case NodeKind::Cos:
      return std::string(function_name(e.kind())) + "(" + to_string(e.children()[0]) + ")";
    default:
      return "(" + to_string(e.children()[0]) + ")" + operator_text(e.kind()) + "(" +
             to_string(e.children()[1]) + ")";
  }
}

}  // namespace mulint
