#include "curvspec/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "curvspec/hyperdual.hpp"

namespace curvspec {
namespace detail {

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Abs };

static const std::map<std::string, Func> kFuncs = {
    {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan},
    {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"tanh", Func::Tanh},
    {"exp", Func::Exp},   {"log", Func::Log},   {"sqrt", Func::Sqrt},
    {"abs", Func::Abs}};

struct ExprNode {
  enum class Kind { Number, Coord, Param, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind;
  double number = 0.0;    // Kind::Number
  int slot = -1;          // coordinate or parameter index
  std::string name;       // identifier text, kept for printing
  Func func = Func::Sin;  // Kind::Call
  std::unique_ptr<ExprNode> a, b;
};

using Kind = ExprNode::Kind;

// ---------------------------------------------------------------- lexer ----

struct Token {
  enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  double number = 0.0;
  std::string text;
  std::size_t offset = 0;
};

static std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.offset = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s.c_str() + i;
      char* end = nullptr;
      t.number = std::strtod(begin, &end);
      if (end == begin) throw SyntaxError("invalid number", i);
      t.type = Token::Type::Number;
      t.text = s.substr(i, static_cast<std::size_t>(end - begin));
      i += static_cast<std::size_t>(end - begin);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      t.type = Token::Type::Ident;
      t.text = s.substr(i, j - i);
      i = j;
    } else {
      switch (c) {
        case '+': t.type = Token::Type::Plus; break;
        case '-': t.type = Token::Type::Minus; break;
        case '*': t.type = Token::Type::Star; break;
        case '/': t.type = Token::Type::Slash; break;
        case '^': t.type = Token::Type::Caret; break;
        case '(': t.type = Token::Type::LParen; break;
        case ')': t.type = Token::Type::RParen; break;
        default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Token::Type::End;
  end.offset = s.size();
  out.push_back(end);
  return out;
}

// --------------------------------------------------------------- parser ----

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  const std::vector<std::string>& coords;
  const std::map<std::string, double>& params;
  std::vector<double>& param_values;
  std::map<std::string, int>& param_slots;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool accept(Token::Type t) {
    if (toks[pos].type == t) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(Token::Type t, const char* what) {
    if (!accept(t)) throw SyntaxError(std::string("expected ") + what, peek().offset);
  }

  std::unique_ptr<ExprNode> expr() {
    auto lhs = term();
    while (true) {
      if (accept(Token::Type::Plus)) {
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Add;
        n->a = std::move(lhs);
        n->b = term();
        lhs = std::move(n);
      } else if (accept(Token::Type::Minus)) {
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Sub;
        n->a = std::move(lhs);
        n->b = term();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<ExprNode> term() {
    auto lhs = unary();
    while (true) {
      if (accept(Token::Type::Star)) {
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Mul;
        n->a = std::move(lhs);
        n->b = unary();
        lhs = std::move(n);
      } else if (accept(Token::Type::Slash)) {
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Div;
        n->a = std::move(lhs);
        n->b = unary();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<ExprNode> unary() {
    if (accept(Token::Type::Minus)) {
      auto n = std::make_unique<ExprNode>();
      n->kind = Kind::Neg;
      n->a = unary();
      return n;
    }
    return power();
  }

  std::unique_ptr<ExprNode> power() {
    auto base = primary();
    if (accept(Token::Type::Caret)) {
      auto n = std::make_unique<ExprNode>();
      n->kind = Kind::Pow;
      n->a = std::move(base);
      n->b = unary();  // right-associative, exponent may carry a sign
      return n;
    }
    return base;
  }

  std::unique_ptr<ExprNode> primary() {
    const Token& t = peek();
    if (accept(Token::Type::Number)) {
      auto n = std::make_unique<ExprNode>();
      n->kind = Kind::Number;
      n->number = t.number;
      return n;
    }
    if (accept(Token::Type::LParen)) {
      auto inner = expr();
      expect(Token::Type::RParen, "')'");
      return inner;
    }
    if (t.type == Token::Type::Ident) {
      next();
      if (peek().type == Token::Type::LParen) {
        auto it = kFuncs.find(t.text);
        if (it == kFuncs.end()) throw UnknownIdentifier(t.text);
        next();  // '('
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Call;
        n->func = it->second;
        n->name = t.text;
        n->a = expr();
        expect(Token::Type::RParen, "')'");
        return n;
      }
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == t.text) {
          auto n = std::make_unique<ExprNode>();
          n->kind = Kind::Coord;
          n->slot = static_cast<int>(k);
          n->name = t.text;
          return n;
        }
      }
      auto pit = params.find(t.text);
      if (pit != params.end()) {
        auto n = std::make_unique<ExprNode>();
        n->kind = Kind::Param;
        n->name = t.text;
        auto sit = param_slots.find(t.text);
        if (sit == param_slots.end()) {
          sit = param_slots.emplace(t.text, static_cast<int>(param_values.size())).first;
          param_values.push_back(pit->second);
        }
        n->slot = sit->second;
        return n;
      }
      throw UnknownIdentifier(t.text);
    }
    throw SyntaxError("expected a value", t.offset);
  }
};

// ------------------------------------------------------------- evaluator ----

// double/long double need the std functions in scope so the same unqualified
// calls resolve for both them and HyperDual.
using std::abs;
using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tan;
using std::tanh;

template <class T>
static double value_of(const T& x) {
  return static_cast<double>(x);
}
static double value_of(const HyperDual& x) { return x.v; }

// Exponents built from literals and parameters are constants, so x^p can use
// the power rule (valid for negative bases with integer p).
static std::optional<double> constant_exponent(const ExprNode* n,
                                               const std::vector<double>& param_vals) {
  switch (n->kind) {
    case Kind::Number: return n->number;
    case Kind::Param: return param_vals[static_cast<std::size_t>(n->slot)];
    case Kind::Neg: {
      auto inner = constant_exponent(n->a.get(), param_vals);
      if (inner) return -*inner;
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

template <class T>
static T eval_node(const ExprNode* n, const std::vector<T>& coord_vals,
                   const std::vector<double>& param_vals) {
  switch (n->kind) {
    case Kind::Number: return T(n->number);
    case Kind::Coord: return coord_vals[static_cast<std::size_t>(n->slot)];
    case Kind::Param: return T(param_vals[static_cast<std::size_t>(n->slot)]);
    case Kind::Neg: return -eval_node(n->a.get(), coord_vals, param_vals);
    case Kind::Add:
      return eval_node(n->a.get(), coord_vals, param_vals) +
             eval_node(n->b.get(), coord_vals, param_vals);
    case Kind::Sub:
      return eval_node(n->a.get(), coord_vals, param_vals) -
             eval_node(n->b.get(), coord_vals, param_vals);
    case Kind::Mul:
      return eval_node(n->a.get(), coord_vals, param_vals) *
             eval_node(n->b.get(), coord_vals, param_vals);
    case Kind::Div:
      return eval_node(n->a.get(), coord_vals, param_vals) /
             eval_node(n->b.get(), coord_vals, param_vals);
    case Kind::Pow: {
      T base = eval_node(n->a.get(), coord_vals, param_vals);
      if (auto p = constant_exponent(n->b.get(), param_vals)) return pow(base, T(*p));
      T ex = eval_node(n->b.get(), coord_vals, param_vals);
      if (value_of(base) <= 0.0)
        throw DomainError("pow of non-positive base with non-constant exponent");
      return exp(ex * log(base));
    }
    case Kind::Call: {
      T arg = eval_node(n->a.get(), coord_vals, param_vals);
      switch (n->func) {
        case Func::Sin: return sin(arg);
        case Func::Cos: return cos(arg);
        case Func::Tan: return tan(arg);
        case Func::Sinh: return sinh(arg);
        case Func::Cosh: return cosh(arg);
        case Func::Tanh: return tanh(arg);
        case Func::Exp: return exp(arg);
        case Func::Log:
          if (value_of(arg) <= 0.0) throw DomainError("log of non-positive value");
          return log(arg);
        case Func::Sqrt:
          if (value_of(arg) < 0.0) throw DomainError("sqrt of negative value");
          return sqrt(arg);
        case Func::Abs: return abs(arg);
      }
      return T(0.0);
    }
  }
  return T(0.0);
}

// -------------------------------------------------------------- printer ----

static int precedence(const ExprNode* n) {
  switch (n->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

static void print_node(const ExprNode* n, std::string& out);

static void print_child(const ExprNode* child, int min_prec, std::string& out) {
  bool parens = precedence(child) < min_prec;
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

static void print_node(const ExprNode* n, std::string& out) {
  switch (n->kind) {
    case Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", n->number);
      out += buf;
      break;
    }
    case Kind::Coord:
    case Kind::Param: out += n->name; break;
    case Kind::Neg:
      out += '-';
      print_child(n->a.get(), 3, out);
      break;
    case Kind::Add:
      print_child(n->a.get(), 1, out);
      out += " + ";
      print_child(n->b.get(), 1, out);
      break;
    case Kind::Sub:
      print_child(n->a.get(), 1, out);
      out += " - ";
      print_child(n->b.get(), 2, out);  // a - (b + c) needs the parens
      break;
    case Kind::Mul:
      print_child(n->a.get(), 2, out);
      out += '*';
      print_child(n->b.get(), 2, out);
      break;
    case Kind::Div:
      print_child(n->a.get(), 2, out);
      out += '/';
      print_child(n->b.get(), 3, out);  // a/(b*c) needs the parens
      break;
    case Kind::Pow:
      print_child(n->a.get(), 5, out);  // base parenthesized unless atomic
      out += '^';
      print_child(n->b.get(), 4, out);
      break;
    case Kind::Call:
      out += n->name;
      out += '(';
      print_node(n->a.get(), out);
      out += ')';
      break;
  }
}

}  // namespace detail

// ----------------------------------------------------------- Expression ----

using detail::ExprNode;

Expression Expression::parse(const std::string& text,
                             const std::vector<std::string>& coords,
                             const std::map<std::string, double>& params) {
  Expression e;
  e.coords_ = coords;
  e.params_ = params;
  auto tokens = detail::lex(text);
  std::map<std::string, int> slots;
  detail::Parser p{tokens, 0, e.coords_, e.params_, e.param_values_, slots};
  auto root = p.expr();
  if (p.peek().type != detail::Token::Type::End)
    throw SyntaxError("unexpected trailing input", p.peek().offset);
  e.root_ = std::shared_ptr<const ExprNode>(root.release());
  return e;
}

double Expression::eval(const Eigen::VectorXd& point) const {
  if (point.size() != static_cast<Eigen::Index>(coords_.size()))
    throw Error("point dimension does not match coordinate count");
  std::vector<double> vals(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) vals[i] = point[static_cast<Eigen::Index>(i)];
  return detail::eval_node<double>(root_.get(), vals, param_values_);
}

long double Expression::eval_ld(const std::vector<long double>& point) const {
  if (point.size() != coords_.size())
    throw Error("point dimension does not match coordinate count");
  return detail::eval_node<long double>(root_.get(), point, param_values_);
}

Jet2 Expression::eval_jet2(const Eigen::VectorXd& point) const {
  if (point.size() != static_cast<Eigen::Index>(coords_.size()))
    throw Error("point dimension does not match coordinate count");
  const int n = static_cast<int>(coords_.size());
  Jet2 jet;
  jet.grad = Eigen::VectorXd::Zero(n);
  jet.hess = Eigen::MatrixXd::Zero(n, n);
  if (n == 0) {
    jet.value = eval(point);
    return jet;
  }
  std::vector<HyperDual> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int m = k; m < n; ++m) {
      for (int i = 0; i < n; ++i)
        vals[static_cast<std::size_t>(i)] =
            HyperDual(point[i], i == k ? 1.0 : 0.0, i == m ? 1.0 : 0.0, 0.0);
      HyperDual r = detail::eval_node<HyperDual>(root_.get(), vals, param_values_);
      if (k == 0 && m == 0) jet.value = r.v;
      if (k == m) jet.grad[k] = r.d1;
      jet.hess(k, m) = r.dd;
      jet.hess(m, k) = r.dd;
    }
  }
  return jet;
}

std::string Expression::str() const {
  std::string out;
  detail::print_node(root_.get(), out);
  return out;
}

}  // namespace curvspec
