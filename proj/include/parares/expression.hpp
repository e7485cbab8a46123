#pragma once

// Small expression language for scalar reaction terms f(t,x,y).
// Variables: t, x (alias x1), x2, y, T (declared period).
// Functions: sin, cos, atan, tanh, exp_neg_sq, abs, min, max.

#include <cmath>
#include <cstddef>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parares {

struct EvalEnv {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double y = 0.0;
  double period = 1.0;  // bound to the symbol T
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

enum class NodeKind { Constant, Var, Unary, Binary, Call };
enum class VarId { T, X1, X2, Y, Period };
enum class FnId { Sin, Cos, Atan, Tanh, ExpNegSq, Abs, Min, Max };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind;
  double value = 0.0;            // Constant
  VarId var = VarId::T;          // Var
  char op = 0;                   // Unary ('-') / Binary ('+','-','*','/')
  FnId fn = FnId::Sin;           // Call
  std::vector<NodePtr> args;
};

inline double eval_node(const ExprNode& n, const EvalEnv& env) {
  switch (n.kind) {
    case NodeKind::Constant:
      return n.value;
    case NodeKind::Var:
      switch (n.var) {
        case VarId::T: return env.t;
        case VarId::X1: return env.x1;
        case VarId::X2: return env.x2;
        case VarId::Y: return env.y;
        case VarId::Period: return env.period;
      }
      return 0.0;
    case NodeKind::Unary:
      return -eval_node(*n.args[0], env);
    case NodeKind::Binary: {
      const double a = eval_node(*n.args[0], env);
      const double b = eval_node(*n.args[1], env);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return b == 0.0 ? 0.0 : a / b;  // guarded division
      }
      return 0.0;
    }
    case NodeKind::Call: {
      const double a = eval_node(*n.args[0], env);
      switch (n.fn) {
        case FnId::Sin: return std::sin(a);
        case FnId::Cos: return std::cos(a);
        case FnId::Atan: return std::atan(a);
        case FnId::Tanh: return std::tanh(a);
        case FnId::ExpNegSq: return std::exp(-a * a);
        case FnId::Abs: return std::abs(a);
        case FnId::Min: return std::min(a, eval_node(*n.args[1], env));
        case FnId::Max: return std::max(a, eval_node(*n.args[1], env));
      }
      return 0.0;
    }
  }
  return 0.0;
}

inline bool nodes_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Constant: return a.value == b.value;
    case NodeKind::Var: return a.var == b.var;
    case NodeKind::Unary: break;
    case NodeKind::Binary:
      if (a.op != b.op) return false;
      break;
    case NodeKind::Call:
      if (a.fn != b.fn) return false;
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!nodes_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

inline const char* fn_name(FnId f) {
  switch (f) {
    case FnId::Sin: return "sin";
    case FnId::Cos: return "cos";
    case FnId::Atan: return "atan";
    case FnId::Tanh: return "tanh";
    case FnId::ExpNegSq: return "exp_neg_sq";
    case FnId::Abs: return "abs";
    case FnId::Min: return "min";
    case FnId::Max: return "max";
  }
  return "?";
}

inline const char* var_name(VarId v) {
  switch (v) {
    case VarId::T: return "t";
    case VarId::X1: return "x";
    case VarId::X2: return "x2";
    case VarId::Y: return "y";
    case VarId::Period: return "T";
  }
  return "?";
}

inline void print_node(const ExprNode& n, std::ostream& os) {
  switch (n.kind) {
    case NodeKind::Constant: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      os << tmp.str();
      break;
    }
    case NodeKind::Var:
      os << var_name(n.var);
      break;
    case NodeKind::Unary:
      os << "(-";
      print_node(*n.args[0], os);
      os << ")";
      break;
    case NodeKind::Binary:
      os << "(";
      print_node(*n.args[0], os);
      os << n.op;
      print_node(*n.args[1], os);
      os << ")";
      break;
    case NodeKind::Call:
      os << fn_name(n.fn) << "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) os << ",";
        print_node(*n.args[i], os);
      }
      os << ")";
      break;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      char c = src_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      NodePtr rhs = parse_product();
      auto n = std::make_shared<ExprNode>();
      n->kind = NodeKind::Binary;
      n->op = c;
      n->args = {lhs, rhs};
      lhs = n;
    }
    return lhs;
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) break;
      char c = src_[pos_];
      if (c != '*' && c != '/') break;
      ++pos_;
      NodePtr rhs = parse_unary();
      auto n = std::make_shared<ExprNode>();
      n->kind = NodeKind::Binary;
      n->op = c;
      n->args = {lhs, rhs};
      lhs = n;
    }
    return lhs;
  }

  NodePtr parse_unary() {
    skip_ws();
    if (accept('-')) {
      auto n = std::make_shared<ExprNode>();
      n->kind = NodeKind::Unary;
      n->op = '-';
      n->args = {parse_unary()};
      return n;
    }
    return parse_primary();
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      NodePtr e = parse_sum();
      if (!accept(')'))
        throw ParseError(pos_, "unbalanced parenthesis opened at offset " +
                                   std::to_string(open));
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')
      return parse_ident();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           ((src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '.' ||
            src_[pos_] == 'e' || src_[pos_] == 'E' ||
            ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > start &&
             (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
      ++pos_;
    const std::string text(src_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
      auto n = std::make_shared<ExprNode>();
      n->kind = NodeKind::Constant;
      n->value = v;
      return n;
    } catch (const std::exception&) {
      throw ParseError(start, "malformed number '" + text + "'");
    }
  }

  NodePtr parse_ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
            (src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
            (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    skip_ws();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';

    if (!call) {
      auto n = std::make_shared<ExprNode>();
      if (name == "pi") {
        n->kind = NodeKind::Constant;
        n->value = 3.14159265358979323846;
        return n;
      }
      n->kind = NodeKind::Var;
      if (name == "t") n->var = VarId::T;
      else if (name == "x" || name == "x1") n->var = VarId::X1;
      else if (name == "x2") n->var = VarId::X2;
      else if (name == "y") n->var = VarId::Y;
      else if (name == "T") n->var = VarId::Period;
      else throw ParseError(start, "unknown identifier '" + name + "'");
      return n;
    }

    FnId fn;
    std::size_t arity;
    if (name == "sin") { fn = FnId::Sin; arity = 1; }
    else if (name == "cos") { fn = FnId::Cos; arity = 1; }
    else if (name == "atan") { fn = FnId::Atan; arity = 1; }
    else if (name == "tanh") { fn = FnId::Tanh; arity = 1; }
    else if (name == "exp_neg_sq") { fn = FnId::ExpNegSq; arity = 1; }
    else if (name == "abs") { fn = FnId::Abs; arity = 1; }
    else if (name == "min") { fn = FnId::Min; arity = 2; }
    else if (name == "max") { fn = FnId::Max; arity = 2; }
    else throw ParseError(start, "unknown function '" + name + "'");

    std::size_t open = pos_;
    ++pos_;  // consume '('
    std::vector<NodePtr> args;
    skip_ws();
    if (!accept(')')) {
      args.push_back(parse_sum());
      while (accept(',')) args.push_back(parse_sum());
      if (!accept(')'))
        throw ParseError(pos_, "unbalanced parenthesis opened at offset " +
                                   std::to_string(open));
    }
    if (args.size() != arity)
      throw ParseError(open, "function '" + name + "' expects " +
                                 std::to_string(arity) + " argument(s), got " +
                                 std::to_string(args.size()));
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Call;
    n->fn = fn;
    n->args = std::move(args);
    return n;
  }
};

}  // namespace detail

class Expression {
 public:
  Expression() = default;

  double eval(const EvalEnv& env) const {
    return root_ ? detail::eval_node(*root_, env) : 0.0;
  }

  // Convenience for space-independent use.
  double eval(double t, double x, double y, double period) const {
    return eval(EvalEnv{t, x, 0.0, y, period});
  }

  std::string print() const {
    if (!root_) return "0";
    std::ostringstream os;
    detail::print_node(*root_, os);
    return os.str();
  }

  bool structurally_equal(const Expression& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return detail::nodes_equal(*root_, *other.root_);
  }

  bool empty() const { return !root_; }

  friend Expression parse_expression(std::string_view src);

 private:
  detail::NodePtr root_;
};

inline Expression parse_expression(std::string_view src) {
  Expression e;
  e.root_ = detail::Parser(src).parse();
  return e;
}

}  // namespace parares
