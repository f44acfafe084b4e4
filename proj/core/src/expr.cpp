#include "ncaffine/expr.hpp"

#include <cctype>

namespace ncaffine {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprAst run() {
    ExprAst e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static ExprAst node(ExprAst::Kind k, std::size_t pos, std::vector<ExprAst> children) {
    ExprAst n;
    n.kind = k;
    n.position = pos;
    n.children = std::move(children);
    return n;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      std::size_t at = pos_++;
      ExprAst rhs = term();
      lhs = node(c == '+' ? ExprAst::Kind::Add : ExprAst::Kind::Sub, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      std::size_t at = pos_++;
      ExprAst rhs = unary();
      lhs = node(c == '*' ? ExprAst::Kind::Mul : ExprAst::Kind::Div, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst unary() {
    if (peek() == '-') {
      std::size_t at = pos_++;
      return node(ExprAst::Kind::Neg, at, {unary()});
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (peek() != '^') return base;
    std::size_t at = pos_++;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    unsigned long e = 0;
    try {
      e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError("exponent out of range", start);
    }
    if (e > kMaxDegree) throw SyntaxError("exponent out of range", start);
    ExprAst n = node(ExprAst::Kind::Pow, at, {std::move(base)});
    n.exponent = static_cast<unsigned>(e);
    if (peek() == '^') fail("chained exponents need parentheses");
    return n;
  }

  ExprAst primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return node(ExprAst::Kind::Group, at, {std::move(inner)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      ExprAst n = node(ExprAst::Kind::Number, at, {});
      n.number = BigInt(std::string(text_.substr(at, pos_ - at)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(at, pos_ - at));
      if (name == "x" || name == "y") {
        ExprAst n = node(ExprAst::Kind::Generator, at, {});
        n.generator = name[0];
        return n;
      }
      if (auto s = symbol_from_name(name)) {
        ExprAst n = node(ExprAst::Kind::Parameter, at, {});
        n.symbol = *s;
        return n;
      }
      throw UnknownSymbol(name);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const FieldElem& parameter(const AlgebraParams& p, Symbol s) {
  switch (s) {
    case Symbol::q: return p.q;
    case Symbol::alpha: return p.alpha;
    case Symbol::beta: return p.beta;
    case Symbol::gamma: return p.gamma;
  }
  return p.q;
}

struct Evaluator {
  const Algebra& alg;
  Engine engine;

  NcPoly operator()(const ExprAst& e) const {
    const FieldMode& mode = alg->mode;
    switch (e.kind) {
      case ExprAst::Kind::Number:
        return NcPoly::constant(alg, FieldElem::from_rational(mode, BigRat(e.number)));
      case ExprAst::Kind::Parameter:
        if (mode.kind() == FieldMode::Kind::Param) return NcPoly::constant(alg, FieldElem::symbol(e.symbol));
        return NcPoly::constant(alg, parameter(*alg, e.symbol));
      case ExprAst::Kind::Generator:
        return e.generator == 'x' ? NcPoly::x(alg) : NcPoly::y(alg);
      case ExprAst::Kind::Add: return (*this)(e.children[0]) + (*this)(e.children[1]);
      case ExprAst::Kind::Sub: return (*this)(e.children[0]) - (*this)(e.children[1]);
      case ExprAst::Kind::Mul: return mul((*this)(e.children[0]), (*this)(e.children[1]), engine);
      case ExprAst::Kind::Div: {
        NcPoly d = (*this)(e.children[1]);
        if (d.degree() > 0) throw std::invalid_argument("division by a non-scalar");
        if (d.is_zero()) throw DivisionByZero();
        return scalar_mul(d.coeff(0, 0).inverse(), (*this)(e.children[0]));
      }
      case ExprAst::Kind::Pow: return pow((*this)(e.children[0]), e.exponent, engine);
      case ExprAst::Kind::Neg: return -(*this)(e.children[0]);
      case ExprAst::Kind::Group: return (*this)(e.children[0]);
    }
    return NcPoly(alg);
  }
};

}  // namespace

ExprAst parse(std::string_view text) { return Parser(text).run(); }

NcPoly eval(const ExprAst& ast, const Algebra& alg, Engine engine) { return Evaluator{alg, engine}(ast); }

NcPoly eval(std::string_view text, const Algebra& alg, Engine engine) { return eval(parse(text), alg, engine); }

}  // namespace ncaffine
