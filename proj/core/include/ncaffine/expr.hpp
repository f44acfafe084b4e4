#pragma once

// Expression language for polynomials:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*      '/' only by scalars
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | q | alpha | beta | gamma | x | y | '(' expr ')'

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncaffine/commute.hpp"

namespace ncaffine {

struct ExprAst {
  enum class Kind { Number, Parameter, Generator, Add, Sub, Mul, Div, Pow, Neg, Group };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  BigInt number;              // Number
  Symbol symbol = Symbol::q;  // Parameter
  char generator = 'x';       // Generator
  unsigned exponent = 0;      // Pow
  std::vector<ExprAst> children;
};

/// Throws SyntaxError (with the offending position) or UnknownSymbol.
ExprAst parse(std::string_view text);

/// Parameter symbols stand for the algebra's own parameters: indeterminates in Param mode,
/// their values otherwise. Throws DivisionByZero or std::invalid_argument for non-scalar divisors.
NcPoly eval(const ExprAst& ast, const Algebra& alg, Engine engine = Engine::Auto);
NcPoly eval(std::string_view text, const Algebra& alg, Engine engine = Engine::Auto);

}  // namespace ncaffine
