#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncaffine {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class MixedFieldModes : public Error {
 public:
  MixedFieldModes() : Error("operands belong to different coefficient fields") {}
};

class DenominatorVanishes : public Error {
 public:
  explicit DenominatorVanishes(const std::string& what = "denominator vanishes under specialization")
      : Error(what) {}
};

class MissingSymbol : public Error {
 public:
  explicit MissingSymbol(const std::string& sym) : Error("no value assigned to symbol '" + sym + "'") {}
};

class AlgebraMismatch : public Error {
 public:
  AlgebraMismatch() : Error("polynomials live in different algebras") {}
};

class NoClosedFormula : public Error {
 public:
  NoClosedFormula() : Error("no closed multiplication formula is known for this algebra type") {}
};

class NoRecurrence : public Error {
 public:
  NoRecurrence() : Error("no coefficient recurrence is known for this algebra type") {}
};

class SingularLinearPart : public Error {
 public:
  SingularLinearPart() : Error("affine map has a singular linear part") {}
};

class GradingUndefined : public Error {
 public:
  GradingUndefined() : Error("the algebra admits no monomial grading") {}
};

class DegreeOverflow : public Error {
 public:
  DegreeOverflow() : Error("exponent exceeds the supported degree cap") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name) : Error("unknown symbol '" + name + "'") {}
};

}  // namespace ncaffine
