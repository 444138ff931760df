#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "lagkit/complex_jet.hpp"

namespace lagkit {

enum class BinaryOp { add, sub, mul, div };
enum class Function { exp, sin, cos, sinh, cosh, sqrt };

std::string_view function_name(Function fn);
std::optional<Function> function_from_name(std::string_view name);

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Literals are finite and non-negative; negative constants are Negate nodes.
struct Literal {
  double value;
};
struct ImaginaryUnit {};
struct ParamRef {
  std::size_t index;
  std::string name;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  int exponent;
};
struct Call {
  Function fn;
  ExprPtr arg;
};

class Expr {
 public:
  using Node = std::variant<Literal, ImaginaryUnit, ParamRef, Negate, Binary, Power, Call>;

  explicit Expr(Node node, SourcePos pos = {}) : node_(std::move(node)), pos_(pos) {}

  const Node& node() const { return node_; }
  SourcePos pos() const { return pos_; }

 private:
  Node node_;
  SourcePos pos_;
};

// Node builders. real_constant maps negative values to Negate(Literal).
ExprPtr literal(double value, SourcePos pos = {});
ExprPtr real_constant(double value);
ExprPtr complex_constant(Complex value);
ExprPtr imaginary_unit(SourcePos pos = {});
ExprPtr param(std::size_t index, std::string name, SourcePos pos = {});
ExprPtr negate(ExprPtr operand, SourcePos pos = {});
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {});
ExprPtr power(ExprPtr base, int exponent, SourcePos pos = {});
ExprPtr call(Function fn, ExprPtr arg, SourcePos pos = {});

// Equality of trees, ignoring source positions. Literals compare exactly.
bool structurally_equal(const Expr& a, const Expr& b);

// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

// Canonical infix text with the minimum parentheses the grammar needs.
std::string to_string(const Expr& e);

// Copy of e with every parameter index shifted by offset.
ExprPtr shift_parameters(const ExprPtr& e, std::size_t offset);

// Largest referenced parameter index + 1 (0 when none).
std::size_t parameter_extent(const Expr& e);

// Jet-valued evaluation; env[k] is the jet of parameter k.
ComplexJet eval_expr(const Expr& e, std::span<const Jet> env);

// Plain complex evaluation through std::complex, kept independent of the
// jet path so it can serve as an oracle.
std::complex<double> eval_numeric(const Expr& e, std::span<const double> point);

}  // namespace lagkit
