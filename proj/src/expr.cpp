#include "lagkit/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "lagkit/errors.hpp"

namespace lagkit {

namespace {

constexpr std::array<std::pair<Function, std::string_view>, 6> kFunctions{{
    {Function::exp, "exp"},
    {Function::sin, "sin"},
    {Function::cos, "cos"},
    {Function::sinh, "sinh"},
    {Function::cosh, "cosh"},
    {Function::sqrt, "sqrt"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view function_name(Function fn) {
  for (const auto& [f, name] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

std::optional<Function> function_from_name(std::string_view name) {
  for (const auto& [f, n] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

ExprPtr literal(double value, SourcePos pos) {
  if (!std::isfinite(value) || value < 0.0 || std::signbit(value)) {
    throw std::invalid_argument("literal must be finite and non-negative");
  }
  return std::make_shared<const Expr>(Literal{value}, pos);
}

ExprPtr real_constant(double value) {
  if (std::signbit(value)) return negate(literal(-value));
  return literal(value);
}

ExprPtr complex_constant(Complex value) {
  if (value.im == 0.0) return real_constant(value.re);
  ExprPtr imag = binary(BinaryOp::mul, literal(std::abs(value.im)), imaginary_unit());
  if (value.re == 0.0) return value.im < 0.0 ? negate(imag) : imag;
  return binary(value.im < 0.0 ? BinaryOp::sub : BinaryOp::add, real_constant(value.re), imag);
}

ExprPtr imaginary_unit(SourcePos pos) {
  return std::make_shared<const Expr>(ImaginaryUnit{}, pos);
}

ExprPtr param(std::size_t index, std::string name, SourcePos pos) {
  return std::make_shared<const Expr>(ParamRef{index, std::move(name)}, pos);
}

ExprPtr negate(ExprPtr operand, SourcePos pos) {
  return std::make_shared<const Expr>(Negate{std::move(operand)}, pos);
}

ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  return std::make_shared<const Expr>(Binary{op, std::move(lhs), std::move(rhs)}, pos);
}

ExprPtr power(ExprPtr base, int exponent, SourcePos pos) {
  return std::make_shared<const Expr>(Power{std::move(base), exponent}, pos);
}

ExprPtr call(Function fn, ExprPtr arg, SourcePos pos) {
  return std::make_shared<const Expr>(Call{fn, std::move(arg)}, pos);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      Overloaded{
          [&](const Literal& x) { return x.value == std::get<Literal>(b.node()).value; },
          [&](const ImaginaryUnit&) { return true; },
          [&](const ParamRef& x) {
            const auto& y = std::get<ParamRef>(b.node());
            return x.index == y.index && x.name == y.name;
          },
          [&](const Negate& x) {
            return structurally_equal(*x.operand, *std::get<Negate>(b.node()).operand);
          },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b.node());
            return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                   structurally_equal(*x.rhs, *y.rhs);
          },
          [&](const Power& x) {
            const auto& y = std::get<Power>(b.node());
            return x.exponent == y.exponent && structurally_equal(*x.base, *y.base);
          },
          [&](const Call& x) {
            const auto& y = std::get<Call>(b.node());
            return x.fn == y.fn && structurally_equal(*x.arg, *y.arg);
          },
      },
      a.node());
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

namespace {

// Binding strength; a child is parenthesized when it binds more loosely than
// its position requires.
enum Precedence : int { kAdditive = 1, kMultiplicative = 2, kUnary = 3, kPower = 4, kPrimary = 5 };

int precedence(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Negate&) { return int{kUnary}; },
                        [](const Binary& b) {
                          return (b.op == BinaryOp::add || b.op == BinaryOp::sub)
                                     ? int{kAdditive}
                                     : int{kMultiplicative};
                        },
                        [](const Power&) { return int{kPower}; },
                        [](const auto&) { return int{kPrimary}; },
                    },
                    e.node());
}

void write(const Expr& e, std::string& out);

void write_child(const Expr& child, int required, std::string& out) {
  if (precedence(child) < required) {
    out += '(';
    write(child, out);
    out += ')';
  } else {
    write(child, out);
  }
}

void write(const Expr& e, std::string& out) {
  std::visit(Overloaded{
                 [&](const Literal& x) { out += format_real(x.value); },
                 [&](const ImaginaryUnit&) { out += 'i'; },
                 [&](const ParamRef& x) { out += x.name; },
                 [&](const Negate& x) {
                   out += '-';
                   write_child(*x.operand, kUnary, out);
                 },
                 [&](const Binary& x) {
                   const int p = precedence(e);
                   write_child(*x.lhs, p, out);
                   switch (x.op) {
                     case BinaryOp::add: out += " + "; break;
                     case BinaryOp::sub: out += " - "; break;
                     case BinaryOp::mul: out += '*'; break;
                     case BinaryOp::div: out += '/'; break;
                   }
                   write_child(*x.rhs, p + 1, out);
                 },
                 [&](const Power& x) {
                   write_child(*x.base, kPrimary, out);
                   out += '^';
                   out += std::to_string(x.exponent);
                 },
                 [&](const Call& x) {
                   out += function_name(x.fn);
                   out += '(';
                   write(*x.arg, out);
                   out += ')';
                 },
             },
             e.node());
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  write(e, out);
  return out;
}

ExprPtr shift_parameters(const ExprPtr& e, std::size_t offset) {
  return std::visit(
      Overloaded{
          [&](const ParamRef& x) { return param(x.index + offset, x.name, e->pos()); },
          [&](const Negate& x) { return negate(shift_parameters(x.operand, offset), e->pos()); },
          [&](const Binary& x) {
            return binary(x.op, shift_parameters(x.lhs, offset),
                          shift_parameters(x.rhs, offset), e->pos());
          },
          [&](const Power& x) {
            return power(shift_parameters(x.base, offset), x.exponent, e->pos());
          },
          [&](const Call& x) { return call(x.fn, shift_parameters(x.arg, offset), e->pos()); },
          [&](const auto&) { return e; },
      },
      e->node());
}

std::size_t parameter_extent(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const ParamRef& x) { return x.index + 1; },
          [](const Negate& x) { return parameter_extent(*x.operand); },
          [](const Binary& x) {
            return std::max(parameter_extent(*x.lhs), parameter_extent(*x.rhs));
          },
          [](const Power& x) { return parameter_extent(*x.base); },
          [](const Call& x) { return parameter_extent(*x.arg); },
          [](const auto&) { return std::size_t{0}; },
      },
      e.node());
}

namespace {

ComplexJet apply(Function fn, const ComplexJet& z) {
  switch (fn) {
    case Function::exp: return exp(z);
    case Function::sin: return sin(z);
    case Function::cos: return cos(z);
    case Function::sinh: return sinh(z);
    case Function::cosh: return cosh(z);
    case Function::sqrt: return sqrt(z);
  }
  throw std::logic_error("unhandled function");
}

}  // namespace

ComplexJet eval_expr(const Expr& e, std::span<const Jet> env) {
  if (env.empty()) throw DimensionError("empty evaluation environment");
  const int m = env.front().num_vars();
  const int order = env.front().order();
  return std::visit(
      Overloaded{
          [&](const Literal& x) { return ComplexJet::constant(Complex{x.value}, m, order); },
          [&](const ImaginaryUnit&) { return ComplexJet::constant(kImag, m, order); },
          [&](const ParamRef& x) {
            if (x.index >= env.size()) {
              throw DimensionError("parameter '" + x.name + "' missing from environment");
            }
            return ComplexJet(env[x.index], Jet::constant(0.0, m, order));
          },
          [&](const Negate& x) { return -eval_expr(*x.operand, env); },
          [&](const Binary& x) {
            ComplexJet a = eval_expr(*x.lhs, env);
            const ComplexJet b = eval_expr(*x.rhs, env);
            switch (x.op) {
              case BinaryOp::add: return a += b;
              case BinaryOp::sub: return a -= b;
              case BinaryOp::mul: return a * b;
              case BinaryOp::div: return a / b;
            }
            throw std::logic_error("unhandled operator");
          },
          [&](const Power& x) { return pow(eval_expr(*x.base, env), x.exponent); },
          [&](const Call& x) { return apply(x.fn, eval_expr(*x.arg, env)); },
      },
      e.node());
}

std::complex<double> eval_numeric(const Expr& e, std::span<const double> point) {
  using C = std::complex<double>;
  return std::visit(
      Overloaded{
          [&](const Literal& x) { return C(x.value, 0.0); },
          [&](const ImaginaryUnit&) { return C(0.0, 1.0); },
          [&](const ParamRef& x) {
            if (x.index >= point.size()) {
              throw DimensionError("parameter '" + x.name + "' missing from point");
            }
            return C(point[x.index], 0.0);
          },
          [&](const Negate& x) { return -eval_numeric(*x.operand, point); },
          [&](const Binary& x) {
            const C a = eval_numeric(*x.lhs, point);
            const C b = eval_numeric(*x.rhs, point);
            switch (x.op) {
              case BinaryOp::add: return a + b;
              case BinaryOp::sub: return a - b;
              case BinaryOp::mul: return a * b;
              case BinaryOp::div:
                if (std::norm(b) < Jet::kDivisionThreshold) {
                  throw SingularEvaluation("division by near-zero value");
                }
                return a / b;
            }
            throw std::logic_error("unhandled operator");
          },
          [&](const Power& x) {
            const C base = eval_numeric(*x.base, point);
            C result(1.0, 0.0);
            for (int k = 0; k < std::abs(x.exponent); ++k) result *= base;
            if (x.exponent < 0) {
              if (std::norm(result) < Jet::kDivisionThreshold) {
                throw SingularEvaluation("negative power of near-zero value");
              }
              result = C(1.0, 0.0) / result;
            }
            return result;
          },
          [&](const Call& x) {
            const C z = eval_numeric(*x.arg, point);
            switch (x.fn) {
              case Function::exp: return std::exp(z);
              case Function::sin: return std::sin(z);
              case Function::cos: return std::cos(z);
              case Function::sinh: return std::sinh(z);
              case Function::cosh: return std::cosh(z);
              case Function::sqrt:
                if (std::norm(z) < Jet::kDivisionThreshold) {
                  throw SingularEvaluation("sqrt at its branch point 0");
                }
                return std::sqrt(z);
            }
            throw std::logic_error("unhandled function");
          },
      },
      e.node());
}

}  // namespace lagkit
