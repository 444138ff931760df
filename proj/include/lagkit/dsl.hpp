#pragma once

// Immersion description language.
//
//   document   := statement*
//   statement  := "params" param ("," param)* ";"
//               | "signature" INT INT ";"
//               | "map" expr ("," expr)* [";"]        (";" optional at end of input)
//               | "name" IDENT ";"
//               | "expected_index" INT ";"
//               | "quadric" NUMBER ";"
//   param      := IDENT ":" "[" NUMBER "," NUMBER "]"    (numbers may carry a sign)
//   expr       := term (("+" | "-") term)*
//   term       := unary (("*" | "/") unary)*
//   unary      := "-" unary | power
//   power      := primary ["^" ["-"] INT]
//   primary    := NUMBER | "i" | IDENT | FUNC "(" expr ")" | "(" expr ")"
//   FUNC       := exp | sin | cos | sinh | cosh | sqrt
//
// "#" starts a comment running to the end of the line. "params" must precede
// "map"; a missing "signature" defaults to n = number of components, s = 0.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagkit/expr.hpp"
#include "lagkit/hermitian.hpp"

namespace lagkit {

struct Parameter {
  std::string name;
  double lower;
  double upper;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct ImmersionSpec {
  std::string name;
  std::vector<Parameter> params;
  Signature signature{1, 0};
  std::vector<ExprPtr> components;
  std::optional<int> expected_index;
  // Declared ambient quadric <z,z> = 1/c.
  std::optional<double> quadric_c;

  std::size_t num_params() const { return params.size(); }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(signature.n()); }

  // Throws UsageError when an invariant fails (component count, parameter
  // references, empty or inverted domain boxes, duplicate names).
  void validate() const;
};

// Parameters, signature, components and metadata all equal.
bool structurally_equal(const ImmersionSpec& a, const ImmersionSpec& b);

// Throws ParseError with a 1-based line/column.
ImmersionSpec parse_spec(std::string_view text);

// Canonical text; parse_spec(serialize_spec(s)) is structurally equal to s.
std::string serialize_spec(const ImmersionSpec& spec);

}  // namespace lagkit
