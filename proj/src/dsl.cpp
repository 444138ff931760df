#include "lagkit/dsl.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "lagkit/errors.hpp"

namespace lagkit {

namespace {

constexpr std::string_view kKeywords[] = {"params", "signature", "map",
                                          "name",   "expected_index", "quadric"};

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords) {
    if (k == s) return true;
  }
  return false;
}

bool is_reserved(std::string_view s) {
  return s == "i" || is_keyword(s) || function_from_name(s).has_value();
}

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  bool integer = false;  // number without '.' or exponent
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      const SourcePos pos{line_, col_};
      if (at_ >= src_.size()) {
        out.push_back({Tok::end, "", pos});
        return out;
      }
      const char c = src_[at_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = at_;
        while (at_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[at_])) || src_[at_] == '_')) {
          advance();
        }
        out.push_back({Tok::ident, std::string(src_.substr(start, at_ - start)), pos});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        out.push_back(number(pos));
      } else if (std::string_view("()[],;:+-*/^").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Tok::punct, std::string(1, c), pos});
      } else {
        throw ParseError(ParseErrorKind::syntax, pos.line, pos.column,
                         std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void advance() {
    if (src_[at_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++at_;
  }

  void skip_space_and_comments() {
    while (at_ < src_.size()) {
      const char c = src_[at_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (at_ < src_.size() && src_[at_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool digit_here() const {
    return at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]));
  }

  Token number(SourcePos pos) {
    const std::size_t start = at_;
    bool integer = true;
    while (digit_here()) advance();
    if (at_ < src_.size() && src_[at_] == '.') {
      integer = false;
      advance();
      while (digit_here()) advance();
    }
    if (at_ < src_.size() && (src_[at_] == 'e' || src_[at_] == 'E')) {
      integer = false;
      advance();
      if (at_ < src_.size() && (src_[at_] == '+' || src_[at_] == '-')) advance();
      if (!digit_here()) {
        throw ParseError(ParseErrorKind::syntax, line_, col_, "malformed exponent");
      }
      while (digit_here()) advance();
    }
    std::string text(src_.substr(start, at_ - start));
    if (text == ".") throw ParseError(ParseErrorKind::syntax, pos.line, pos.column, "stray '.'");
    return {Tok::number, std::move(text), pos, integer};
  }

  std::string_view src_;
  std::size_t at_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ImmersionSpec document() {
    ImmersionSpec spec;
    std::optional<Signature> signature;
    bool have_params = false;
    bool have_map = false;
    bool have_name = false;
    while (peek().kind != Tok::end) {
      const Token kw = next();
      if (kw.kind != Tok::ident) fail(kw, "expected a statement keyword");
      if (kw.text == "params") {
        if (have_params) fail(kw, "duplicate params statement");
        if (have_map) fail(kw, "params must precede map");
        have_params = true;
        parse_params(spec);
        expect(";");
      } else if (kw.text == "signature") {
        if (signature) fail(kw, "duplicate signature statement");
        const int n = integer_value(next_integer());
        const int s = integer_value(next_integer());
        try {
          signature = Signature(n, s);
        } catch (const DimensionError& e) {
          fail(kw, e.what());
        }
        expect(";");
      } else if (kw.text == "map") {
        if (have_map) fail(kw, "duplicate map statement");
        have_map = true;
        params_ = &spec.params;
        spec.components.push_back(expr());
        while (accept(",")) spec.components.push_back(expr());
        if (!accept(";") && peek().kind != Tok::end) fail(peek(), "expected ',' or ';'");
      } else if (kw.text == "name") {
        if (have_name) fail(kw, "duplicate name statement");
        have_name = true;
        const Token id = next();
        if (id.kind != Tok::ident) fail(id, "expected a name");
        spec.name = id.text;
        expect(";");
      } else if (kw.text == "expected_index") {
        if (spec.expected_index) fail(kw, "duplicate expected_index statement");
        spec.expected_index = integer_value(next_integer());
        expect(";");
      } else if (kw.text == "quadric") {
        if (spec.quadric_c) fail(kw, "duplicate quadric statement");
        const Token at = peek();
        const double c = signed_number();
        if (c == 0.0) fail(at, "quadric curvature must be nonzero");
        spec.quadric_c = c;
        expect(";");
      } else {
        throw ParseError(ParseErrorKind::unknown_identifier, kw.pos.line, kw.pos.column,
                         "unknown statement '" + kw.text + "'");
      }
    }
    const Token& eof = peek();
    if (!have_map) fail(eof, "missing map statement");
    if (spec.params.empty()) fail(eof, "missing params statement");
    if (signature) {
      if (static_cast<std::size_t>(signature->n()) != spec.components.size()) {
        fail(eof, "signature declares n=" + std::to_string(signature->n()) + " but map has " +
                      std::to_string(spec.components.size()) + " components");
      }
      spec.signature = *signature;
    } else {
      spec.signature = Signature(static_cast<int>(spec.components.size()), 0);
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg,
                         ParseErrorKind kind = ParseErrorKind::syntax) const {
    throw ParseError(kind, t.pos.line, t.pos.column, msg);
  }

  const Token& peek() const { return toks_[at_]; }
  Token next() {
    Token t = toks_[at_];
    if (t.kind != Tok::end) ++at_;
    return t;
  }
  bool accept(std::string_view p) {
    if (peek().kind == Tok::punct && peek().text == p) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail(peek(), "expected '" + std::string(p) + "'");
  }

  Token next_integer() {
    Token t = next();
    if (t.kind != Tok::number || !t.integer) fail(t, "expected an integer");
    return t;
  }

  int integer_value(const Token& t) const {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "integer out of range");
    return v;
  }

  double number_value(const Token& t) const {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || !std::isfinite(v)) {
      fail(t, "number out of range");
    }
    return v;
  }

  double signed_number() {
    double sign = 1.0;
    if (accept("-")) {
      sign = -1.0;
    } else {
      accept("+");
    }
    const Token t = next();
    if (t.kind != Tok::number) fail(t, "expected a number");
    return sign * number_value(t);
  }

  void parse_params(ImmersionSpec& spec) {
    std::set<std::string> seen;
    do {
      const Token id = next();
      if (id.kind != Tok::ident) fail(id, "expected a parameter name");
      if (is_reserved(id.text)) fail(id, "'" + id.text + "' is reserved");
      if (!seen.insert(id.text).second) fail(id, "duplicate parameter '" + id.text + "'");
      expect(":");
      expect("[");
      const double lo = signed_number();
      expect(",");
      const Token at = peek();
      const double hi = signed_number();
      expect("]");
      if (!(lo < hi)) fail(at, "empty domain interval for '" + id.text + "'");
      spec.params.push_back({id.text, lo, hi});
    } while (accept(","));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::punct && (peek().text == "+" || peek().text == "-")) {
      const Token op = next();
      ExprPtr rhs = term();
      lhs = binary(op.text == "+" ? BinaryOp::add : BinaryOp::sub, lhs, rhs, op.pos);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == Tok::punct && (peek().text == "*" || peek().text == "/")) {
      const Token op = next();
      ExprPtr rhs = unary();
      lhs = binary(op.text == "*" ? BinaryOp::mul : BinaryOp::div, lhs, rhs, op.pos);
    }
    return lhs;
  }

  ExprPtr unary() {
    const Token t = peek();
    if (accept("-")) return negate(unary(), t.pos);
    return pow_expr();
  }

  ExprPtr pow_expr() {
    ExprPtr base = primary();
    const Token t = peek();
    if (accept("^")) {
      const bool negative = accept("-");
      const Token n = next();
      if (n.kind != Tok::number || !n.integer) fail(n, "exponent must be an integer literal");
      const int e = integer_value(n);
      return power(base, negative ? -e : e, t.pos);
    }
    return base;
  }

  ExprPtr primary() {
    const Token t = next();
    if (t.kind == Tok::number) return literal(number_value(t), t.pos);
    if (t.kind == Tok::punct && t.text == "(") {
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    if (t.kind != Tok::ident) fail(t, t.kind == Tok::end ? "unexpected end of input"
                                                         : "unexpected '" + t.text + "'");
    if (t.text == "i") return imaginary_unit(t.pos);
    const bool is_call = peek().kind == Tok::punct && peek().text == "(";
    if (auto fn = function_from_name(t.text)) {
      if (!is_call) fail(t, "function '" + t.text + "' takes one argument", ParseErrorKind::arity);
      expect("(");
      if (peek().kind == Tok::punct && peek().text == ")") {
        fail(peek(), "function '" + t.text + "' takes one argument", ParseErrorKind::arity);
      }
      ExprPtr arg = expr();
      if (peek().kind == Tok::punct && peek().text == ",") {
        fail(peek(), "function '" + t.text + "' takes one argument", ParseErrorKind::arity);
      }
      expect(")");
      return call(*fn, arg, t.pos);
    }
    if (is_call) {
      fail(t, "unknown function '" + t.text + "'", ParseErrorKind::unknown_identifier);
    }
    for (std::size_t k = 0; k < params_->size(); ++k) {
      if ((*params_)[k].name == t.text) return param(k, t.text, t.pos);
    }
    fail(t, "undeclared parameter '" + t.text + "'", ParseErrorKind::undeclared_parameter);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const std::vector<Parameter>* params_ = nullptr;
};

}  // namespace

void ImmersionSpec::validate() const {
  if (params.empty()) throw UsageError("spec has no parameters");
  if (components.size() != ambient_dim()) {
    throw UsageError("component count does not match signature");
  }
  std::set<std::string> names;
  for (const auto& p : params) {
    if (!(p.lower < p.upper)) throw UsageError("empty domain interval for '" + p.name + "'");
    if (is_reserved(p.name)) throw UsageError("parameter name '" + p.name + "' is reserved");
    if (!names.insert(p.name).second) throw UsageError("duplicate parameter '" + p.name + "'");
  }
  for (const auto& c : components) {
    if (!c) throw UsageError("null component expression");
    if (parameter_extent(*c) > params.size()) {
      throw UsageError("component references an undeclared parameter");
    }
  }
}

bool structurally_equal(const ImmersionSpec& a, const ImmersionSpec& b) {
  if (a.name != b.name || a.params != b.params || !(a.signature == b.signature) ||
      a.expected_index != b.expected_index || a.quadric_c != b.quadric_c ||
      a.components.size() != b.components.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    if (!structurally_equal(*a.components[k], *b.components[k])) return false;
  }
  return true;
}

ImmersionSpec parse_spec(std::string_view text) {
  Parser parser(Lexer(text).run());
  return parser.document();
}

std::string serialize_spec(const ImmersionSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name " + spec.name + ";\n";
  out += "params ";
  for (std::size_t k = 0; k < spec.params.size(); ++k) {
    const auto& p = spec.params[k];
    if (k) out += ", ";
    out += p.name + ":[" + format_real(p.lower) + "," + format_real(p.upper) + "]";
  }
  out += ";\n";
  out += "signature " + std::to_string(spec.signature.n()) + " " +
         std::to_string(spec.signature.s()) + ";\n";
  if (spec.expected_index) out += "expected_index " + std::to_string(*spec.expected_index) + ";\n";
  if (spec.quadric_c) out += "quadric " + format_real(*spec.quadric_c) + ";\n";
  out += "map ";
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    if (k) out += ", ";
    out += to_string(*spec.components[k]);
  }
  out += ";\n";
  return out;
}

}  // namespace lagkit
