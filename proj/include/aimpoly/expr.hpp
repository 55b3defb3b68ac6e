#pragma once

// Surface syntax for coefficients. Grammar (implicit multiplication by
// juxtaposition is accepted wherever a '*' could appear):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor | factor)*
//   factor   := ('-' | '+') factor | atom ['^' exponent]
//   exponent := ['-' | '+'] (integer | integer-valued constant name)
//   atom     := number | identifier | '(' expr ')'
//
// Unary minus sits at factor level, so -x^2 reads as -(x^2).

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aimpoly/aim.hpp"
#include "aimpoly/error.hpp"
#include "aimpoly/tower.hpp"

namespace aimpoly {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Variable, Parameter, Negate, Add, Subtract, Multiply, Divide, Power };

  Kind kind = Kind::Number;
  std::size_t offset = 0;  // byte offset of the token that produced the node
  Scalar number;           // Number
  std::string name;        // Variable, Parameter
  long exponent = 0;       // Power
  Expr lhs;                // Negate operand, binary left, Power base
  Expr rhs;
};

struct ParseOptions {
  std::string variable = "x";
  /// Spectral parameter symbol. When empty, any identifier that is neither the
  /// variable nor a constant is taken as a parameter.
  std::optional<std::string> parameter;
  /// Named rational constants substituted at parse time (family parameters).
  std::map<std::string, Scalar> constants;
};

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

inline std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts_with = [&](std::string_view s) { return in.substr(i, s.size()) == s; };
  while (i < in.size()) {
    unsigned char c = static_cast<unsigned char>(in[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c) || (c == '.' && i + 1 < in.size() && std::isdigit(static_cast<unsigned char>(in[i + 1])))) {
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      if (i < in.size() && in[i] == '.') {
        ++i;
        while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      }
      out.push_back({Tok::Number, start, std::string(in.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_')) ++i;
      out.push_back({Tok::Ident, start, std::string(in.substr(start, i - start))});
      continue;
    }
    // U+2212 minus, U+00B7 middle dot, U+00D7 times, U+00F7 division.
    if (starts_with("\xE2\x88\x92")) { out.push_back({Tok::Minus, start, "-"}); i += 3; continue; }
    if (starts_with("\xC2\xB7") || starts_with("\xC3\x97")) { out.push_back({Tok::Star, start, "*"}); i += 2; continue; }
    if (starts_with("\xC3\xB7")) { out.push_back({Tok::Slash, start, "/"}); i += 2; continue; }
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
        throw SyntaxError(start, {"number", "identifier", "operator", "'('"},
                          "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    out.push_back({kind, start, std::string(1, static_cast<char>(c))});
    ++i;
  }
  out.push_back({Tok::End, in.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view input, const ParseOptions& options) : tokens_(tokenize(input)), options_(options) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.offset, std::move(expected), "unexpected " + found);
  }

  static Expr make(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }
  static Expr binary(ExprNode::Kind kind, std::size_t offset, Expr l, Expr r) {
    ExprNode n;
    n.kind = kind;
    n.offset = offset;
    n.lhs = std::move(l);
    n.rhs = std::move(r);
    return make(std::move(n));
  }

  Expr expr() {
    Expr left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      Expr right = term();
      left = binary(op.kind == Tok::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Subtract, op.offset,
                    std::move(left), std::move(right));
    }
    return left;
  }

  Expr term() {
    Expr left = factor();
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Star || k == Tok::Slash) {
        const Token& op = take();
        Expr right = factor();
        left = binary(k == Tok::Star ? ExprNode::Kind::Multiply : ExprNode::Kind::Divide, op.offset,
                      std::move(left), std::move(right));
      } else if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
        std::size_t at = peek().offset;
        Expr right = factor();
        left = binary(ExprNode::Kind::Multiply, at, std::move(left), std::move(right));
      } else {
        return left;
      }
    }
  }

  Expr factor() {
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      const Token& op = take();
      Expr operand = factor();
      if (op.kind == Tok::Plus) return operand;
      ExprNode n;
      n.kind = ExprNode::Kind::Negate;
      n.offset = op.offset;
      n.lhs = std::move(operand);
      return make(std::move(n));
    }
    Expr base = atom();
    if (peek().kind != Tok::Caret) return base;
    std::size_t at = take().offset;
    ExprNode n;
    n.kind = ExprNode::Kind::Power;
    n.offset = at;
    n.exponent = exponent();
    n.lhs = std::move(base);
    return make(std::move(n));
  }

  long exponent() {
    long sign = 1;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) sign = take().kind == Tok::Minus ? -1 : 1;
    const Token& t = peek();
    Scalar value;
    if (t.kind == Tok::Number) {
      value = Scalar::parse(t.text);
    } else if (t.kind == Tok::Ident && options_.constants.count(t.text)) {
      value = options_.constants.at(t.text);
    } else {
      fail({"integer"});
    }
    if (!value.is_integer() || !value.numerator().fits_slong_p())
      throw SyntaxError(t.offset, {"integer"}, "exponent '" + t.text + "' is not an integer");
    take();
    return sign * value.numerator().get_si();
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.offset = t.offset;
        n.number = Scalar::parse(t.text);
        return make(std::move(n));
      }
      case Tok::Ident: {
        take();
        ExprNode n;
        n.offset = t.offset;
        n.name = t.text;
        if (t.text == options_.variable) {
          n.kind = ExprNode::Kind::Variable;
        } else if (auto it = options_.constants.find(t.text); it != options_.constants.end()) {
          n.kind = ExprNode::Kind::Number;
          n.number = it->second;
        } else if (!options_.parameter || *options_.parameter == t.text) {
          n.kind = ExprNode::Kind::Parameter;
        } else {
          throw SyntaxError(t.offset, {options_.variable, *options_.parameter}, "unknown symbol '" + t.text + "'");
        }
        return make(std::move(n));
      }
      case Tok::LParen: {
        take();
        Expr inner = expr();
        if (peek().kind != Tok::RParen) fail({"')'"});
        take();
        return inner;
      }
      default:
        fail({"number", "identifier", "'('", "'-'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
};

inline void collect_parameters(const Expr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprNode::Kind::Parameter) out.insert(e->name);
  collect_parameters(e->lhs, out);
  collect_parameters(e->rhs, out);
}

inline XRat power(const XRat& base, long exponent, std::size_t offset) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::ZeroDenominator, "negative power of zero at offset " + std::to_string(offset));
    return power(base.inverse(), -exponent, offset);
  }
  XRat result = x_constant(Scalar(1));
  XRat b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace detail

inline Expr parse(std::string_view input, const ParseOptions& options = {}) {
  return detail::Parser(input, options).parse();
}

/// Distinct parameter symbols appearing in an expression.
inline std::set<std::string> parameter_names(const Expr& e) {
  std::set<std::string> out;
  detail::collect_parameters(e, out);
  return out;
}

/// Lowers an AST into a reduced XRat; every parameter node maps to t.
inline XRat lower(const Expr& e) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number: return x_constant(e->number);
    case K::Variable: return x_rational_variable();
    case K::Parameter: return XRat(param_symbol());
    case K::Negate: return -lower(e->lhs);
    case K::Add: return lower(e->lhs) + lower(e->rhs);
    case K::Subtract: return lower(e->lhs) - lower(e->rhs);
    case K::Multiply: return lower(e->lhs) * lower(e->rhs);
    case K::Divide: {
      XRat den = lower(e->rhs);
      if (den.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "division by zero at offset " + std::to_string(e->offset));
      return lower(e->lhs) / den;
    }
    case K::Power: return detail::power(lower(e->lhs), e->exponent, e->offset);
  }
  throw Error(ErrorKind::InvalidInput, "unknown expression node");
}

inline XRat parse_rational(std::string_view input, const ParseOptions& options = {}) {
  return lower(parse(input, options));
}

/// Parses both coefficients of y'' = lambda0 y' + s0 y. At most one parameter
/// symbol may appear across the pair.
inline EquationSpec parse_equation(std::string_view lambda0, std::string_view s0, const ParseOptions& options = {}) {
  Expr l = parse(lambda0, options);
  Expr s = parse(s0, options);
  std::set<std::string> names = parameter_names(l);
  names.merge(parameter_names(s));
  if (names.size() > 1) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::MultipleParameters, "more than one parameter symbol: " + list);
  }
  EquationSpec eq;
  eq.lambda0 = lower(l);
  eq.s0 = lower(s);
  eq.variable = options.variable;
  if (!names.empty()) eq.parameter = *names.begin();
  else if (options.parameter && !(is_param_free(eq.lambda0) && is_param_free(eq.s0))) eq.parameter = options.parameter;
  return eq;
}

// ---------------------------------------------------------------------------
// Rendering

struct Symbols {
  std::string variable = "x";
  std::string parameter = "t";
};

namespace detail {

inline std::string power_text(const std::string& sym, std::size_t k) {
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

inline std::string latex_symbol(const std::string& name) {
  static const std::set<std::string> greek = {"alpha", "beta",  "gamma", "delta", "epsilon", "zeta",
                                              "eta",   "theta", "iota",  "kappa", "lambda",  "mu",
                                              "nu",    "xi",    "pi",    "rho",   "sigma",   "tau",
                                              "phi",   "chi",   "psi",   "omega"};
  if (greek.count(name)) return "\\" + name;
  if (name.size() == 1) return name;
  return "\\mathrm{" + name + "}";
}

inline std::string latex_power(const std::string& sym, std::size_t k) {
  if (k == 1) return sym;
  return sym + "^{" + std::to_string(k) + "}";
}

// Keeps a trailing control word such as \mu from swallowing the next letter.
inline std::string latex_juxtapose(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty() || !std::isalpha(static_cast<unsigned char>(b.front()))) return a + b;
  std::size_t i = a.size();
  while (i > 0 && std::isalpha(static_cast<unsigned char>(a[i - 1]))) --i;
  bool control_word = i < a.size() && i > 0 && a[i - 1] == '\\';
  return control_word ? a + " " + b : a + b;
}

inline std::string latex_scalar(const Scalar& v) {
  if (v.is_integer()) return v.to_string();
  std::string sign = v.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + v.abs().numerator().get_str() + "}{" + v.denominator().get_str() + "}";
}

/// Writes sum_k c_k sym^k (highest power first) given a formatter for one
/// term of positive "magnitude". `term` returns the text of |c_k| sym^k and
/// `negative` tells whether c_k carries a minus sign.
template <class C, class Negative, class Term>
std::string join_terms(const Polynomial<C>& p, Negative&& negative, Term&& term) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const C& c = p[k];
    if (c.is_zero()) continue;
    bool neg = negative(c);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += term(neg ? -c : c, k);
    first = false;
  }
  return out;
}

template <class C>
std::size_t term_count(const Polynomial<C>& p) {
  std::size_t n = 0;
  for (const auto& c : p.coefficients()) n += !c.is_zero();
  return n;
}

inline bool paramrat_negative(const ParamRat& c) { return c.numerator().leading().sign() < 0; }

// A rendered numerator needs parentheses when it is a sum; a denominator also
// when it is a product or quotient.
inline std::string wrap_numerator(std::string s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}
inline std::string wrap_denominator(std::string s) {
  return s.find_first_of(" */") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace detail

inline std::string to_text(const Scalar& v) { return v.to_string(); }

inline std::string to_text(const ParamPoly& p, const std::string& symbol = "t") {
  return detail::join_terms(
      p, [](const Scalar& c) { return c.sign() < 0; },
      [&](const Scalar& c, std::size_t k) {
        if (k == 0) return c.to_string();
        std::string s = detail::power_text(symbol, k);
        return c.is_one() ? s : c.to_string() + "*" + s;
      });
}

inline std::string to_text(const ParamRat& f, const std::string& symbol = "t") {
  if (f.is_polynomial()) return to_text(f.numerator(), symbol);
  return detail::wrap_numerator(to_text(f.numerator(), symbol)) + "/" +
         detail::wrap_denominator(to_text(f.denominator(), symbol));
}

inline std::string to_text(const XPoly& p, const Symbols& sym = {}) {
  if (p.degree() == 0) return to_text(p[0], sym.parameter);
  return detail::join_terms(p, detail::paramrat_negative, [&](const ParamRat& c, std::size_t k) {
    std::string xk = k == 0 ? "" : detail::power_text(sym.variable, k);
    std::string coeff;
    if (c.is_constant()) {
      const Scalar& v = c.constant_value();
      if (k == 0) return v.to_string();
      return v.is_one() ? xk : v.to_string() + "*" + xk;
    }
    if (c.is_polynomial() && detail::term_count(c.numerator()) == 1) {
      coeff = to_text(c.numerator(), sym.parameter);
    } else {
      coeff = "(" + to_text(c, sym.parameter) + ")";
    }
    return k == 0 ? coeff : coeff + "*" + xk;
  });
}

inline std::string to_text(const XRat& f, const Symbols& sym = {}) {
  if (f.is_polynomial()) return to_text(f.numerator(), sym);
  return detail::wrap_numerator(to_text(f.numerator(), sym)) + "/" +
         detail::wrap_denominator(to_text(f.denominator(), sym));
}

inline std::string to_latex(const Scalar& v) { return detail::latex_scalar(v); }

inline std::string to_latex(const ParamPoly& p, const std::string& symbol = "t") {
  const std::string sym = detail::latex_symbol(symbol);
  return detail::join_terms(
      p, [](const Scalar& c) { return c.sign() < 0; },
      [&](const Scalar& c, std::size_t k) {
        if (k == 0) return detail::latex_scalar(c);
        std::string s = detail::latex_power(sym, k);
        return c.is_one() ? s : detail::latex_juxtapose(detail::latex_scalar(c), s);
      });
}

inline std::string to_latex(const ParamRat& f, const std::string& symbol = "t") {
  if (f.is_polynomial()) return to_latex(f.numerator(), symbol);
  return "\\frac{" + to_latex(f.numerator(), symbol) + "}{" + to_latex(f.denominator(), symbol) + "}";
}

inline std::string to_latex(const XPoly& p, const Symbols& sym = {}) {
  if (p.degree() == 0) return to_latex(p[0], sym.parameter);
  const std::string var = detail::latex_symbol(sym.variable);
  return detail::join_terms(p, detail::paramrat_negative, [&](const ParamRat& c, std::size_t k) {
    std::string xk = k == 0 ? "" : detail::latex_power(var, k);
    if (c.is_constant()) {
      const Scalar& v = c.constant_value();
      if (k == 0) return detail::latex_scalar(v);
      return v.is_one() ? xk : detail::latex_juxtapose(detail::latex_scalar(v), xk);
    }
    if (c.is_polynomial() && detail::term_count(c.numerator()) == 1)
      return detail::latex_juxtapose(to_latex(c.numerator(), sym.parameter), xk);
    return "\\left(" + to_latex(c, sym.parameter) + "\\right)" + xk;
  });
}

inline std::string to_latex(const XRat& f, const Symbols& sym = {}) {
  if (f.is_polynomial()) return to_latex(f.numerator(), sym);
  return "\\frac{" + to_latex(f.numerator(), sym) + "}{" + to_latex(f.denominator(), sym) + "}";
}

/// Options that parse text produced by to_text with the same symbols.
inline ParseOptions options_for(const Symbols& sym) {
  ParseOptions o;
  o.variable = sym.variable;
  o.parameter = sym.parameter;
  return o;
}

}  // namespace aimpoly
