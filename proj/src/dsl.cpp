#include "hflow/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "hflow/error.hpp"

namespace hflow {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos));
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) ++i;
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
          i = j;
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      default: fail(i, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

Rational decimal_to_rational(const std::string& text, std::size_t pos) {
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    if (mantissa.find('.', dot + 1) != std::string::npos) fail(pos, "malformed number '" + text + "'");
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (mantissa.empty()) fail(pos, "malformed number '" + text + "'");
  if (std::abs(exponent) > 400) fail(pos, "exponent out of range in '" + text + "'");
  // cpp_int reads a leading 0 as an octal prefix.
  mantissa.erase(0, std::min(mantissa.find_first_not_of('0'), mantissa.size() - 1));
  Rational value{BigInt(mantissa)};
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::abs(exponent)));
  return exponent >= 0 ? value * Rational(scale) : value / Rational(scale);
}

// Laurent polynomial in the term's variable (theta, or H = 1/(n+1)).
using Poly = std::map<int, ExactScalar>;

Poly constant(ExactScalar c) { return c.is_zero() ? Poly{} : Poly{{0, std::move(c)}}; }

Poly add(const Poly& x, const Poly& y, bool subtract = false) {
  Poly out = x;
  for (const auto& [k, c] : y) {
    ExactScalar v = out.count(k) ? out[k] : ExactScalar{};
    v = subtract ? v - c : v + c;
    if (v.is_zero()) out.erase(k);
    else out[k] = v;
  }
  return out;
}

Poly multiply(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out = add(out, Poly{{i + j, a * b}});
  return out;
}

enum class Mode { Euler, Hardy, Constant };

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  OperatorExpr parse() {
    if (peek().kind == Tok::End) fail(0, "empty operator expression");
    OperatorExpr expr;
    while (true) {
      expr.terms.push_back(parse_term());
      if (peek().kind == Tok::End) break;
      if (!at_term_boundary()) fail(peek().pos, "expected '+' followed by a new term");
      advance();
    }
    for (const auto& t : expr.terms) {
      if (t.index() != expr.terms.front().index())
        throw Error(ErrorKind::VariantMismatch, "a sum must combine terms of a single family");
    }
    if (expr.is_sum() && std::holds_alternative<ExplicitSequence>(expr.terms.front()))
      throw Error(ErrorKind::VariantMismatch, "explicit sequences cannot be summed");
    return expr;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_++]; }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek().pos, std::string("expected ") + what);
    return advance();
  }
  bool at_term_boundary() const {
    return peek().kind == Tok::Plus && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon;
  }

  MultiplierSymbol parse_term() {
    const Token& tag = expect(Tok::Ident, "'euler:', 'hardy:' or 'seq:'");
    expect(Tok::Colon, "':' after the term tag");
    if (tag.text == "euler") {
      mode_ = Mode::Euler;
      return EulerPoly(coefficients(parse_sum(), tag.pos, "theta"));
    }
    if (tag.text == "hardy") {
      mode_ = Mode::Hardy;
      return HardyRational(coefficients(parse_sum(), tag.pos, "H"));
    }
    if (tag.text == "seq") {
      mode_ = Mode::Constant;
      return parse_sequence();
    }
    fail(tag.pos, "unknown term tag '" + tag.text + "'");
  }

  std::vector<ExactScalar> coefficients(const Poly& p, std::size_t pos, const char* var) {
    std::vector<ExactScalar> out;
    for (const auto& [k, c] : p) {
      if (k < 0) fail(pos, std::string("negative power of ") + var);
      if (out.size() <= static_cast<std::size_t>(k)) out.resize(k + 1);
      out[k] = c;
    }
    if (out.empty()) out.emplace_back();
    return out;
  }

  ExplicitSequence parse_sequence() {
    expect(Tok::LBracket, "'['");
    std::vector<Complex> values;
    while (true) {
      std::size_t pos = peek().pos;
      Poly p = parse_sum();
      if (!p.empty() && (p.size() > 1 || p.begin()->first != 0)) fail(pos, "sequence entries must be constants");
      values.push_back(p.empty() ? Complex{} : p.begin()->second.to_complex());
      if (peek().kind == Tok::Comma) {
        advance();
        continue;
      }
      expect(Tok::RBracket, "',' or ']'");
      break;
    }
    return ExplicitSequence(std::move(values));
  }

  Poly parse_sum() {
    Poly result = parse_product();
    while ((peek().kind == Tok::Plus || peek().kind == Tok::Minus) && !at_term_boundary()) {
      bool subtract = advance().kind == Tok::Minus;
      result = add(result, parse_product(), subtract);
    }
    return result;
  }

  Poly parse_product() {
    Poly result = parse_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = advance();
      Poly rhs = parse_unary();
      if (op.kind == Tok::Star) {
        result = multiply(result, rhs);
        continue;
      }
      if (rhs.size() != 1) fail(op.pos, "can only divide by a single nonzero term");
      const auto& [k, c] = *rhs.begin();
      result = multiply(result, Poly{{-k, c.inverse()}});
    }
    return result;
  }

  Poly parse_unary() {
    if (peek().kind == Tok::Minus) {
      advance();
      return add(Poly{}, parse_unary(), true);
    }
    if (peek().kind == Tok::Plus) advance();
    return parse_power();
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (peek().kind != Tok::Caret) return base;
    advance();
    const Token& exp = expect(Tok::Number, "an integer exponent");
    if (exp.text.find_first_not_of("0123456789") != std::string::npos)
      fail(exp.pos, "exponent must be a nonnegative integer");
    unsigned long power = std::stoul(exp.text);
    if (power > 64) fail(exp.pos, "exponent larger than 64");
    Poly result = constant(ExactScalar::from_int(1));
    for (unsigned long i = 0; i < power; ++i) result = multiply(result, base);
    return result;
  }

  Poly parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number:
        advance();
        return constant(ExactScalar::from_rational(decimal_to_rational(tok.text, tok.pos)));
      case Tok::Ident: {
        advance();
        if (tok.text == "i") return constant(ExactScalar::imaginary_unit());
        if (tok.text == "sqrt") {
          expect(Tok::LParen, "'(' after sqrt");
          const Token& arg = expect(Tok::Number, "an integer radicand");
          if (arg.text.find_first_not_of("0123456789") != std::string::npos)
            fail(arg.pos, "sqrt takes a nonnegative integer");
          expect(Tok::RParen, "')'");
          return constant(ExactScalar::sqrt_of(std::stoull(arg.text)));
        }
        if (tok.text == "theta" && mode_ == Mode::Euler) return Poly{{1, ExactScalar::from_int(1)}};
        if (tok.text == "H" && mode_ == Mode::Hardy) return Poly{{1, ExactScalar::from_int(1)}};
        fail(tok.pos, "unexpected identifier '" + tok.text + "'");
      }
      case Tok::LParen: {
        if (mode_ == Mode::Hardy && peek(1).kind == Tok::Ident && peek(1).text == "n" &&
            peek(2).kind == Tok::Plus && peek(3).kind == Tok::Number && peek(3).text == "1" &&
            peek(4).kind == Tok::RParen) {
          pos_ += 5;
          return Poly{{-1, ExactScalar::from_int(1)}};
        }
        advance();
        Poly inner = parse_sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail(tok.pos, tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Mode mode_ = Mode::Constant;
};

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace

OperatorExpr parse_operator(std::string_view src) { return Parser(src).parse(); }

MultiplierSymbol to_symbol(const OperatorExpr& expr) {
  if (expr.terms.empty()) throw Error(ErrorKind::ParseError, "empty operator expression");
  MultiplierSymbol acc = expr.terms.front();
  for (std::size_t i = 1; i < expr.terms.size(); ++i) acc = symbol_add(acc, expr.terms[i]);
  return acc;
}

std::string pretty_print(const MultiplierSymbol& s) {
  std::vector<std::string> parts;
  if (const auto* p = std::get_if<EulerPoly>(&s)) {
    for (std::size_t k = p->coeffs.size(); k-- > 0;) {
      const ExactScalar& a = p->coeffs[k];
      if (a.is_zero()) continue;
      std::string power = k == 0 ? "" : (k == 1 ? "theta" : "theta^" + std::to_string(k));
      if (power.empty()) parts.push_back(a.to_string());
      else if (a == ExactScalar::from_int(1)) parts.push_back(power);
      else parts.push_back(a.to_string() + "*" + power);
    }
    return "euler: " + join_terms(parts);
  }
  if (const auto* h = std::get_if<HardyRational>(&s)) {
    for (std::size_t k = h->coeffs.size(); k-- > 0;) {
      const ExactScalar& a = h->coeffs[k];
      if (a.is_zero()) continue;
      std::string term = a.to_string();
      if (k >= 1) term += "/(n+1)";
      if (k >= 2) term += "^" + std::to_string(k);
      parts.push_back(term);
    }
    return "hardy: " + join_terms(parts);
  }
  const auto& e = std::get<ExplicitSequence>(s);
  std::ostringstream out;
  out << "seq: [";
  for (std::size_t n = 0; n < e.seq.size(); ++n) {
    if (n) out << ", ";
    Complex v = e.seq[n];
    if (v.imag() == 0.0) {
      out << shortest(v.real());
    } else {
      out << "(" << shortest(v.real()) << (v.imag() < 0 ? " - " : " + ")
          << shortest(std::abs(v.imag())) << "*i)";
    }
  }
  out << "]";
  return out.str();
}

std::string pretty_print(const OperatorExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.terms.size(); ++i) {
    if (i) out += " + ";
    out += pretty_print(expr.terms[i]);
  }
  return out;
}

}  // namespace hflow
