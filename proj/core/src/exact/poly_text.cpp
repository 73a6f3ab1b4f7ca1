#include "pcm/exact/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace pcm::exact {

namespace {

enum class Tok { kNumber, kName, kSqrt, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
  std::int64_t radicand = 0;  // kSqrt only
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::kNumber, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      const std::string_view word = s.substr(start, i - start);
      if (word.size() > 4 && word.substr(0, 4) == "sqrt" &&
          std::all_of(word.begin() + 4, word.end(),
                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        std::int64_t d = 0;
        const auto digits = word.substr(4);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec != std::errc{}) throw PolySyntaxError("radicand out of range", start, true);
        out.push_back({Tok::kSqrt, word, start, d});
      } else {
        out.push_back({Tok::kName, word, start});
      }
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw PolySyntaxError(std::string("unexpected character '") + ch + "'", start, true);
    }
    out.push_back({kind, s.substr(start, 1), start});
    ++i;
  }
  out.push_back({Tok::kEnd, {}, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars, PolyParseOptions options)
      : toks_(lex(text)), vars_(vars), options_(options) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Tok::kEnd) fail_unexpected(peek());
    return vars_ ? p.with_vars(vars_) : p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail_unexpected(const Token& t) const {
    if (t.kind == Tok::kEnd) throw PolySyntaxError("unexpected end of expression", t.offset);
    if (t.kind == Tok::kName || t.kind == Tok::kSqrt || t.kind == Tok::kNumber ||
        t.kind == Tok::kLParen) {
      throw PolySyntaxError("implicit multiplication is not allowed; use '*' before '" +
                                std::string(t.text) + "'",
                            t.offset);
    }
    throw PolySyntaxError("unexpected '" + std::string(t.text) + "'", t.offset);
  }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = next().kind == Tok::kMinus;
      Poly rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (peek().kind == Tok::kStar) {
      next();
      acc *= unary();
    }
    return acc;
  }

  Poly unary() {
    if (peek().kind == Tok::kMinus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::kPlus) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek().kind == Tok::kCaret) {
      next();
      const Token& e = next();
      if (e.kind != Tok::kNumber) throw PolySyntaxError("exponent must be a non-negative integer", e.offset);
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), value);
      if (ec != std::errc{} || value > 64) throw PolySyntaxError("exponent too large", e.offset);
      base = base.pow(value);
    }
    return base;
  }

  Poly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNumber: {
        mpq_class value(std::string(t.text), 10);
        if (peek().kind == Tok::kSlash) {
          next();
          const Token& den = next();
          if (den.kind != Tok::kNumber) throw PolySyntaxError("expected integer denominator", den.offset);
          mpz_class d(std::string(den.text), 10);
          if (d == 0) throw PolySyntaxError("zero denominator", den.offset);
          value /= d;
          value.canonicalize();
        }
        Poly p{Scalar(value)};
        // "2y": a literal written directly against a name acts as its coefficient.
        const Token& last = toks_[pos_ - 1];
        const Token& after = peek();
        if ((after.kind == Tok::kName || after.kind == Tok::kSqrt) &&
            after.offset == last.offset + last.text.size()) {
          p *= power();
        }
        return p;
      }
      case Tok::kSqrt: {
        if (!is_squarefree_radicand(t.radicand)) {
          throw PolySyntaxError("radicand must be a square-free integer >= 2", t.offset);
        }
        if (options_.radicand != 0 && t.radicand != options_.radicand) {
          throw PolySyntaxError("only sqrt" + std::to_string(options_.radicand) +
                                    " is allowed in this field",
                                t.offset);
        }
        return Poly(Scalar::sqrt_of(t.radicand));
      }
      case Tok::kName: {
        if (!vars_ || std::find(vars_->begin(), vars_->end(), t.text) == vars_->end()) {
          throw PolySyntaxError("unknown variable '" + std::string(t.text) + "'", t.offset);
        }
        return Poly::variable(vars_, t.text);
      }
      case Tok::kLParen: {
        Poly inner = expr();
        const Token& close = next();
        if (close.kind != Tok::kRParen) throw PolySyntaxError("expected ')'", close.offset);
        return inner;
      }
      default:
        --pos_;
        fail_unexpected(t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarList vars_;
  PolyParseOptions options_;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarList& vars, PolyParseOptions options) {
  return Parser(text, vars, options).parse();
}

Scalar parse_scalar(std::string_view text, PolyParseOptions options) {
  return Parser(text, nullptr, options).parse().constant_value();
}

}  // namespace pcm::exact
