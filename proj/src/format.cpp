#include "oq/format.hpp"

#include <cctype>
#include <sstream>

namespace oq {

namespace {

// One rendered term: |coefficient| * h-power * variables, without the sign.
std::string term_body(const Rational& abs_coeff, int hpow, const Monomial& mono,
                      const std::vector<std::string>& labels, const char* var_prefix) {
  std::vector<std::string> parts;
  if (!(abs_coeff == Rational(1)) || (hpow == 0 && mono.is_unit()))
    parts.push_back(abs_coeff.str());
  if (hpow == 1) parts.push_back("h");
  if (hpow >= 2) parts.push_back("h^" + std::to_string(hpow));
  for (int i = 0; i < mono.nvars(); ++i) {
    int e = mono[i];
    if (e == 0) continue;
    std::string v = var_prefix + labels[static_cast<size_t>(i)];
    if (e > 1) v += "^" + std::to_string(e);
    parts.push_back(v);
  }
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += "*";
    out += parts[k];
  }
  return out;
}

std::string render_terms(const CPoly& f, const std::vector<std::string>& labels,
                         const char* var_prefix, bool ascending) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const Monomial& mono, const HPoly& hp) {
    for (const auto& [hpow, c] : hp.terms()) {
      bool neg = c < Rational(0);
      Rational abs = neg ? -c : c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      out += term_body(abs, hpow, mono, labels, var_prefix);
    }
  };
  // The term map is kept in descending graded-lex order. Commutative
  // polynomials print ascending (constants first); enveloping elements print
  // leading word first. The parameter power always ascends within a monomial.
  if (ascending) {
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) emit(it->first, it->second);
  } else {
    for (const auto& [mono, hp] : f.terms()) emit(mono, hp);
  }
  return out;
}

struct Token {
  enum Kind { kNumber, kIdent, kPlus, kMinus, kStar, kCaret, kSlash, kEnd };
  Kind kind;
  std::string text;
  int line;
  int col;
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::kNumber: return "number";
    case Token::kIdent: return "identifier";
    case Token::kPlus: return "'+'";
    case Token::kMinus: return "'-'";
    case Token::kStar: return "'*'";
    case Token::kCaret: return "'^'";
    case Token::kSlash: return "'/'";
    case Token::kEnd: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error_at(const Token& t, const std::string& expected) const {
    fail(ErrorKind::ParseError, "line " + std::to_string(t.line) + ", column " +
                                    std::to_string(t.col) + ": found " + describe(t) +
                                    ", expected " + expected);
  }

 private:
  static std::string describe(const Token& t) {
    if (t.kind == Token::kEnd) return "end of input";
    if (t.kind == Token::kNumber || t.kind == Token::kIdent) return "'" + t.text + "'";
    return std::string(token_name(t.kind));
  }

  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Token::kEnd;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::kNumber;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::kIdent;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    ++pos_;
    ++col_;
    switch (c) {
      case '+': tok_.kind = Token::kPlus; return;
      case '-': tok_.kind = Token::kMinus; return;
      case '*': tok_.kind = Token::kStar; return;
      case '^': tok_.kind = Token::kCaret; return;
      case '/': tok_.kind = Token::kSlash; return;
      default:
        fail(ErrorKind::ParseError, "line " + std::to_string(tok_.line) + ", column " +
                                        std::to_string(tok_.col) + ": unexpected character '" +
                                        std::string(1, c) + "'");
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const LieAlgebraData& alg) : lex_(text), alg_(alg) {}

  CPoly parse() {
    CPoly out(alg_.dim);
    bool negative = consume_sign(true);
    while (true) {
      CPoly term = parse_term();
      if (negative) term = -term;
      out += term;
      const Token& t = lex_.peek();
      if (t.kind == Token::kEnd) break;
      if (t.kind == Token::kPlus || t.kind == Token::kMinus) {
        negative = t.kind == Token::kMinus;
        lex_.take();
        continue;
      }
      lex_.error_at(t, "'+', '-', '*', or end of input");
    }
    return out;
  }

 private:
  // Optional sign before the first term only.
  bool consume_sign(bool allowed) {
    const Token& t = lex_.peek();
    if (allowed && (t.kind == Token::kPlus || t.kind == Token::kMinus)) {
      bool neg = t.kind == Token::kMinus;
      lex_.take();
      return neg;
    }
    return false;
  }

  long long to_int(const Token& t) {
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      lex_.error_at(t, "a smaller integer");
    }
  }

  CPoly parse_term() {
    Rational coeff(1);
    int hpow = 0;
    std::vector<int> expo(static_cast<size_t>(alg_.dim), 0);

    const Token& first = lex_.peek();
    if (first.kind == Token::kNumber) {
      coeff = parse_rational();
    } else if (first.kind == Token::kIdent) {
      parse_factor(hpow, expo);
    } else {
      lex_.error_at(first, "a number or identifier");
    }
    while (lex_.peek().kind == Token::kStar) {
      lex_.take();
      const Token& t = lex_.peek();
      if (t.kind != Token::kIdent) lex_.error_at(t, "an identifier after '*'");
      parse_factor(hpow, expo);
    }

    return CPoly::term(Monomial(expo), HPoly(coeff, hpow));
  }

  Rational parse_rational() {
    Token num = lex_.take();
    long long n = to_int(num);
    if (lex_.peek().kind == Token::kSlash) {
      lex_.take();
      const Token& d = lex_.peek();
      if (d.kind != Token::kNumber) lex_.error_at(d, "a denominator after '/'");
      Token dt = lex_.take();
      long long den = to_int(dt);
      if (den == 0)
        fail(ErrorKind::ParseError, "line " + std::to_string(dt.line) + ", column " +
                                        std::to_string(dt.col) + ": denominator is zero");
      return Rational(BigInt(n), BigInt(den));
    }
    return Rational(BigInt(n), BigInt(1));
  }

  void parse_factor(int& hpow, std::vector<int>& expo) {
    Token id = lex_.take();
    int exp = 1;
    if (lex_.peek().kind == Token::kCaret) {
      lex_.take();
      const Token& e = lex_.peek();
      if (e.kind != Token::kNumber) lex_.error_at(e, "an exponent after '^'");
      long long v = to_int(lex_.take());
      if (v > 1000)
        fail(ErrorKind::ParseError,
             "line " + std::to_string(id.line) + ": exponent too large");
      exp = static_cast<int>(v);
    }
    if (id.text == "h") {
      hpow += exp;
      return;
    }
    int var = resolve_variable(id);
    expo[static_cast<size_t>(var)] += exp;
  }

  int resolve_variable(const Token& id) {
    const std::string& name = id.text;
    if (name.size() >= 2 && name[0] == 'x') {
      std::string tail = name.substr(1);
      for (size_t i = 0; i < alg_.labels.size(); ++i)
        if (alg_.labels[i] == tail) return static_cast<int>(i);
      bool digits = !tail.empty();
      for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
      if (digits) {
        long long k = std::stoll(tail);
        if (k >= 1 && k <= alg_.dim) return static_cast<int>(k - 1);
      }
    }
    fail(ErrorKind::UnknownVariable,
         "'" + name + "' (line " + std::to_string(id.line) + ", column " +
             std::to_string(id.col) + ") is not a variable of this algebra");
  }

  Lexer lex_;
  const LieAlgebraData& alg_;
};

}  // namespace

std::string render_rational(const Rational& c) { return c.str(); }

std::string render_hpoly(const HPoly& p) {
  CPoly wrap = CPoly::constant(0, p);
  return render_terms(wrap, {}, "x", true);
}

std::string render_cpoly(const CPoly& f, const std::vector<std::string>& labels) {
  if (f.nvars() != static_cast<int>(labels.size()))
    fail(ErrorKind::DimensionMismatch, "label count does not match the variable count");
  return render_terms(f, labels, "x", true);
}

std::string render_pbw(const PBWElement& u, const std::vector<std::string>& labels) {
  if (u.coefficients().nvars() != static_cast<int>(labels.size()))
    fail(ErrorKind::DimensionMismatch, "label count does not match the generator count");
  return render_terms(u.coefficients(), labels, "X", false);
}

CPoly parse_poly(const std::string& text, const LieAlgebraData& alg) {
  return Parser(text, alg).parse();
}

}  // namespace oq
