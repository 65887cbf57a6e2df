// Copyright 2026 The aftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aftlab/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "aftlab/error.hpp"

namespace aftlab {

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kHash,  // "#word"
  kIf,    // ":-"
  kDot,
  kBar,
  kComma,
  kSemi,
  kColon,
  kAmp,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kCmp,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;
  Rational number{0};
  Comparator cmp = Comparator::kEq;
};

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
  throw Error(ErrorKind::kParse, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::int64_t parse_digits(std::string_view digits, int line, int col) {
  if (digits.size() > 18) parse_error(line, col, "number too large");
  std::int64_t v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_digit = [&](std::size_t at) {
    return at < src.size() && std::isdigit(static_cast<unsigned char>(src[at]));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      t.kind = Tok::kIdent;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && is_digit(i + 1))) {
      std::size_t j = i + (c == '-' ? 1 : 0);
      const bool negative = c == '-';
      std::size_t start = j;
      while (is_digit(j)) ++j;
      std::int64_t num = parse_digits(src.substr(start, j - start), line, col);
      std::int64_t den = 1;
      if (j < src.size() && src[j] == '/' && is_digit(j + 1)) {
        start = ++j;
        while (is_digit(j)) ++j;
        den = parse_digits(src.substr(start, j - start), line, col);
        if (den == 0) parse_error(line, col, "zero denominator");
      } else if (j < src.size() && src[j] == '.' && is_digit(j + 1)) {
        start = ++j;
        while (is_digit(j)) ++j;
        const auto frac = src.substr(start, j - start);
        if (frac.size() > 9) parse_error(line, col, "too many decimal places");
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        num = num * den + parse_digits(frac, line, col);
      }
      t.kind = Tok::kNumber;
      t.number = Rational(negative ? -num : num, den);
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '#') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      if (j == i + 1) parse_error(line, col, "expected a word after '#'");
      t.kind = Tok::kHash;
      t.text = std::string(src.substr(i + 1, j - i - 1));
      advance(j - i);
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '-') {
      t.kind = Tok::kIf;
      advance(2);
    } else if (c == '<' || c == '>' || c == '=') {
      t.kind = Tok::kCmp;
      const bool eq_follows = i + 1 < src.size() && src[i + 1] == '=';
      if (c == '=') {
        t.cmp = Comparator::kEq;
        advance();
      } else if (c == '<') {
        t.cmp = eq_follows ? Comparator::kLe : Comparator::kLt;
        advance(eq_follows ? 2 : 1);
      } else {
        t.cmp = eq_follows ? Comparator::kGe : Comparator::kGt;
        advance(eq_follows ? 2 : 1);
      }
    } else {
      switch (c) {
        case '.': t.kind = Tok::kDot; break;
        case '|': t.kind = Tok::kBar; break;
        case ',': t.kind = Tok::kComma; break;
        case ';': t.kind = Tok::kSemi; break;
        case ':': t.kind = Tok::kColon; break;
        case '&': t.kind = Tok::kAmp; break;
        case '(': t.kind = Tok::kLParen; break;
        case ')': t.kind = Tok::kRParen; break;
        case '{': t.kind = Tok::kLBrace; break;
        case '}': t.kind = Tok::kRBrace; break;
        default:
          parse_error(line, col, std::string("unexpected character '") + c + "'");
      }
      advance();
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// Internal failure used for backtracking between the two body forms.
struct Failure {
  std::size_t pos;
  std::string message;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Rule> rules() {
    std::vector<Rule> out;
    while (peek().kind != Tok::kEnd) out.push_back(rule());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw Failure{pos_, msg}; }
  [[noreturn]] void raise(const Failure& f) const {
    const Token& t = toks_[f.pos];
    parse_error(t.line, t.col, f.message);
  }

  std::string atom_name(const char* what) {
    if (peek().kind != Tok::kIdent || peek().text == "not") fail(std::string("expected ") + what);
    return next().text;
  }

  Rule rule() {
    std::vector<std::string> head;
    try {
      head.push_back(atom_name("an atom to start a rule head"));
      while (accept(Tok::kBar)) head.push_back(atom_name("an atom after '|' (empty disjunct)"));
    } catch (const Failure& f) {
      raise(f);
    }
    if (accept(Tok::kDot)) return Rule(std::move(head), Conjunction{});
    if (!accept(Tok::kIf)) raise(Failure{pos_, "expected ':-' or '.' after rule head"});
    if (accept(Tok::kDot)) return Rule(std::move(head), Conjunction{});

    const std::size_t start = pos_;
    std::optional<Failure> lit_failure;
    try {
      Conjunction body = literals();
      if (accept(Tok::kDot)) return Rule(std::move(head), std::move(body));
      fail("expected ',' or '.' in rule body");
    } catch (const Failure& f) {
      lit_failure = f;
    }
    pos_ = start;
    try {
      Formula body = formula();
      if (accept(Tok::kDot)) return Rule(std::move(head), std::move(body));
      fail("expected '.' after formula body");
    } catch (const Failure& f) {
      const Tok at = toks_[lit_failure->pos].kind;
      const bool formula_like =
          at == Tok::kAmp || at == Tok::kBar || at == Tok::kLParen || at == Tok::kRParen;
      raise(formula_like || f.pos > lit_failure->pos ? f : *lit_failure);
    }
  }

  Conjunction literals() {
    Conjunction out;
    do {
      const bool negated = peek().kind == Tok::kIdent && peek().text == "not" && (next(), true);
      if (peek().kind == Tok::kHash) {
        out.push_back(BodyLiteral::aggregate(aggregate(), negated));
      } else {
        std::string a = atom_name("an atom or aggregate");
        out.push_back(negated ? BodyLiteral::negative(std::move(a))
                              : BodyLiteral::positive(std::move(a)));
      }
    } while (accept(Tok::kComma));
    return out;
  }

  AggregateFunction function_symbol() {
    const std::string& w = peek().text;
    if (w == "sum") return next(), AggregateFunction::kSum;
    if (w == "count") return next(), AggregateFunction::kCount;
    if (w == "max") return next(), AggregateFunction::kMax;
    if (w == "true" || w == "false" || w == "unknown" || w == "contradictory") {
      fail("truth constants are only allowed in formula bodies");
    }
    fail("unknown aggregate function '#" + w + "'");
  }

  Rational number(const char* what) {
    if (peek().kind != Tok::kNumber) fail(std::string("expected ") + what);
    return next().number;
  }

  AggregateAtom aggregate() {
    AggregateAtom a;
    a.function = function_symbol();
    if (!accept(Tok::kLBrace)) fail("expected '{' after aggregate function");
    do {
      SetTermEntry e;
      e.weights.push_back(number("a weight"));
      while (accept(Tok::kComma)) e.weights.push_back(number("a weight after ','"));
      if (!accept(Tok::kColon)) fail("expected ':' after set-term weights");
      e.condition.push_back(atom_name("a condition atom"));
      while (accept(Tok::kAmp)) e.condition.push_back(atom_name("a condition atom after '&'"));
      a.term.entries.push_back(std::move(e));
    } while (accept(Tok::kSemi));
    if (!accept(Tok::kRBrace)) fail("expected '}' or ';' in set term");
    if (peek().kind != Tok::kCmp) fail("expected a comparison after aggregate");
    a.comparator = next().cmp;
    a.bound = number("an aggregate bound");
    return a;
  }

  Formula formula() {
    std::vector<Formula> ops{conj()};
    while (accept(Tok::kBar)) ops.push_back(conj());
    return ops.size() == 1 ? std::move(ops.front()) : Formula::disjunction(std::move(ops));
  }

  Formula conj() {
    std::vector<Formula> ops{unary()};
    while (accept(Tok::kAmp)) ops.push_back(unary());
    return ops.size() == 1 ? std::move(ops.front()) : Formula::conjunction(std::move(ops));
  }

  Formula unary() {
    if (peek().kind == Tok::kIdent && peek().text == "not") {
      next();
      return Formula::negation(unary());
    }
    if (accept(Tok::kLParen)) {
      Formula f = formula();
      if (!accept(Tok::kRParen)) fail("expected ')'");
      return f;
    }
    if (peek().kind == Tok::kHash) {
      const std::string& w = peek().text;
      if (w == "true") return next(), Formula::constant(TruthValue::kTrue);
      if (w == "false") return next(), Formula::constant(TruthValue::kFalse);
      if (w == "unknown") return next(), Formula::constant(TruthValue::kUnknown);
      if (w == "contradictory") return next(), Formula::constant(TruthValue::kContradictory);
      if (w == "sum" || w == "count" || w == "max") {
        fail("aggregate atoms are not allowed in formula bodies");
      }
      fail("unknown aggregate function '#" + w + "'");
    }
    return Formula::atom(atom_name("an atom"));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string constant_text(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue:
      return "#true";
    case TruthValue::kFalse:
      return "#false";
    case TruthValue::kUnknown:
      return "#unknown";
    case TruthValue::kContradictory:
      return "#contradictory";
  }
  return "#false";
}

// parent: kind of the enclosing connective, or kConst at top level.
std::string render(const Formula& f, Formula::Kind parent) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
      return f.atom_name();
    case K::kConst:
      return constant_text(f.value());
    case K::kNot:
      return "not " + render(f.operands().front(), K::kNot);
    case K::kAnd:
    case K::kOr: {
      const auto& ops = f.operands();
      if (ops.empty()) {
        return constant_text(f.kind() == K::kAnd ? TruthValue::kTrue : TruthValue::kFalse);
      }
      if (ops.size() == 1) return render(ops.front(), parent);
      const char* sep = f.kind() == K::kAnd ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += sep;
        out += render(ops[i], f.kind());
      }
      const bool wrap = parent == K::kNot || parent == f.kind() ||
                        (parent == K::kAnd && f.kind() == K::kOr);
      return wrap ? "(" + out + ")" : out;
    }
  }
  return {};
}

}  // namespace

Program parse_program(std::string_view text) {
  Parser p(lex(text));
  return Program(p.rules());
}

Program parse_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kUsage, "cannot open program file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_program(ss.str());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kParse) throw;
    throw Error(ErrorKind::kParse, path + ":" + e.what());
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_formula(const Formula& f) { return render(f, Formula::Kind::kConst); }

std::string format_aggregate(const AggregateAtom& a) {
  std::string out = "#";
  switch (a.function) {
    case AggregateFunction::kSum: out += "sum"; break;
    case AggregateFunction::kCount: out += "count"; break;
    case AggregateFunction::kMax: out += "max"; break;
  }
  out += "{";
  for (std::size_t i = 0; i < a.term.entries.size(); ++i) {
    const auto& e = a.term.entries[i];
    if (i) out += "; ";
    for (std::size_t k = 0; k < e.weights.size(); ++k) {
      if (k) out += ",";
      out += format_rational(e.weights[k]);
    }
    out += ":";
    for (std::size_t k = 0; k < e.condition.size(); ++k) {
      if (k) out += "&";
      out += e.condition[k];
    }
  }
  out += "} ";
  switch (a.comparator) {
    case Comparator::kLt: out += "<"; break;
    case Comparator::kLe: out += "<="; break;
    case Comparator::kGe: out += ">="; break;
    case Comparator::kGt: out += ">"; break;
    case Comparator::kEq: out += "="; break;
  }
  return out + " " + format_rational(a.bound);
}

std::string format_rule(const Rule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.head().size(); ++i) {
    if (i) out += " | ";
    out += rule.head()[i];
  }
  out += " :-";
  if (rule.has_formula_body()) {
    const Formula& f = rule.formula();
    // A bare literal would read back as a one-literal conjunction.
    const bool literal_like =
        f.kind() == Formula::Kind::kAtom ||
        (f.kind() == Formula::Kind::kNot &&
         f.operands().front().kind() == Formula::Kind::kAtom);
    const std::string text = format_formula(f);
    return out + " " + (literal_like ? "(" + text + ")" : text) + ".";
  }
  if (rule.literals().empty()) return out + " .";
  for (std::size_t i = 0; i < rule.literals().size(); ++i) {
    const auto& lit = rule.literals()[i];
    out += i ? ", " : " ";
    if (lit.negated) out += "not ";
    out += lit.is_aggregate() ? format_aggregate(lit.agg()) : lit.atom();
  }
  return out + ".";
}

std::string format_program(const Program& program) {
  std::string out;
  for (const auto& r : program.rules()) out += format_rule(r) + "\n";
  return out;
}

}  // namespace aftlab
