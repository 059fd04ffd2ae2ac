#include "mixcons/parser.hpp"

#include <cctype>
#include <vector>

namespace mixcons {

namespace {

std::string describe(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

enum class Tok { Ident, Top, Bot, Lambda, Not, And, Or, LParen, RParen, Comma, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), col});
      i = j;
      continue;
    }
    switch (c) {
      case 'T':
        out.push_back({Tok::Top, "T", col});
        break;
      case 'F':
        out.push_back({Tok::Bot, "F", col});
        break;
      case 'L':
        out.push_back({Tok::Lambda, "L", col});
        break;
      case '~':
        out.push_back({Tok::Not, "~", col});
        break;
      case '&':
        out.push_back({Tok::And, "&", col});
        break;
      case '|':
        out.push_back({Tok::Or, "|", col});
        break;
      case '(':
        out.push_back({Tok::LParen, "(", col});
        break;
      case ')':
        out.push_back({Tok::RParen, ")", col});
        break;
      case ',':
        out.push_back({Tok::Comma, ",", col});
        break;
      case '=':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          out.push_back({Tok::Arrow, "=>", col});
          ++i;
          break;
        }
        throw ParseError(col, "'='", {"'=>'"});
      default:
        throw ParseError(col, std::string("'") + c + "'",
                         {"identifier", "'T'", "'F'", "'L'", "'~'", "'('"});
    }
    // constants are single letters; "Tx" is not an identifier
    if ((c == 'T' || c == 'F' || c == 'L') && i + 1 < src.size() &&
        (std::isalnum(static_cast<unsigned char>(src[i + 1])) || src[i + 1] == '_'))
      throw ParseError(col + 1, std::string("'") + src[i + 1] + "'",
                       {"'&'", "'|'", "')'", "','", "'=>'", "end of input"});
    ++i;
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Formula formula() { return disjunction(); }

  Inference sequent() {
    Inference inf;
    if (peek().kind != Tok::Arrow) {
      if (peek().kind == Tok::End)
        fail({"'=>'", "identifier", "'T'", "'F'", "'L'", "'~'", "'('"});
      formula_list(inf.premises);
    }
    expect(Tok::Arrow, {"','", "'=>'", "'&'", "'|'"});
    if (peek().kind != Tok::End) formula_list(inf.conclusions);
    return inf;
  }

  void finish(std::set<std::string> expected) {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.column, t.kind == Tok::End ? "end of input" : "'" + t.text + "'",
                     std::move(expected));
  }

  void expect(Tok kind, std::set<std::string> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    ++pos_;
  }

  void formula_list(FormulaSet& out) {
    out.insert(formula());
    while (peek().kind == Tok::Comma) {
      ++pos_;
      out.insert(formula());
    }
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::negation(unary());
      case Tok::Ident:
        ++pos_;
        return Formula::var(t.text);
      case Tok::Top:
        ++pos_;
        return Formula::top();
      case Tok::Bot:
        ++pos_;
        return Formula::bot();
      case Tok::Lambda:
        ++pos_;
        return Formula::lambda();
      case Tok::LParen: {
        ++pos_;
        Formula inner = formula();
        expect(Tok::RParen, {"')'", "'&'", "'|'"});
        return inner;
      }
      default:
        fail({"identifier", "'T'", "'F'", "'L'", "'~'", "'('"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t column, std::string found, std::set<std::string> expected)
    : std::runtime_error("syntax error at column " + std::to_string(column) + ": unexpected " +
                         found + ", expected one of: " + describe(expected)),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish({"'&'", "'|'", "end of input"});
  return f;
}

Inference parse_sequent(std::string_view text) {
  Parser p(text);
  Inference inf = p.sequent();
  p.finish({"','", "end of input"});
  return inf;
}

bool looks_like_sequent(std::string_view text) { return text.find("=>") != std::string_view::npos; }

}  // namespace mixcons
