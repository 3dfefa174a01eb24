#include "glil/syntax.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <utility>

#include "glil/error.hpp"

namespace glil {
namespace {

enum class Tok { Top, Bot, Var, Not, And, Or, Imp, Iff, Box, Dia, Rhd, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  unsigned var = 0;
};

// Longest spellings first where one is a prefix of another.
constexpr std::array<std::pair<std::string_view, Tok>, 23> kSpellings{{
    {"<->", Tok::Iff}, {"<>", Tok::Dia},      {"->", Tok::Imp},    {"[]", Tok::Box},
    {"|>", Tok::Rhd},  {"|", Tok::Or},        {"&", Tok::And},     {"~", Tok::Not},
    {"(", Tok::LParen}, {")", Tok::RParen},   {"T", Tok::Top},     {"F", Tok::Bot},
    {"⊤", Tok::Top},   {"⊥", Tok::Bot},       {"¬", Tok::Not},     {"∧", Tok::And},
    {"∨", Tok::Or},    {"→", Tok::Imp},       {"↔", Tok::Iff},     {"□", Tok::Box},
    {"◇", Tok::Dia},   {"▷", Tok::Rhd},       {"◊", Tok::Dia},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, pos_};
      return;
    }
    const std::size_t start = pos_;
    if (text_[pos_] == 'p') {
      ++pos_;
      unsigned long long value = 0;
      bool digits = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (value > std::numeric_limits<unsigned>::max()) {
          throw ParseError("variable index out of range", start);
        }
        digits = true;
        ++pos_;
      }
      current_ = {Tok::Var, start, digits ? static_cast<unsigned>(value) : 0u};
      return;
    }
    for (const auto& [spelling, kind] : kSpellings) {
      if (text_.substr(pos_, spelling.size()) == spelling) {
        pos_ += spelling.size();
        current_ = {kind, start};
        return;
      }
    }
    throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse_all() {
    Formula f = implication();
    if (lex_.peek().kind != Tok::End) throw ParseError("unexpected token", lex_.peek().pos);
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = interpretation();
    const Tok k = lex_.peek().kind;
    if (k == Tok::Imp || k == Tok::Iff) {
      lex_.next();
      Formula rhs = implication();
      return k == Tok::Imp ? Formula::Imp(lhs, rhs) : Formula::Iff(lhs, rhs);
    }
    return lhs;
  }

  Formula interpretation() {
    Formula lhs = junction();
    if (lex_.peek().kind != Tok::Rhd) return lhs;
    lex_.next();
    Formula rhs = junction();
    if (lex_.peek().kind == Tok::Rhd) {
      throw ParseError("chained |> requires parentheses", lex_.peek().pos);
    }
    return Formula::Rhd(lhs, rhs);
  }

  Formula junction() {
    Formula lhs = unary();
    while (lex_.peek().kind == Tok::And || lex_.peek().kind == Tok::Or) {
      const bool conj = lex_.next().kind == Tok::And;
      Formula rhs = unary();
      lhs = conj ? Formula::And(lhs, rhs) : Formula::Or(lhs, rhs);
    }
    return lhs;
  }

  Formula unary() {
    const Token t = lex_.next();
    switch (t.kind) {
      case Tok::Not:
        return Formula::Not(unary());
      case Tok::Box:
        return Formula::Box(unary());
      case Tok::Dia:
        return Formula::Dia(unary());
      case Tok::Top:
        return Formula::Top();
      case Tok::Bot:
        return Formula::Bot();
      case Tok::Var:
        return Formula::Var(t.var);
      case Tok::LParen: {
        Formula inner = implication();
        if (lex_.peek().kind != Tok::RParen) throw ParseError("expected ')'", lex_.peek().pos);
        lex_.next();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lex_;
};

// Binding strength: higher binds tighter.
int level(Op op) {
  switch (op) {
    case Op::Imp:
    case Op::Iff:
      return 0;
    case Op::Rhd:
      return 1;
    case Op::And:
    case Op::Or:
      return 2;
    default:
      return 3;
  }
}

void emit(const Formula& f, int min_level, std::string& out) {
  const bool paren = level(f.op()) < min_level;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Bot:
      out += 'F';
      break;
    case Op::Top:
      out += 'T';
      break;
    case Op::Var:
      out += 'p';
      out += std::to_string(f.var());
      break;
    case Op::Not:
      out += '~';
      emit(f.lhs(), 3, out);
      break;
    case Op::Box:
      out += "[]";
      emit(f.lhs(), 3, out);
      break;
    case Op::Dia:
      out += "<>";
      emit(f.lhs(), 3, out);
      break;
    case Op::And:
    case Op::Or:
      emit(f.lhs(), 2, out);
      out += f.op() == Op::And ? " & " : " | ";
      emit(f.rhs(), 3, out);
      break;
    case Op::Rhd:
      emit(f.lhs(), 2, out);
      out += " |> ";
      emit(f.rhs(), 2, out);
      break;
    case Op::Imp:
    case Op::Iff:
      emit(f.lhs(), 1, out);
      out += f.op() == Op::Imp ? " -> " : " <-> ";
      emit(f.rhs(), 0, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

}  // namespace glil
