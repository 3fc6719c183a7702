#include "twinlab/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace twinlab {

ParseError::ParseError(const std::string& message, std::size_t position, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::string text = message + " at position " + std::to_string(position);
        if (!expected.empty()) {
          text += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) text += (i ? ", " : "") + expected[i];
          text += ")";
        }
        return text;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Token { identifier, integer, lparen, rparen, star, caret, minus, end };

struct Lexeme {
  Token kind = Token::end;
  std::string text;
  std::size_t position = 0;
};

std::vector<Lexeme> tokenize(std::string_view text) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      // Letters then digits, so juxtaposed atoms such as t1t2 split.
      while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::identifier, std::string(text.substr(start, i - start)), start});
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::integer, std::string(text.substr(start, i - start)), start});
    } else {
      Token kind;
      switch (c) {
        case '(': kind = Token::lparen; break;
        case ')': kind = Token::rparen; break;
        case '*': kind = Token::star; break;
        case '^': kind = Token::caret; break;
        case '-': kind = Token::minus; break;
        default: throw ParseError(std::string("unexpected character '") + text[i] + "'", start);
      }
      out.push_back({kind, std::string(1, text[i]), start});
      ++i;
    }
  }
  out.push_back({Token::end, "", text.size()});
  return out;
}

int to_int(const Lexeme& lex) {
  int value = 0;
  const auto* first = lex.text.data();
  const auto [ptr, ec] = std::from_chars(first, first + lex.text.size(), value);
  if (ec != std::errc() || ptr != first + lex.text.size()) throw ParseError("integer too large", lex.position);
  return value;
}

// Group is a policy with: Element, identity(), atom(const Lexeme&), and the
// free functions multiply/invert/power/conjugate found by overload.
template <typename Group>
class Parser {
 public:
  using Element = typename Group::Element;

  Parser(std::string_view text, const Group& group) : tokens_(tokenize(text)), group_(group) {}

  Element parse() {
    if (peek().kind == Token::end) throw ParseError("empty expression", peek().position, {"word"});
    Element value = expr();
    if (peek().kind != Token::end) {
      throw ParseError("unexpected '" + peek().text + "'", peek().position, {"generator", "'*'", "'^'", "end"});
    }
    return value;
  }

 private:
  const Lexeme& peek() const { return tokens_[index_]; }
  const Lexeme& next() { return tokens_[index_++]; }

  bool starts_primary() const {
    const Token k = peek().kind;
    return k == Token::identifier || k == Token::integer || k == Token::lparen;
  }

  Element expr() {
    Element value = term();
    for (;;) {
      if (peek().kind == Token::star) {
        next();
        value = multiply(value, term());
      } else if (starts_primary()) {
        value = multiply(value, term());
      } else {
        return value;
      }
    }
  }

  Element term() {
    Element value = primary();
    while (peek().kind == Token::caret) {
      next();
      if (peek().kind == Token::minus) {
        next();
        if (peek().kind != Token::integer) throw ParseError("expected exponent", peek().position, {"integer"});
        value = power(value, -to_int(next()));
      } else if (peek().kind == Token::integer) {
        value = power(value, to_int(next()));
      } else if (starts_primary()) {
        value = conjugate(value, primary());
      } else {
        throw ParseError("expected exponent", peek().position, {"integer", "'-'", "word"});
      }
    }
    return value;
  }

  Element primary() {
    const Lexeme& lex = peek();
    switch (lex.kind) {
      case Token::identifier:
        next();
        return group_.atom(lex);
      case Token::integer:
        if (lex.text != "1") throw ParseError("only 1 may appear as a number atom", lex.position, {"1"});
        next();
        return group_.identity();
      case Token::lparen: {
        next();
        Element value = expr();
        if (peek().kind != Token::rparen) throw ParseError("unbalanced parenthesis", peek().position, {"')'"});
        next();
        return value;
      }
      default:
        throw ParseError(lex.kind == Token::end ? "unexpected end of input" : "unexpected '" + lex.text + "'",
                         lex.position, {"generator", "1", "'('"});
    }
  }

  std::vector<Lexeme> tokens_;
  std::size_t index_ = 0;
  const Group& group_;
};

struct TwinGroup {
  using Element = TwinWord;
  int strands;

  TwinWord identity() const { return TwinWord(strands); }
  TwinWord atom(const Lexeme& lex) const {
    const std::string& name = lex.text;
    if (name.size() < 2 || name[0] != 't' ||
        !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("unknown generator '" + name + "'", lex.position, {"t<k>"});
    }
    const int k = to_int(Lexeme{Token::integer, name.substr(1), lex.position});
    if (k < 1 || k > strands - 1) {
      throw ParseError("generator " + name + " out of range for n=" + std::to_string(strands), lex.position,
                       {"t1..t" + std::to_string(strands - 1)});
    }
    return TwinWord(strands, {k});
  }
};

struct FreeGroupPolicy {
  using Element = FreeWord;
  AlphabetPtr alphabet;

  FreeWord identity() const { return FreeWord(alphabet); }
  FreeWord atom(const Lexeme& lex) const {
    const auto symbol = alphabet->find(lex.text);
    if (!symbol) throw ParseError("unknown generator '" + lex.text + "'", lex.position);
    return FreeWord::generator(alphabet, *symbol);
  }
};

}  // namespace

TwinWord parse_twin_expression(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  TwinGroup group{strands};
  return tits_reduce(Parser<TwinGroup>(text, group).parse());
}

FreeWord parse_free_expression(std::string_view text, const AlphabetPtr& alphabet) {
  FreeGroupPolicy group{alphabet};
  return Parser<FreeGroupPolicy>(text, group).parse();
}

}  // namespace twinlab
