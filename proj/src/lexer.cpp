#include "lexer.hpp"

#include <array>
#include <cctype>

namespace fdlb::text::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool non_ascii(char c) { return (static_cast<unsigned char>(c) & 0x80U) != 0; }

constexpr std::string_view kPunct = ";:(),.@={}";

class Scanner {
 public:
  explicit Scanner(std::string_view in) : in_(in) {}

  bool done() const { return pos_ >= in_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (in_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  SourceSpan here() const { return SourceSpan{line_, col_, 0, pos_}; }
  std::string_view slice(std::size_t from) const { return in_.substr(from, pos_ - from); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_reserved(std::string_view word) {
  static constexpr std::array<std::string_view, 13> kReserved = {
      "TOP", "BOTTOM", "NOT", "AND", "OR", "EXISTS", "FORALL",
      "SUBSUMED-BY", "EQUIV", "GT", "GE", "LT", "LE"};
  for (auto r : kReserved)
    if (r == word) return true;
  return word == "SUBSUMED";
}

std::vector<Token> tokenize(std::string_view input, std::vector<ParseDiagnostic>& diagnostics) {
  std::vector<Token> tokens;
  Scanner s(input);
  while (!s.done()) {
    char c = s.peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      s.advance();
      continue;
    }
    if (c == '#') {
      while (!s.done() && s.peek() != '\n') s.advance();
      continue;
    }
    SourceSpan start = s.here();
    std::size_t from = s.pos();
    Token tok;
    if (ident_start(c)) {
      while (ident_char(s.peek())) s.advance();
      if (s.slice(from) == "SUBSUMED" && s.peek() == '-' && s.peek(1) == 'B' && s.peek(2) == 'Y' &&
          !ident_char(s.peek(3))) {
        s.advance();
        s.advance();
        s.advance();
      }
      tok.kind = TokenKind::Word;
    } else if (digit(c) || (c == '-' && digit(s.peek(1)))) {
      s.advance();
      while (digit(s.peek())) s.advance();
      if (s.peek() == '.' && digit(s.peek(1))) {
        s.advance();
        while (digit(s.peek())) s.advance();
      }
      tok.kind = TokenKind::Number;
    } else if (non_ascii(c)) {
      while (non_ascii(s.peek())) s.advance();
      tok.kind = TokenKind::Symbol;
    } else if (kPunct.find(c) != std::string_view::npos) {
      s.advance();
      tok.kind = TokenKind::Punct;
    } else {
      s.advance();
      start.length = 1;
      diagnostics.push_back({Severity::Error, DiagnosticCode::Lexical,
                             std::string("unexpected character '") + c + "'", start});
      continue;
    }
    tok.text = std::string(s.slice(from));
    start.length = static_cast<int>(tok.text.size());
    tok.span = start;
    tokens.push_back(std::move(tok));
  }
  Token end;
  end.span = s.here();
  tokens.push_back(end);
  return tokens;
}

}  // namespace fdlb::text::detail
