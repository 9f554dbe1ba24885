#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fdlb/kb_text.hpp"

namespace fdlb::text::detail {

enum class TokenKind {
  Word,    // identifiers and keywords, including SUBSUMED-BY
  Number,  // -?[0-9]+(.[0-9]+)?
  Symbol,  // run of non-ASCII bytes, e.g. €
  Punct,   // ; : ( ) , . @ = { }
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;

  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == TokenKind::Word && text == w; }
};

/// Tokenizes `input`; unknown characters become Lexical diagnostics and are
/// skipped. The result always ends with an End token.
std::vector<Token> tokenize(std::string_view input, std::vector<ParseDiagnostic>& diagnostics);

/// Uppercase operator words that can never be identifiers.
bool is_reserved(std::string_view word);

}  // namespace fdlb::text::detail
