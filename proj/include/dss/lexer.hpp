#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dss/model.hpp"

namespace dss {

enum class TokenKind { keyword, quoted_string, number, iso_date, newline, eof };

struct Token {
    TokenKind kind = TokenKind::eof;
    std::string lexeme;  // quoted_string: unescaped content, quotes stripped
    int line = 1;
    int column = 1;
};

struct LexResult {
    std::vector<Token> tokens;  // always ends with an eof token
    std::vector<Diagnostic> diagnostics;
};

/// Tokenizes shorthand text. CRLF is normalized to LF first. Spaces and
/// tabs separate tokens; a run of line breaks (blank lines included)
/// yields a single newline token. Bare words and section headers
/// (trailing colon kept) lex as keyword tokens. Recovers after errors
/// (UNTERMINATED_STRING, BAD_CHAR) and keeps lexing.
LexResult lex(std::string_view text);

/// Pattern + calendar plausibility check for ISO-8601 date strings:
/// YYYY-MM-DD with optional Thh:mm:ss and optional Z or +-hh:mm offset.
bool is_plausible_iso_date(std::string_view s);

}  // namespace dss
