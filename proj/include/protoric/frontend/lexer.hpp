#pragma once

#include "protoric/frontend/diagnostic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace protoric::frontend {

enum class TokenKind {
    Ident,
    Int,
    Arrow,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Equals,
    Caret,
    Star,
    End,
};

std::string_view token_kind_name(TokenKind k) noexcept;

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    Span span;
};

struct LexResult {
    /// Always terminated by an End token.
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;
};

/// `#` starts a comment running to the end of the line; CR is whitespace so
/// CRLF files lex like LF files. A `-` immediately followed by a digit starts
/// a negative integer. Lexing stops at the first invalid character.
LexResult lex(std::string_view text);

} // namespace protoric::frontend
