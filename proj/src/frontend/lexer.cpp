#include "protoric/frontend/lexer.hpp"

#include <cctype>

namespace protoric::frontend {

std::string format_diagnostic(const Diagnostic& d, const std::string& filename)
{
    std::string out = filename + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
                      (d.severity == Severity::Error ? "error" : "warning") + ": " + d.message;
    if (d.witness)
        out += " (witness: " + *d.witness + ")";
    return out;
}

std::string_view token_kind_name(TokenKind k) noexcept
{
    switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Int: return "integer";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Star: return "'*'";
    case TokenKind::End: return "end of input";
    }
    return "token";
}

namespace {

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    LexResult run()
    {
        LexResult out;
        for (;;) {
            skip_trivia();
            if (pos_ >= text_.size()) {
                out.tokens.push_back({TokenKind::End, "", {line_, column_, 0}});
                return out;
            }
            const Span start{line_, column_, 0};
            const std::size_t begin = pos_;
            const char c = text_[pos_];
            TokenKind kind;
            if (is_ident_start(c)) {
                while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                    advance();
                kind = TokenKind::Ident;
            } else if (is_digit(c) || (c == '-' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
                advance();
                while (pos_ < text_.size() && is_digit(text_[pos_]))
                    advance();
                kind = TokenKind::Int;
            } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                advance();
                advance();
                kind = TokenKind::Arrow;
            } else if (auto single = punctuation(c)) {
                advance();
                kind = *single;
            } else {
                const std::size_t width = code_point_width(pos_);
                out.diagnostics.push_back({Severity::Error, DiagnosticKind::Syntax, {line_, column_, 1},
                                           "unexpected character '" + std::string(text_.substr(pos_, width)) + "'",
                                           std::nullopt});
                out.tokens.push_back({TokenKind::End, "", {line_, column_, 0}});
                return out;
            }
            Token t{kind, std::string(text_.substr(begin, pos_ - begin)), start};
            t.span.length = column_ - start.column;
            out.tokens.push_back(std::move(t));
        }
    }

private:
    static std::optional<TokenKind> punctuation(char c)
    {
        switch (c) {
        case '{': return TokenKind::LBrace;
        case '}': return TokenKind::RBrace;
        case '(': return TokenKind::LParen;
        case ')': return TokenKind::RParen;
        case '[': return TokenKind::LBracket;
        case ']': return TokenKind::RBracket;
        case ',': return TokenKind::Comma;
        case ';': return TokenKind::Semicolon;
        case '=': return TokenKind::Equals;
        case '^': return TokenKind::Caret;
        case '*': return TokenKind::Star;
        default: return std::nullopt;
        }
    }

    std::size_t code_point_width(std::size_t at) const
    {
        std::size_t w = 1;
        while (at + w < text_.size() && (static_cast<unsigned char>(text_[at + w]) & 0xC0) == 0x80)
            ++w;
        return w;
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
            ++pos_;
            return;
        }
        pos_ += code_point_width(pos_);
        ++column_;
    }

    void skip_trivia()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

LexResult lex(std::string_view text)
{
    return Lexer(text).run();
}

} // namespace protoric::frontend
