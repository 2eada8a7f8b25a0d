#include "protoric/frontend/parser.hpp"

#include "protoric/frontend/lexer.hpp"

#include <limits>

namespace protoric::frontend {

namespace {

struct SyntaxError {
    Diagnostic diagnostic;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    TowerDocument document()
    {
        TowerDocument doc;
        expect_keyword("tower");
        const Token& name = expect(TokenKind::Ident, "a tower name");
        doc.name = name.text;
        doc.name_span = name.span;
        expect(TokenKind::LBrace, "'{'");
        while (!at(TokenKind::RBrace)) {
            const Token& t = peek();
            if (t.kind == TokenKind::Ident && t.text == "level")
                doc.levels.push_back(level());
            else if (t.kind == TokenKind::Ident && t.text == "connect")
                doc.connects.push_back(connect());
            else if (t.kind == TokenKind::Ident && t.text == "family")
                doc.families.push_back(family());
            else
                fail(t, "expected 'level', 'connect', 'family' or '}'");
        }
        next();
        if (!at(TokenKind::End))
            fail(peek(), "unexpected input after the tower body");
        return doc;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }
    bool at_keyword(std::string_view w) const { return at(TokenKind::Ident) && peek().text == w; }

    const Token& next()
    {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End)
            ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token& t, const std::string& message)
    {
        const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        Span span = t.span;
        if (span.length == 0)
            span.length = 1;
        throw SyntaxError{{Severity::Error, DiagnosticKind::Syntax, span, message + ", found " + found, std::nullopt}};
    }

    const Token& expect(TokenKind k, const std::string& what)
    {
        if (!at(k))
            fail(peek(), "expected " + what);
        return next();
    }

    const Token& expect_keyword(std::string_view w)
    {
        if (!at_keyword(w))
            fail(peek(), "expected '" + std::string(w) + "'");
        return next();
    }

    Integer integer(const std::string& what)
    {
        return Integer(expect(TokenKind::Int, what).text);
    }

    std::size_t positive(const std::string& what)
    {
        const Token& t = expect(TokenKind::Int, what);
        const Integer v(t.text);
        if (v <= 0 || !v.fits_ulong_p() || v.get_ui() > std::numeric_limits<std::size_t>::max() / 2)
            fail(t, "expected " + what);
        return v.get_ui();
    }

    Span span_from(const Span& start) const
    {
        const Span& end = tokens_[pos_ - 1].span;
        Span s = start;
        if (end.line == start.line)
            s.length = end.column + end.length - start.column;
        else
            s.length = start.length;
        return s;
    }

    std::pair<IntVec, Span> vec()
    {
        const Span start = expect(TokenKind::LParen, "'('").span;
        std::vector<Integer> entries{integer("an integer")};
        while (!at(TokenKind::RParen)) {
            if (!at(TokenKind::Comma))
                fail(peek(), "expected ',' or ')'");
            next();
            entries.push_back(integer("an integer"));
        }
        next();
        return {IntVec(std::move(entries)), span_from(start)};
    }

    std::vector<Integer> matrix_row()
    {
        expect(TokenKind::LBracket, "'['");
        std::vector<Integer> row{integer("an integer")};
        while (!at(TokenKind::RBracket)) {
            if (!at(TokenKind::Comma))
                fail(peek(), "expected ',' or ']'");
            next();
            row.push_back(integer("an integer"));
        }
        next();
        return row;
    }

    Monomial monomial()
    {
        Monomial m;
        const Span start = peek().span;
        for (;;) {
            const Token& v = expect(TokenKind::Ident, "a variable");
            Factor f{v.text, 1, v.span};
            if (at(TokenKind::Caret)) {
                next();
                f.exponent = positive("a positive exponent");
            }
            f.span = span_from(v.span);
            m.factors.push_back(std::move(f));
            if (!at(TokenKind::Star))
                break;
            next();
        }
        m.span = span_from(start);
        return m;
    }

    LevelDecl level()
    {
        LevelDecl d;
        const Span start = next().span;
        d.index = positive("a positive level index");
        expect(TokenKind::LBrace, "'{'");
        if (at_keyword("ambient")) {
            const Span a = next().span;
            d.ambient = positive("a positive ambient dimension");
            d.ambient_span = span_from(a);
            expect(TokenKind::Semicolon, "';'");
        }
        d.spec.span = peek().span;
        if (at_keyword("generators") || at_keyword("rays")) {
            d.spec.kind = next().text == "rays" ? SpecKind::Rays : SpecKind::Generators;
            do {
                auto [v, span] = vec();
                d.spec.vectors.push_back(std::move(v));
                d.spec.vector_spans.push_back(span);
            } while (at(TokenKind::LParen));
        } else if (at_keyword("equation")) {
            next();
            d.spec.kind = SpecKind::Equation;
            d.spec.lhs = monomial();
            expect(TokenKind::Equals, "'='");
            d.spec.rhs = monomial();
        } else {
            fail(peek(), "expected 'generators', 'rays' or 'equation'");
        }
        d.spec.span = span_from(d.spec.span);
        expect(TokenKind::Semicolon, "';'");
        expect(TokenKind::RBrace, "'}'");
        d.span = span_from(start);
        return d;
    }

    ConnectDecl connect()
    {
        ConnectDecl d;
        const Span start = next().span;
        d.from = positive("a positive level index");
        expect(TokenKind::Arrow, "'->'");
        d.to = positive("a positive level index");
        expect_keyword("matrix");
        const Span m = expect(TokenKind::LBracket, "'['").span;
        d.rows.push_back(matrix_row());
        while (!at(TokenKind::RBracket)) {
            if (!at(TokenKind::Comma))
                fail(peek(), "expected ',' or ']'");
            next();
            d.rows.push_back(matrix_row());
        }
        next();
        d.matrix_span = span_from(m);
        expect(TokenKind::Semicolon, "';'");
        d.span = span_from(start);
        return d;
    }

    FamilyDecl family()
    {
        FamilyDecl d;
        const Span start = next().span;
        const Token& name = peek();
        auto f = name.kind == TokenKind::Ident ? family_from_name(name.text) : std::nullopt;
        if (!f)
            fail(name, "expected 'torus', 'affine_space' or 'double_cover'");
        next();
        d.family = *f;
        expect_keyword("depth");
        const Span depth_start = peek().span;
        d.depth = positive("a positive depth");
        d.depth_span = span_from(depth_start);
        expect(TokenKind::Semicolon, "';'");
        d.span = span_from(start);
        return d;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool same_monomial(const Monomial& a, const Monomial& b)
{
    if (a.factors.size() != b.factors.size())
        return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].variable != b.factors[i].variable || a.factors[i].exponent != b.factors[i].exponent)
            return false;
    return true;
}

std::string join_row(const std::vector<Integer>& row)
{
    std::string s = "[";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i)
            s += ",";
        s += row[i].get_str();
    }
    return s + "]";
}

} // namespace

bool structurally_equal(const TowerDocument& a, const TowerDocument& b)
{
    if (a.name != b.name || a.levels.size() != b.levels.size() || a.connects.size() != b.connects.size() ||
        a.families.size() != b.families.size())
        return false;
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        const LevelDecl& x = a.levels[i];
        const LevelDecl& y = b.levels[i];
        if (x.index != y.index || x.ambient != y.ambient || x.spec.kind != y.spec.kind ||
            x.spec.vectors != y.spec.vectors || !same_monomial(x.spec.lhs, y.spec.lhs) ||
            !same_monomial(x.spec.rhs, y.spec.rhs))
            return false;
    }
    for (std::size_t i = 0; i < a.connects.size(); ++i) {
        const ConnectDecl& x = a.connects[i];
        const ConnectDecl& y = b.connects[i];
        if (x.from != y.from || x.to != y.to || x.rows != y.rows)
            return false;
    }
    for (std::size_t i = 0; i < a.families.size(); ++i)
        if (a.families[i].family != b.families[i].family || a.families[i].depth != b.families[i].depth)
            return false;
    return true;
}

ParseResult parse_tower(std::string_view text)
{
    LexResult lexed = lex(text);
    ParseResult out;
    if (!lexed.diagnostics.empty()) {
        out.diagnostics = std::move(lexed.diagnostics);
        return out;
    }
    try {
        out.document = Parser(std::move(lexed.tokens)).document();
    } catch (const SyntaxError& e) {
        out.diagnostics.push_back(e.diagnostic);
    }
    return out;
}

std::string print_monomial(const Monomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i)
            s += "*";
        s += m.factors[i].variable;
        if (m.factors[i].exponent != 1)
            s += "^" + m.factors[i].exponent.get_str();
    }
    return s;
}

std::string print_document(const TowerDocument& doc)
{
    std::string out = "tower " + doc.name + " {\n";
    for (const auto& l : doc.levels) {
        out += "  level " + std::to_string(l.index) + " { ";
        if (l.ambient)
            out += "ambient " + std::to_string(*l.ambient) + "; ";
        switch (l.spec.kind) {
        case SpecKind::Generators:
        case SpecKind::Rays:
            out += l.spec.kind == SpecKind::Rays ? "rays" : "generators";
            for (const auto& v : l.spec.vectors)
                out += " " + v.to_string();
            break;
        case SpecKind::Equation:
            out += "equation " + print_monomial(l.spec.lhs) + " = " + print_monomial(l.spec.rhs);
            break;
        }
        out += "; }\n";
    }
    for (const auto& c : doc.connects) {
        out += "  connect " + std::to_string(c.from) + " -> " + std::to_string(c.to) + " matrix [";
        for (std::size_t i = 0; i < c.rows.size(); ++i) {
            if (i)
                out += ",";
            out += join_row(c.rows[i]);
        }
        out += "];\n";
    }
    for (const auto& f : doc.families)
        out += "  family " + std::string(family_name(f.family)) + " depth " + std::to_string(f.depth) + ";\n";
    out += "}\n";
    return out;
}

} // namespace protoric::frontend
