#include "protoric/algebra.hpp"

#include "protoric/error.hpp"

#include <cctype>

namespace protoric {

namespace {

void same_context(const AlgebraElement& f, const AlgebraElement& g)
{
    if (f.level != g.level)
        throw Error(ErrorKind::ContextMismatch, "elements live at levels " + std::to_string(f.level) + " and " +
                                                    std::to_string(g.level) + "; project them first");
}

void accumulate(std::map<IntVec, Rational>& terms, const IntVec& m, Rational c)
{
    // mpq_class(n, d) is not reduced on construction.
    c.canonicalize();
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

class TermReader {
public:
    explicit TermReader(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_space();
        return pos_ == text_.size();
    }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    void expect_word(std::string_view w)
    {
        skip_space();
        if (text_.substr(pos_, w.size()) != w)
            fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }
    Integer integer()
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected an integer");
        std::string s(text_.substr(start, pos_ - start));
        if (s[0] == '+')
            s.erase(0, 1);
        return Integer(s);
    }
    Rational rational()
    {
        Rational q(integer());
        if (accept('/')) {
            const Integer den = integer();
            if (den <= 0)
                fail("denominators must be positive");
            q /= Rational(den);
        }
        return q;
    }
    IntVec vec()
    {
        expect('(');
        std::vector<Integer> entries{integer()};
        while (accept(','))
            entries.push_back(integer());
        expect(')');
        return IntVec(std::move(entries));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_), std::string(text_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Rational AlgebraElement::coefficient(const IntVec& m) const
{
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

AlgebraElement algebra_zero(std::size_t level)
{
    return AlgebraElement{level, {}};
}

AlgebraElement algebra_one(const ProAffineTower& t, std::size_t level)
{
    return monomial(t, level, IntVec::zero(t.level(level).ambient()));
}

AlgebraElement monomial(const ProAffineTower& t, std::size_t level, const IntVec& m, const Rational& c)
{
    if (!contains(t.level(level), m))
        throw Error(ErrorKind::NotMember, m.to_string() + " is not in S_" + std::to_string(level), m.to_string());
    AlgebraElement f{level, {}};
    accumulate(f.terms, m, c);
    return f;
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g)
{
    same_context(f, g);
    AlgebraElement out = f;
    for (const auto& [m, c] : g.terms)
        accumulate(out.terms, m, c);
    return out;
}

AlgebraElement subtract(const AlgebraElement& f, const AlgebraElement& g)
{
    return add(f, scale(-1, g));
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g)
{
    same_context(f, g);
    AlgebraElement out{f.level, {}};
    for (const auto& [m, c] : f.terms)
        for (const auto& [m2, c2] : g.terms)
            accumulate(out.terms, m + m2, c * c2);
    return out;
}

AlgebraElement scale(const Rational& c, const AlgebraElement& f)
{
    AlgebraElement out{f.level, {}};
    for (const auto& [m, x] : f.terms)
        accumulate(out.terms, m, c * x);
    return out;
}

AlgebraElement project(const ProAffineTower& t, const AlgebraElement& f, std::size_t l)
{
    if (l == 0 || l > f.level)
        throw Error(ErrorKind::OutOfRange,
                    "cannot project an element of level " + std::to_string(f.level) + " to level " + std::to_string(l));
    const IntMatrix down = t.composite(l, f.level);
    AlgebraElement out{l, {}};
    for (const auto& [m, c] : f.terms)
        accumulate(out.terms, down * m, c);
    return out;
}

bool in_ideal(const ProAffineTower& t, const AlgebraElement& f, std::size_t l)
{
    return project(t, f, l).is_zero();
}

AlgebraElement exref_sequence(const ProAffineTower& t, std::size_t i)
{
    const std::size_t depth = t.depth();
    if (i == 0 || i > depth)
        throw Error(ErrorKind::InsufficientDepth,
                    "f_" + std::to_string(i) + " needs a window of depth " + std::to_string(i) + ", have " +
                        std::to_string(depth));
    auto x = [&](std::size_t k) {
        IntVec m = IntVec::zero(t.level(depth).ambient());
        for (std::size_t c = 0; c < k; ++c)
            m[c] = 1;
        return monomial(t, depth, m);
    };
    auto inverse_power = [](std::size_t k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
        return Rational(Integer(1), p);
    };
    AlgebraElement f = scale(inverse_power(i - 1), x(i));
    for (std::size_t k = 1; k < i; ++k)
        f = add(f, scale(inverse_power(k), x(k)));
    return f;
}

std::string to_string(const AlgebraElement& f)
{
    if (f.terms.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : f.terms) {
        if (!out.empty())
            out += " + ";
        out += c.get_str() + "*chi" + m.to_string();
    }
    return out;
}

AlgebraElement parse_algebra_element(const ProAffineTower& t, std::size_t level, std::string_view text)
{
    TermReader r(text);
    AlgebraElement f = algebra_zero(level);
    if (r.done())
        r.fail("empty expression");
    {
        TermReader probe(text);
        if (probe.accept('0') && probe.done())
            return f;
    }
    do {
        const Rational c = r.rational();
        r.expect('*');
        r.expect_word("chi");
        const IntVec m = r.vec();
        f = add(f, monomial(t, level, m, c));
    } while (r.accept('+'));
    if (!r.done())
        r.fail("unexpected trailing input");
    return f;
}

} // namespace protoric
