#include "protoric/frontend/commands.hpp"

#include "protoric/algebra.hpp"
#include "protoric/error.hpp"
#include "protoric/frontend/render.hpp"
#include "protoric/toric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace protoric::frontend {

int exit_code(CommandStatus s) noexcept
{
    switch (s) {
    case CommandStatus::Ok: return 0;
    case CommandStatus::Validation: return 1;
    case CommandStatus::Internal: return 1;
    case CommandStatus::Parse: return 2;
    case CommandStatus::Usage: return 2;
    }
    return 1;
}

namespace {

std::optional<std::string> tower_name(const LoadedDocument& doc)
{
    if (doc.load.document)
        return doc.load.document->name;
    return std::nullopt;
}

CommandOutput ok(const Json& result, const std::string& text, OutputFormat fmt, const std::optional<std::string>& tower)
{
    CommandOutput out;
    out.out = fmt == OutputFormat::Json ? render_envelope(result, {}, tower) : text;
    return out;
}

CommandOutput failure(CommandStatus status, const std::string& message, const std::string& witness,
                      OutputFormat fmt, const std::optional<std::string>& tower)
{
    CommandOutput out;
    out.status = status;
    out.err = "protoric: error: " + message;
    if (!witness.empty())
        out.err += " (witness: " + witness + ")";
    out.err += "\n";
    if (fmt == OutputFormat::Json) {
        Diagnostic d{Severity::Error, DiagnosticKind::Semantic, {}, message, std::nullopt};
        if (!witness.empty())
            d.witness = witness;
        out.out = render_envelope(Json::object(), {d}, tower);
    }
    return out;
}

CommandStatus status_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse: return CommandStatus::Usage;
    case ErrorKind::Internal: return CommandStatus::Internal;
    default: return CommandStatus::Validation;
    }
}

// Runs body, turning library errors into a failed CommandOutput.
template <typename Body>
CommandOutput guarded(OutputFormat fmt, const std::optional<std::string>& tower, Body&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return failure(status_for(e.kind()), e.what(), e.witness(), fmt, tower);
    } catch (const std::exception& e) {
        return failure(CommandStatus::Internal, e.what(), {}, fmt, tower);
    }
}

std::string join_vectors(const std::vector<IntVec>& vs, const std::string& sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += sep;
        s += vs[i].to_string();
    }
    return s;
}

std::string lines(const std::vector<IntVec>& vs)
{
    std::string s;
    for (const auto& v : vs)
        s += v.to_string() + "\n";
    return s;
}

std::string monomial_text(const IntVec& multiplicities)
{
    std::string s;
    for (std::size_t j = 0; j < multiplicities.dim(); ++j) {
        if (multiplicities[j] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "g" + std::to_string(j + 1);
        if (multiplicities[j] != 1)
            s += "^" + multiplicities[j].get_str();
    }
    return s.empty() ? "1" : s;
}

std::string legend(const std::vector<IntVec>& gens)
{
    std::string s;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j)
            s += " ";
        s += "g" + std::to_string(j + 1) + "=" + gens[j].to_string();
    }
    return s;
}

bool is_projection(const IntMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

class TupleReader {
public:
    explicit TupleReader(std::string_view text) : text_(text) {}

    std::vector<std::string> items()
    {
        skip();
        expect('(');
        std::vector<std::string> out;
        for (;;) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
                   !std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start)
                fail("expected a number");
            out.emplace_back(text_.substr(start, pos_ - start));
            skip();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect(')');
            break;
        }
        skip();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::Parse, what + " in '" + std::string(text_) + "'", std::string(text_));
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_integer_text(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer integer_from(const std::string& s)
{
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

const ProAffineTower& tower_of(const LoadedDocument& doc)
{
    return doc.load.tower->tower;
}

} // namespace

LoadedDocument load_document(std::string filename, std::string_view text)
{
    return LoadedDocument{std::move(filename), load_tower(text)};
}

CommandOutput load_failure(const LoadedDocument& doc, OutputFormat fmt)
{
    CommandOutput out;
    out.status = doc.load.syntax_failed() ? CommandStatus::Parse : CommandStatus::Validation;
    for (const auto& d : doc.load.diagnostics)
        out.err += format_diagnostic(d, doc.filename) + "\n";
    if (fmt == OutputFormat::Json)
        out.out = render_envelope(Json::object(), doc.load.diagnostics, tower_name(doc));
    return out;
}

CommandOutput run_parse(const LoadedDocument& doc, OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    const std::string canonical = print_document(*doc.load.document);
    Json r = Json::object();
    r["document"] = canonical;
    r["depth"] = tower_of(doc).depth();
    return ok(r, canonical, fmt, tower_name(doc));
}

CommandOutput run_check(const LoadedDocument& doc, OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    return guarded(fmt, tower_name(doc), [&] {
        const ProAffineTower& t = tower_of(doc);
        Json r = Json::object();
        r["valid"] = true;
        r["depth"] = t.depth();
        r["family"] = t.family() ? Json(std::string(family_name(*t.family()))) : Json(nullptr);
        r["levels"] = Json::array();
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 1; i <= t.depth(); ++i) {
            const AffineSemigroup& s = t.level(i);
            const bool pointed = s.cone().is_pointed();
            const std::size_t rk = s.lattice_basis().size();
            Json l = Json::object();
            l["index"] = i;
            l["ambient"] = s.ambient();
            l["generators"] = to_json(s.generators());
            l["pointed"] = pointed;
            l["rank"] = rk;
            r["levels"].push_back(l);
            rows.push_back({std::to_string(i), std::to_string(s.ambient()), std::to_string(rk),
                            pointed ? "yes" : "no", join_vectors(s.generators())});
        }
        std::string text = "tower " + doc.load.document->name + ": valid, depth " + std::to_string(t.depth()) + "\n";
        text += render_table({"level", "ambient", "rank", "pointed", "generators"}, rows);
        return ok(r, text, fmt, tower_name(doc));
    });
}

CommandOutput run_level(const LoadedDocument& doc, std::size_t index, std::string_view what, std::size_t degree,
                        OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    const ProAffineTower& t = tower_of(doc);
    if (index == 0 || index > t.depth())
        return failure(CommandStatus::Usage,
                       "level index " + std::to_string(index) + " is outside 1.." + std::to_string(t.depth()), {}, fmt,
                       tower_name(doc));
    if (what != "generators" && what != "hilbert" && what != "inequalities" && what != "ideal")
        return failure(CommandStatus::Usage,
                       "unknown level query '" + std::string(what) +
                           "' (expected generators, hilbert, inequalities or ideal)",
                       {}, fmt, tower_name(doc));
    return guarded(fmt, tower_name(doc), [&] {
        const AffineSemigroup& s = t.level(index);
        Json r = Json::object();
        if (what == "generators") {
            r["generators"] = to_json(s.generators());
            return ok(r, lines(s.generators()), fmt, tower_name(doc));
        }
        if (what == "hilbert") {
            const auto hb = hilbert_basis(s.cone()).elements;
            r["hilbert_basis"] = to_json(hb);
            return ok(r, lines(hb), fmt, tower_name(doc));
        }
        if (what == "inequalities") {
            const auto ordered = display_order(s.cone().inequalities());
            r["inequalities"] = to_json(ordered);
            return ok(r, render_inequalities(ordered) + "\n", fmt, tower_name(doc));
        }
        const ToricLevel v = variety_from_semigroup(s);
        const auto binomials = binomials_up_to_degree(v, degree);
        r["generators"] = to_json(s.generators());
        r["torus_rank"] = v.torus_rank;
        r["ideal_lattice"] = to_json(v.ideal_lattice);
        r["degree"] = degree;
        r["binomials"] = Json::array();
        std::string text = "generators: " + legend(s.generators()) + "\n";
        text += "torus rank: " + std::to_string(v.torus_rank) + "\n";
        text += "ideal lattice: " + (v.ideal_lattice.empty() ? std::string("none") : join_vectors(v.ideal_lattice)) +
                "\n";
        text += "binomials up to degree " + std::to_string(degree) + ":" + (binomials.empty() ? " none" : "") + "\n";
        for (const auto& b : binomials) {
            Json j = Json::object();
            j["lhs"] = to_json(b.lhs);
            j["rhs"] = to_json(b.rhs);
            r["binomials"].push_back(j);
            text += "  " + monomial_text(b.lhs) + " = " + monomial_text(b.rhs) + "\n";
        }
        return ok(r, text, fmt, tower_name(doc));
    });
}

CommandOutput run_embed(const LoadedDocument& doc, std::size_t depth, OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    return guarded(fmt, tower_name(doc), [&] {
        const ProAffineTower& base = tower_of(doc);
        const std::size_t d = depth == 0 ? base.depth() : depth;
        const ProAffineTower t = d == base.depth() ? base : tower_extend(base, d);
        const CanonicalEmbedding e = canonical_embedding(t, d);

        Json r = Json::object();
        r["depth"] = d;
        r["ranks"] = e.ranks;
        r["finite_type"] = e.finite_type;
        r["classification"] = e.finite_type ? "finite-type" : "growing";
        r["stable_from"] = e.stable_from;
        r["levels"] = Json::array();
        r["maps"] = Json::array();
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 1; i <= d; ++i) {
            Json l = Json::object();
            l["index"] = i;
            l["rank"] = e.ranks[i - 1];
            l["basis"] = to_json(e.lattice_bases[i - 1]);
            l["change"] = to_json(e.changes[i - 1]);
            r["levels"].push_back(l);
            rows.push_back({std::to_string(i), std::to_string(e.ranks[i - 1]), e.lattice_bases[i - 1].to_string(),
                            e.changes[i - 1].to_string()});
        }
        std::string text = "canonical embedding of " + doc.load.document->name + " to depth " + std::to_string(d) +
                           "\n";
        text += render_table({"level", "rank", "basis", "change"}, rows);
        std::vector<std::vector<std::string>> map_rows;
        for (std::size_t i = 1; i < d; ++i) {
            const IntMatrix canonical = e.canonical_map(i);
            const bool projection = is_projection(canonical);
            Json m = Json::object();
            m["from"] = i + 1;
            m["to"] = i;
            m["lattice_map"] = to_json(e.lattice_maps[i - 1]);
            m["canonical"] = to_json(canonical);
            m["is_projection"] = projection;
            r["maps"].push_back(m);
            map_rows.push_back({std::to_string(i + 1) + " -> " + std::to_string(i), canonical.to_string(),
                                projection ? "yes" : "no"});
        }
        if (!map_rows.empty())
            text += render_table({"connect", "canonical map", "projection"}, map_rows);
        std::string ranks;
        for (auto rk : e.ranks)
            ranks += (ranks.empty() ? "" : " ") + std::to_string(rk);
        text += "ranks: " + ranks + " (" + (e.finite_type ? "finite-type" : "growing") + ")\n";
        return ok(r, text, fmt, tower_name(doc));
    });
}

CommandOutput run_dualize(const LoadedDocument& doc, OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    return guarded(fmt, tower_name(doc), [&] {
        const ProAffineTower& t = tower_of(doc);
        const ToricTower vt = dualize_tower(t);
        const ProAffineTower back = semigroup_of(vt);
        const bool identity_law =
            same_morphism(dualize_hom(identity_tower_hom(t)), identity_toric_morphism(vt));

        Json r = Json::object();
        r["levels"] = Json::array();
        r["embeddings"] = Json::array();
        bool all_equal = true;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 1; i <= t.depth(); ++i) {
            const ToricLevel& v = vt.levels[i - 1];
            const bool equal = semantically_equal(back.level(i), t.level(i));
            all_equal = all_equal && equal;
            Json l = Json::object();
            l["index"] = i;
            l["coordinates"] = v.semigroup.size();
            l["torus_rank"] = v.torus_rank;
            l["ideal_lattice"] = to_json(v.ideal_lattice);
            l["round_trip"] = equal;
            r["levels"].push_back(l);
            rows.push_back({std::to_string(i), std::to_string(v.semigroup.size()), std::to_string(v.torus_rank),
                            v.ideal_lattice.empty() ? "none" : join_vectors(v.ideal_lattice), equal ? "yes" : "no"});
        }
        std::vector<std::vector<std::string>> emb_rows;
        for (std::size_t i = 1; i < t.depth(); ++i) {
            Json m = Json::object();
            m["from"] = i;
            m["to"] = i + 1;
            m["exponents"] = to_json(vt.inclusions[i - 1]);
            r["embeddings"].push_back(m);
            emb_rows.push_back({std::to_string(i) + " -> " + std::to_string(i + 1), vt.inclusions[i - 1].to_string()});
        }
        r["round_trip"] = all_equal;
        r["identity_law"] = identity_law;

        std::string text = "toric tower of " + doc.load.document->name + "\n";
        text += render_table({"level", "coordinates", "torus rank", "relations", "round trip"}, rows);
        if (!emb_rows.empty())
            text += render_table({"embedding", "exponents"}, emb_rows);
        text += std::string("round trip: ") + (all_equal ? "equal" : "DIFFERENT") + "\n";
        text += std::string("identity law: ") + (identity_law ? "holds" : "FAILS") + "\n";
        CommandOutput out = ok(r, text, fmt, tower_name(doc));
        if (!all_equal || !identity_law) {
            out.status = CommandStatus::Validation;
            out.err = "protoric: error: duality round trip failed\n";
        }
        return out;
    });
}

CommandOutput run_point(const LoadedDocument& doc, std::size_t level, std::string_view values,
                        std::optional<std::string_view> eval, OutputFormat fmt)
{
    if (!doc.load.tower)
        return load_failure(doc, fmt);
    const ProAffineTower& t = tower_of(doc);
    if (level == 0 || level > t.depth())
        return failure(CommandStatus::Usage,
                       "level index " + std::to_string(level) + " is outside 1.." + std::to_string(t.depth()), {}, fmt,
                       tower_name(doc));
    return guarded(fmt, tower_name(doc), [&] {
        const std::vector<Rational> x = parse_rational_tuple(values);
        std::optional<IntVec> at;
        if (eval)
            at = parse_int_tuple(*eval);
        const ToricLevel v = variety_from_semigroup(t.level(level));
        const Point p = point_from_values(v, level, x);

        Json r = Json::object();
        r["level"] = level;
        r["generators"] = to_json(v.semigroup.generators());
        r["values"] = Json::array();
        for (const auto& q : p.values)
            r["values"].push_back(to_json(q));
        r["consistent"] = true;
        std::vector<std::vector<std::string>> rows;
        for (std::size_t j = 0; j < p.values.size(); ++j)
            rows.push_back({"g" + std::to_string(j + 1), v.semigroup.generators()[j].to_string(), p.values[j].get_str()});
        std::string text = "point of level " + std::to_string(level) + ": relation-consistent\n";
        text += render_table({"name", "generator", "value"}, rows);
        if (at) {
            const Rational value = evaluate_point(v, p, *at);
            Json e = Json::object();
            e["at"] = to_json(*at);
            e["value"] = to_json(value);
            r["evaluation"] = e;
            text += "Lambda" + at->to_string() + " = " + value.get_str() + "\n";
        }
        return ok(r, text, fmt, tower_name(doc));
    });
}

CommandOutput run_pair(std::string_view omega, std::string_view finsupp, OutputFormat fmt)
{
    return guarded(fmt, std::nullopt, [&] {
        const OmegaPrefix m(parse_int_tuple(omega));
        const FinSuppVec p = FinSuppVec::from_dense(parse_int_tuple(finsupp));
        const Integer value = specker_pair(m, p);
        Json r = Json::object();
        r["omega"] = to_json(m.prefix());
        r["finsupp"] = Json::object();
        for (const auto& [i, x] : p.support())
            r["finsupp"][std::to_string(i)] = to_json(x);
        r["pairing"] = to_json(value);
        return ok(r, "<" + m.prefix().to_string() + ", " + parse_int_tuple(finsupp).to_string() + "> = " +
                         value.get_str() + "\n",
                  fmt, std::nullopt);
    });
}

CommandOutput run_demo(std::string_view name, OutputFormat fmt)
{
    if (name == "cauchy-algebra") {
        return guarded(fmt, std::nullopt, [&] {
            constexpr std::size_t kDepth = 8;
            const ProAffineTower t = family_tower(TowerFamily::AffineSpace, kDepth);
            std::vector<AlgebraElement> f;
            for (std::size_t i = 1; i <= kDepth; ++i)
                f.push_back(exref_sequence(t, i));

            Json r = Json::object();
            r["depth"] = kDepth;
            r["cells"] = Json::array();
            bool all_zero = true;
            std::vector<std::vector<std::string>> rows;
            for (std::size_t l = 1; l <= kDepth; ++l)
                for (std::size_t i = l + 1; i <= kDepth; ++i)
                    for (std::size_t j = i + 1; j <= kDepth; ++j) {
                        const AlgebraElement p = project(t, subtract(f[j - 1], f[i - 1]), l);
                        all_zero = all_zero && p.is_zero();
                        Json c = Json::object();
                        c["l"] = l;
                        c["i"] = i;
                        c["j"] = j;
                        c["projection"] = to_string(p);
                        r["cells"].push_back(c);
                        rows.push_back({std::to_string(l), std::to_string(i), std::to_string(j), to_string(p)});
                    }
            r["all_zero"] = all_zero;
            r["support_sizes"] = Json::array();
            bool supports = true;
            std::string sizes;
            for (std::size_t i = 1; i <= kDepth; ++i) {
                const std::size_t s = f[i - 1].support_size();
                supports = supports && s == i;
                r["support_sizes"].push_back(s);
                sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
            }
            r["support_grows"] = supports;
            std::string text = "f_i in Q[Z_{>=0}^" + std::to_string(kDepth) + "]\n";
            for (std::size_t i = 1; i <= 3; ++i)
                text += "f_" + std::to_string(i) + " = " + to_string(f[i - 1]) + "\n";
            text += render_table({"l", "i", "j", "pi_l(f_j - f_i)"}, rows);
            text += "support sizes: " + sizes + "\n";
            text += std::string("all projections zero: ") + (all_zero ? "yes" : "no") + "\n";
            CommandOutput out = ok(r, text, fmt, std::nullopt);
            if (!all_zero || !supports) {
                out.status = CommandStatus::Validation;
                out.err = "protoric: error: the Cauchy sequence demonstration failed\n";
            }
            return out;
        });
    }
    if (name == "incomplete-subsemigroup") {
        return guarded(fmt, std::nullopt, [&] {
            constexpr std::size_t kDepth = 6;
            constexpr std::size_t kTerms = 10;
            const ProAffineTower t = family_tower(TowerFamily::AffineSpace, kDepth);
            std::vector<TowerElement> seq;
            for (std::size_t i = 1; i <= kTerms; ++i) {
                IntVec a = IntVec::unit(kTerms, 0) + IntVec::unit(kTerms, i - 1);
                seq.push_back(element_from_prefix(a, kDepth));
            }
            const CauchyReport report = cauchy_check(seq, kDepth);
            const SubsemigroupRestriction restriction{"exclude-points", {IntVec::unit(kDepth, 0)}};
            const bool member = report.limit && sub_tower_limit_membership(t, restriction, *report.limit);
            const bool limit_is_e1 = report.limit && report.limit->at(kDepth) == IntVec::unit(kDepth, 0);

            Json r = Json::object();
            r["depth"] = kDepth;
            r["terms"] = kTerms;
            r["excluded"] = to_json(restriction.excluded);
            r["is_cauchy"] = report.is_cauchy_prefix;
            r["stabilization"] = Json::array();
            std::vector<std::vector<std::string>> rows;
            for (std::size_t k = 1; k <= kDepth; ++k) {
                const auto& n = report.stabilization[k - 1];
                r["stabilization"].push_back(n ? Json(*n) : Json(nullptr));
                rows.push_back({std::to_string(k), n ? std::to_string(*n) : "-",
                                report.limit ? report.limit->at(k).to_string() : "-"});
            }
            r["limit"] = report.limit ? to_json(report.limit->at(kDepth)) : Json(nullptr);
            r["limit_in_subsemigroup"] = member;
            r["incompleteness_witnessed"] = report.is_cauchy_prefix && limit_is_e1 && !member;

            std::string text = "a_i = e_1 + e_i (i = 1.." + std::to_string(kTerms) +
                               ", index i-1) in Z_{>=0}^omega without e_1, window depth " +
                               std::to_string(kDepth) + "\n";
            text += render_table({"level", "stable from index", "limit component"}, rows);
            text += std::string("Cauchy: ") + (report.is_cauchy_prefix ? "yes" : "no") + "\n";
            text += std::string("limit in subsemigroup: ") + (member ? "yes" : "no") + "\n";
            CommandOutput out = ok(r, text, fmt, std::nullopt);
            if (!(report.is_cauchy_prefix && limit_is_e1 && !member)) {
                out.status = CommandStatus::Validation;
                out.err = "protoric: error: the incompleteness demonstration failed\n";
            }
            return out;
        });
    }
    return failure(CommandStatus::Usage,
                   "unknown demo '" + std::string(name) + "' (expected cauchy-algebra or incomplete-subsemigroup)", {},
                   fmt, std::nullopt);
}

IntVec parse_int_tuple(std::string_view text)
{
    TupleReader r(text);
    std::vector<Integer> out;
    for (const auto& item : r.items()) {
        if (!is_integer_text(item))
            r.fail("'" + item + "' is not an integer");
        out.push_back(integer_from(item));
    }
    return IntVec(std::move(out));
}

std::vector<Rational> parse_rational_tuple(std::string_view text)
{
    TupleReader r(text);
    std::vector<Rational> out;
    for (const auto& item : r.items()) {
        const auto slash = item.find('/');
        const std::string num = item.substr(0, slash);
        if (!is_integer_text(num))
            r.fail("'" + item + "' is not a rational number");
        Rational q(integer_from(num));
        if (slash != std::string::npos) {
            const std::string den = item.substr(slash + 1);
            if (!is_integer_text(den) || integer_from(den) <= 0)
                r.fail("'" + item + "' is not a rational number");
            q /= Rational(integer_from(den));
        }
        out.push_back(q);
    }
    return out;
}

PointSpec parse_point_spec(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string word;
    auto fail = [&](const std::string& what) -> void {
        throw Error(ErrorKind::Parse, what + " in '" + std::string(text) + "'", std::string(text));
    };
    if (!(in >> word) || word != "point")
        fail("expected 'point'");
    PointSpec spec;
    bool have_level = false;
    bool have_values = false;
    std::string rest;
    std::getline(in, rest);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos])))
            ++pos;
        if (pos >= rest.size())
            break;
        const auto eq = rest.find('=', pos);
        if (eq == std::string::npos)
            fail("expected key=value");
        const std::string key = rest.substr(pos, eq - pos);
        pos = eq + 1;
        if (key == "level") {
            const std::size_t start = pos;
            while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos])))
                ++pos;
            const std::string v = rest.substr(start, pos - start);
            if (!is_integer_text(v) || integer_from(v) <= 0 || !integer_from(v).fits_ulong_p())
                fail("expected a positive level");
            spec.level = integer_from(v).get_ui();
            have_level = true;
        } else if (key == "values") {
            const auto close = rest.find(')', pos);
            if (close == std::string::npos)
                fail("expected ')'");
            spec.values = parse_rational_tuple(std::string_view(rest).substr(pos, close + 1 - pos));
            pos = close + 1;
            have_values = true;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!have_level || !have_values)
        fail("expected level= and values=");
    return spec;
}

} // namespace protoric::frontend
