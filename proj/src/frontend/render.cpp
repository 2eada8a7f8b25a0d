#include "protoric/frontend/render.hpp"

#include <algorithm>
#include <set>

namespace protoric::frontend {

Json to_json(const Integer& x)
{
    if (mpz_fits_slong_p(x.get_mpz_t()))
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Json to_json(const Rational& value)
{
    Rational x = value;
    x.canonicalize();
    if (x.get_den() == 1)
        return to_json(Integer(x.get_num()));
    return Json(x.get_str());
}

Json to_json(const IntVec& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Json to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const std::vector<IntVec>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(to_json(v));
    return out;
}

Json to_json(const Diagnostic& d)
{
    Json j = Json::object();
    j["severity"] = d.severity == Severity::Error ? "error" : "warning";
    j["kind"] = d.kind == DiagnosticKind::Syntax ? "syntax" : "semantic";
    j["line"] = d.span.line;
    j["column"] = d.span.column;
    j["length"] = d.span.length;
    j["message"] = d.message;
    if (d.witness)
        j["witness"] = *d.witness;
    return j;
}

std::string render_envelope(const Json& result, const std::vector<Diagnostic>& diagnostics,
                            const std::optional<std::string>& tower)
{
    Json j = Json::object();
    j["diagnostics"] = Json::array();
    for (const auto& d : diagnostics)
        j["diagnostics"].push_back(to_json(d));
    j["result"] = result.is_null() ? Json::object() : result;
    j["tower"] = tower ? Json(*tower) : Json(nullptr);
    return j.dump() + "\n";
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    };
    measure(header);
    for (const auto& r : rows)
        measure(r);
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
            s += row[c];
            if (c + 1 < row.size())
                s += std::string(width[c] - row[c].size() + 2, ' ');
        }
        return s + "\n";
    };
    std::string out = line(header);
    for (const auto& r : rows)
        out += line(r);
    return out;
}

std::vector<IntVec> display_order(std::vector<IntVec> inequalities)
{
    auto support = [](const IntVec& a) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a[i] != 0)
                s.push_back(i);
        return s;
    };
    std::sort(inequalities.begin(), inequalities.end(), [&](const IntVec& x, const IntVec& y) {
        const auto sx = support(x);
        const auto sy = support(y);
        if (sx.size() != sy.size())
            return sx.size() < sy.size();
        if (sx != sy)
            return sx < sy;
        return y < x;
    });
    return inequalities;
}

std::string render_linear_form(const IntVec& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Integer& c = a[i];
        if (c == 0)
            continue;
        const std::string var = "m" + std::to_string(i + 1);
        const Integer mag = abs(c);
        const std::string term = mag == 1 ? var : mag.get_str() + "*" + var;
        if (s.empty())
            s = c < 0 ? "-" + term : term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

std::string render_inequalities(const std::vector<IntVec>& inequalities)
{
    const std::set<IntVec> present(inequalities.begin(), inequalities.end());
    std::set<IntVec> done;
    std::string out;
    for (const auto& a : display_order(inequalities)) {
        if (done.count(a))
            continue;
        const IntVec neg = -a;
        std::string clause;
        if (present.count(neg)) {
            done.insert(neg);
            clause = render_linear_form(a.sign_normalized()) + " = 0";
        } else {
            clause = render_linear_form(a) + " >= 0";
        }
        done.insert(a);
        if (!out.empty())
            out += "; ";
        out += clause;
    }
    return out;
}

} // namespace protoric::frontend
