#include "protoric/frontend/elaborate.hpp"

#include "protoric/error.hpp"

#include <algorithm>
#include <map>

namespace protoric::frontend {

EquationElaboration elaborate_equation(const Monomial& lhs, const Monomial& rhs)
{
    EquationElaboration e;
    std::map<std::string, std::size_t> position;
    std::vector<Integer> difference;
    auto collect = [&](const Monomial& m, int sign) {
        for (const auto& f : m.factors) {
            auto [it, fresh] = position.try_emplace(f.variable, e.variables.size());
            if (fresh) {
                e.variables.push_back(f.variable);
                difference.emplace_back(0);
            }
            difference[it->second] += sign * f.exponent;
        }
    };
    collect(lhs, 1);
    collect(rhs, -1);
    e.exponent_difference = IntVec(difference);

    const std::size_t n = e.variables.size();
    const SmithDecomposition snf = smith_normal_form(IntMatrix::from_columns(n, std::vector<IntVec>{e.exponent_difference}));
    const std::size_t r = snf.rank();
    if (r == 1 && snf.D(0, 0) != 1)
        throw Error(ErrorKind::Torsion,
                    "not a lattice quotient: torsion detected, the exponent difference " +
                        e.exponent_difference.to_string() + " has content " + Integer(abs(snf.D(0, 0))).get_str(),
                    e.exponent_difference.to_string());
    e.cokernel_map = snf.U.row_block(r, n);
    e.images = e.cokernel_map.columns();
    return e;
}

bool LoadResult::syntax_failed() const
{
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.kind == DiagnosticKind::Syntax; });
}

namespace {

class Elaborator {
public:
    explicit Elaborator(const TowerDocument& doc) : doc_(doc) {}

    ElaborationResult run()
    {
        if (doc_.families.size() > 1)
            error(doc_.families[1].span, "duplicate family declaration");
        if (!doc_.families.empty() && (!doc_.levels.empty() || !doc_.connects.empty()))
            error(doc_.families.front().span,
                  "a family declaration cannot be combined with explicit levels or connects");
        if (doc_.families.empty() && doc_.levels.empty())
            error(doc_.name_span, "tower '" + doc_.name + "' declares no levels");
        if (!out_.diagnostics.empty())
            return std::move(out_);

        if (!doc_.families.empty()) {
            const FamilyDecl& f = doc_.families.front();
            try {
                out_.tower = ElaboratedTower{doc_, family_tower(f.family, f.depth), {}};
            } catch (const Error& e) {
                error(f.depth_span, e.what(), e.witness());
            }
            return std::move(out_);
        }

        index_levels();
        if (!out_.diagnostics.empty())
            return std::move(out_);
        build_levels();
        build_connects();
        if (!out_.diagnostics.empty())
            return std::move(out_);

        std::vector<AffineSemigroup> levels;
        for (auto& s : semigroups_)
            levels.push_back(*s);
        std::vector<SemigroupHom> connects;
        for (auto& h : homs_)
            connects.push_back(*h);
        try {
            out_.tower = ElaboratedTower{doc_, tower_build(std::move(levels), std::move(connects)),
                                         std::move(equations_)};
        } catch (const Error& e) {
            error(doc_.name_span, e.what(), e.witness());
        }
        return std::move(out_);
    }

private:
    void error(const Span& span, const std::string& message, const std::string& witness = {})
    {
        Diagnostic d{Severity::Error, DiagnosticKind::Semantic, span, message, std::nullopt};
        if (!witness.empty())
            d.witness = witness;
        out_.diagnostics.push_back(std::move(d));
    }

    void index_levels()
    {
        const std::size_t count = doc_.levels.size();
        by_index_.assign(count, nullptr);
        for (const auto& l : doc_.levels) {
            if (l.index > count)
                error(l.span, "level indices must be contiguous from 1: level " + std::to_string(l.index) +
                                  " declared among " + std::to_string(count) + " levels");
            else if (by_index_[l.index - 1])
                error(l.span, "level " + std::to_string(l.index) + " is declared twice");
            else
                by_index_[l.index - 1] = &l;
        }
    }

    std::optional<std::size_t> common_dimension(const LevelDecl& l)
    {
        const std::size_t dim = l.spec.vectors.front().dim();
        for (std::size_t i = 0; i < l.spec.vectors.size(); ++i)
            if (l.spec.vectors[i].dim() != dim) {
                error(l.spec.vector_spans[i], "vector " + l.spec.vectors[i].to_string() + " has dimension " +
                                                  std::to_string(l.spec.vectors[i].dim()) + ", expected " +
                                                  std::to_string(dim));
                return std::nullopt;
            }
        return dim;
    }

    bool ambient_matches(const LevelDecl& l, std::size_t dim)
    {
        if (l.ambient && *l.ambient != dim) {
            error(l.ambient_span, "level " + std::to_string(l.index) + " declares ambient " +
                                      std::to_string(*l.ambient) + " but its data lives in Z^" + std::to_string(dim));
            return false;
        }
        return true;
    }

    void build_levels()
    {
        const std::size_t count = by_index_.size();
        semigroups_.assign(count, std::nullopt);
        equations_.assign(doc_.levels.size(), std::nullopt);
        for (std::size_t k = 0; k < doc_.levels.size(); ++k) {
            const LevelDecl& l = doc_.levels[k];
            try {
                switch (l.spec.kind) {
                case SpecKind::Generators: {
                    auto dim = common_dimension(l);
                    if (dim && ambient_matches(l, *dim))
                        semigroups_[l.index - 1] = AffineSemigroup(*dim, l.spec.vectors);
                    break;
                }
                case SpecKind::Rays: {
                    auto dim = common_dimension(l);
                    if (!dim || !ambient_matches(l, *dim))
                        break;
                    const Cone c = cone_from_rays(*dim, l.spec.vectors);
                    if (!c.is_pointed()) {
                        error(l.spec.span, "rays span a cone containing a line, so it has no Hilbert basis",
                              c.lineality().front().to_string());
                        break;
                    }
                    semigroups_[l.index - 1] = AffineSemigroup(*dim, hilbert_basis(c).elements);
                    break;
                }
                case SpecKind::Equation: {
                    EquationElaboration e = elaborate_equation(l.spec.lhs, l.spec.rhs);
                    const std::size_t dim = e.cokernel_map.rows();
                    if (ambient_matches(l, dim))
                        semigroups_[l.index - 1] = AffineSemigroup(dim, e.images);
                    equations_[k] = std::move(e);
                    break;
                }
                }
            } catch (const Error& e) {
                error(l.spec.span, e.what(), e.witness());
            }
        }
    }

    void build_connects()
    {
        const std::size_t count = by_index_.size();
        homs_.assign(count > 0 ? count - 1 : 0, std::nullopt);
        std::vector<bool> seen(homs_.size(), false);
        for (const auto& c : doc_.connects) {
            const std::string label = std::to_string(c.from) + " -> " + std::to_string(c.to);
            if (c.from != c.to + 1) {
                error(c.span, "connect " + label + " must join consecutive levels i+1 -> i");
                continue;
            }
            if (c.from > count) {
                error(c.span, "connect " + label + " references undeclared level " + std::to_string(c.from));
                continue;
            }
            if (seen[c.to - 1]) {
                error(c.span, "connect " + label + " is declared twice");
                continue;
            }
            seen[c.to - 1] = true;
            const std::size_t cols = c.rows.front().size();
            if (std::any_of(c.rows.begin(), c.rows.end(), [&](const auto& r) { return r.size() != cols; })) {
                error(c.matrix_span, "matrix rows of connect " + label + " have different lengths");
                continue;
            }
            const auto& target = semigroups_[c.to - 1];
            const auto& source = semigroups_[c.from - 1];
            if (!target || !source)
                continue;
            if (c.rows.size() != target->ambient() || cols != source->ambient()) {
                error(c.matrix_span, "matrix of connect " + label + " is " + std::to_string(c.rows.size()) + "x" +
                                         std::to_string(cols) + ", expected " + std::to_string(target->ambient()) +
                                         "x" + std::to_string(source->ambient()));
                continue;
            }
            IntMatrix m(c.rows.size(), cols);
            for (std::size_t r = 0; r < c.rows.size(); ++r)
                for (std::size_t q = 0; q < cols; ++q)
                    m(r, q) = c.rows[r][q];
            try {
                SemigroupHom h = hom_build(*source, *target, std::move(m));
                tower_build({*target, *source}, {h});
                homs_[c.to - 1] = std::move(h);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::NotSurjective)
                    error(c.span,
                          "connect " + label + " is not surjective: generator " + e.witness() + " of level " +
                              std::to_string(c.to) + " has no preimage",
                          e.witness());
                else if (e.kind() == ErrorKind::NotContained)
                    error(c.span,
                          "connect " + label + " sends generator " + e.witness() + " of level " +
                              std::to_string(c.from) + " outside level " + std::to_string(c.to),
                          e.witness());
                else
                    error(c.span, e.what(), e.witness());
            }
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                error(by_index_[i + 1]->span,
                      "no connect " + std::to_string(i + 2) + " -> " + std::to_string(i + 1) + " is declared");
    }

    const TowerDocument& doc_;
    ElaborationResult out_;
    std::vector<const LevelDecl*> by_index_;
    std::vector<std::optional<AffineSemigroup>> semigroups_;
    std::vector<std::optional<SemigroupHom>> homs_;
    std::vector<std::optional<EquationElaboration>> equations_;
};

} // namespace

ElaborationResult elaborate(const TowerDocument& doc)
{
    return Elaborator(doc).run();
}

LoadResult load_tower(std::string_view text)
{
    LoadResult out;
    ParseResult parsed = parse_tower(text);
    out.diagnostics = std::move(parsed.diagnostics);
    if (!parsed.document)
        return out;
    out.document = std::move(parsed.document);
    ElaborationResult e = elaborate(*out.document);
    out.tower = std::move(e.tower);
    for (auto& d : e.diagnostics)
        out.diagnostics.push_back(std::move(d));
    return out;
}

} // namespace protoric::frontend
