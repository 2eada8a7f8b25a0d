#include "protoric/towers.hpp"

#include "protoric/error.hpp"

#include <algorithm>

namespace protoric {

std::string_view family_name(TowerFamily f) noexcept
{
    switch (f) {
    case TowerFamily::Torus: return "torus";
    case TowerFamily::AffineSpace: return "affine_space";
    case TowerFamily::DoubleCover: return "double_cover";
    }
    return "";
}

std::optional<TowerFamily> family_from_name(std::string_view name) noexcept
{
    if (name == "torus")
        return TowerFamily::Torus;
    if (name == "affine_space")
        return TowerFamily::AffineSpace;
    if (name == "double_cover")
        return TowerFamily::DoubleCover;
    return std::nullopt;
}

// ---------------------------------------------------------------- tower

const AffineSemigroup& ProAffineTower::level(std::size_t i) const
{
    if (i == 0 || i > levels_.size())
        throw Error(ErrorKind::OutOfRange,
                    "level " + std::to_string(i) + " is outside 1.." + std::to_string(levels_.size()));
    return levels_[i - 1];
}

const SemigroupHom& ProAffineTower::connect(std::size_t i) const
{
    if (i == 0 || i >= levels_.size())
        throw Error(ErrorKind::OutOfRange, "no connecting map " + std::to_string(i + 1) + " -> " +
                                               std::to_string(i));
    return connects_[i - 1];
}

IntMatrix ProAffineTower::composite(std::size_t i, std::size_t j) const
{
    if (i == 0 || i > j || j > levels_.size())
        throw Error(ErrorKind::OutOfRange,
                    "no composite map from level " + std::to_string(j) + " to level " + std::to_string(i));
    IntMatrix m = IntMatrix::identity(levels_[j - 1].ambient());
    for (std::size_t l = j - 1; l >= i; --l)
        m = connects_[l - 1].matrix * m;
    return m;
}

ProAffineTower tower_build(std::vector<AffineSemigroup> levels, std::vector<SemigroupHom> connects,
                           std::optional<TowerFamily> family)
{
    if (levels.empty())
        throw Error(ErrorKind::OutOfRange, "a tower needs at least one level");
    if (connects.size() + 1 != levels.size())
        throw Error(ErrorKind::IncompatibleHom, std::to_string(levels.size()) + " levels need " +
                                                    std::to_string(levels.size() - 1) + " connecting maps, got " +
                                                    std::to_string(connects.size()));
    for (std::size_t i = 0; i < connects.size(); ++i) {
        const std::string label = std::to_string(i + 2) + " -> " + std::to_string(i + 1);
        const SemigroupHom& phi = connects[i];
        if (!(phi.source == levels[i + 1]) || !(phi.target == levels[i]))
            throw Error(ErrorKind::IncompatibleHom, "connect " + label + " does not join the declared levels");
        // Re-validates containment of the image.
        hom_build(phi.source, phi.target, phi.matrix);

        std::vector<IntVec> images;
        for (const auto& g : phi.source.generators())
            images.push_back(phi(g));
        const AffineSemigroup image(phi.target.ambient(), std::move(images));
        for (const auto& g : phi.target.generators())
            if (!contains(image, g))
                throw Error(ErrorKind::NotSurjective,
                            "connect " + label + " is not surjective: generator " + g.to_string() + " of level " +
                                std::to_string(i + 1) + " has no preimage",
                            g.to_string());
    }
    ProAffineTower t;
    t.levels_ = std::move(levels);
    t.connects_ = std::move(connects);
    t.family_ = family;
    return t;
}

AffineSemigroup family_level(TowerFamily f, std::size_t i)
{
    if (i == 0)
        throw Error(ErrorKind::OutOfRange, "family levels start at 1");
    std::vector<IntVec> gens;
    switch (f) {
    case TowerFamily::Torus:
        for (std::size_t j = 0; j < i; ++j) {
            gens.push_back(IntVec::unit(i, j));
            gens.push_back(-IntVec::unit(i, j));
        }
        return AffineSemigroup(i, std::move(gens));
    case TowerFamily::AffineSpace:
        for (std::size_t j = 0; j < i; ++j)
            gens.push_back(IntVec::unit(i, j));
        return AffineSemigroup(i, std::move(gens));
    case TowerFamily::DoubleCover: {
        // Rays (2,-1,...,-1), e_2, ..., e_i; the level is cone ∩ Z^i.
        IntVec first = IntVec::zero(i);
        first[0] = 2;
        for (std::size_t j = 1; j < i; ++j)
            first[j] = -1;
        std::vector<IntVec> rays{first};
        for (std::size_t j = 1; j < i; ++j)
            rays.push_back(IntVec::unit(i, j));
        return AffineSemigroup(i, hilbert_basis(cone_from_rays(i, std::move(rays))).elements);
    }
    }
    throw Error(ErrorKind::Internal, "unknown family");
}

ProAffineTower family_tower(TowerFamily f, std::size_t depth)
{
    if (depth == 0)
        throw Error(ErrorKind::OutOfRange, "tower depth must be at least 1");
    if (depth > kMaxTowerDepth)
        throw Error(ErrorKind::BudgetExceeded,
                    "depth " + std::to_string(depth) + " exceeds the limit " + std::to_string(kMaxTowerDepth));
    std::vector<AffineSemigroup> levels;
    for (std::size_t i = 1; i <= depth; ++i)
        levels.push_back(family_level(f, i));
    std::vector<SemigroupHom> connects;
    for (std::size_t i = 1; i < depth; ++i)
        connects.push_back(hom_build(levels[i], levels[i - 1], coordinate_projection(i, i + 1)));
    return tower_build(std::move(levels), std::move(connects), f);
}

ProAffineTower tower_extend(const ProAffineTower& t, std::size_t depth)
{
    if (depth == 0)
        throw Error(ErrorKind::OutOfRange, "tower depth must be at least 1");
    if (depth <= t.depth()) {
        std::vector<AffineSemigroup> levels(t.levels().begin(), t.levels().begin() + static_cast<long>(depth));
        std::vector<SemigroupHom> connects(t.connects().begin(),
                                           t.connects().begin() + static_cast<long>(depth - 1));
        return tower_build(std::move(levels), std::move(connects), t.family());
    }
    if (!t.family())
        throw Error(ErrorKind::NoFamilyRule, "the tower has no family rule to extend past depth " +
                                                 std::to_string(t.depth()));
    return family_tower(*t.family(), depth);
}

ProAffineTower constant_tower(const AffineSemigroup& s, std::size_t depth)
{
    if (depth == 0)
        throw Error(ErrorKind::OutOfRange, "tower depth must be at least 1");
    std::vector<AffineSemigroup> levels(depth, s);
    std::vector<SemigroupHom> connects(depth - 1, identity_hom(s));
    return tower_build(std::move(levels), std::move(connects));
}

IntVec lift(const ProAffineTower& t, std::size_t i, const IntVec& m)
{
    const SemigroupHom& phi = t.connect(i);
    if (!contains(phi.target, m))
        throw Error(ErrorKind::NotMember, m.to_string() + " is not in level " + std::to_string(i), m.to_string());
    // Search over the nonzero images in source-generator order, so the first
    // factorization found is the lexicographically least multiplicity vector.
    const auto& gens = phi.source.generators();
    std::vector<std::size_t> used;
    std::vector<IntVec> images;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        IntVec img = phi(gens[j]);
        if (img.is_zero())
            continue;
        used.push_back(j);
        images.push_back(std::move(img));
    }
    const FactorizationSearch search(phi.target.ambient(), std::move(images));
    const auto f = search.factor(m);
    if (!f)
        throw Error(ErrorKind::NotSurjective, m.to_string() + " has no preimage", m.to_string());
    IntVec out = IntVec::zero(phi.source.ambient());
    for (std::size_t j = 0; j < used.size(); ++j)
        if (f->multiplicities[j] != 0)
            out += f->multiplicities[j] * gens[used[j]];
    return out;
}

// ---------------------------------------------------------------- elements

TowerElement element_from_prefix(const IntVec& m, std::size_t depth)
{
    TowerElement e;
    for (std::size_t k = 1; k <= depth; ++k)
        e.components.push_back(m.truncated(k));
    return e;
}

ElementCheck element_check(const ProAffineTower& t, const TowerElement& e)
{
    const std::size_t d = e.depth();
    if (d > t.depth())
        return {false, t.depth() + 1,
                "element has " + std::to_string(d) + " components but the tower has depth " +
                    std::to_string(t.depth())};
    for (std::size_t k = 1; k <= d; ++k) {
        const AffineSemigroup& s = t.level(k);
        if (e.at(k).dim() != s.ambient())
            return {false, k, "component " + e.at(k).to_string() + " is not in Z^" + std::to_string(s.ambient())};
        if (!contains(s, e.at(k)))
            return {false, k, "component " + e.at(k).to_string() + " is not in S_" + std::to_string(k)};
        if (k < d) {
            if (e.at(k + 1).dim() != t.level(k + 1).ambient())
                return {false, k + 1,
                        "component " + e.at(k + 1).to_string() + " is not in Z^" +
                            std::to_string(t.level(k + 1).ambient())};
            const IntVec image = t.connect(k)(e.at(k + 1));
            if (!(image == e.at(k)))
                return {false, k,
                        "phi_" + std::to_string(k) + e.at(k + 1).to_string() + " = " + image.to_string() +
                            " differs from " + e.at(k).to_string()};
        }
    }
    return {};
}

bool filtration_related(const ProAffineTower& t, const TowerElement& e, const TowerElement& e2, std::size_t k)
{
    if (k == 0 || e.depth() < k || e2.depth() < k)
        throw Error(ErrorKind::InsufficientDepth,
                    "R_" + std::to_string(k) + " needs both elements to depth " + std::to_string(k));
    for (const TowerElement* x : {&e, &e2}) {
        ElementCheck c = element_check(t, *x);
        if (!c.ok)
            throw Error(ErrorKind::NotMember, c.message);
    }
    return e.at(k) == e2.at(k);
}

CauchyReport cauchy_check(const std::vector<TowerElement>& seq, std::size_t depth)
{
    CauchyReport report;
    report.stabilization.assign(depth, std::nullopt);
    for (const auto& e : seq)
        if (e.depth() < depth)
            throw Error(ErrorKind::InsufficientDepth,
                        "sequence element of depth " + std::to_string(e.depth()) + " checked to depth " +
                            std::to_string(depth));
    if (seq.size() < 2)
        return report;
    TowerElement limit;
    bool all = true;
    for (std::size_t k = 1; k <= depth; ++k) {
        const IntVec& last = seq.back().at(k);
        std::size_t n = seq.size() - 1;
        while (n > 0 && seq[n - 1].at(k) == last)
            --n;
        if (n + 2 <= seq.size()) {
            report.stabilization[k - 1] = n;
            limit.components.push_back(last);
        } else {
            all = false;
        }
    }
    report.is_cauchy_prefix = all;
    if (all)
        report.limit = std::move(limit);
    return report;
}

bool sub_tower_limit_membership(const ProAffineTower& t, const SubsemigroupRestriction& restriction,
                                const TowerElement& limit)
{
    if (restriction.predicate != "exclude-points" && restriction.predicate != "none")
        throw Error(ErrorKind::UnknownPredicate, "unknown subsemigroup predicate '" + restriction.predicate + "'");
    if (!element_check(t, limit).ok)
        return false;
    if (restriction.predicate == "none")
        return true;
    for (const auto& p : restriction.excluded) {
        bool separated = false;
        for (std::size_t k = 1; k <= limit.depth() && !separated; ++k) {
            const IntVec& m = limit.at(k);
            for (std::size_t c = 0; c < m.dim(); ++c)
                if (m[c] != (c < p.dim() ? p[c] : Integer(0))) {
                    separated = true;
                    break;
                }
        }
        if (!separated)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- embedding

IntMatrix CanonicalEmbedding::canonical_map(std::size_t i) const
{
    return changes.at(i - 1) * lattice_maps.at(i - 1) * inverse_changes.at(i);
}

IntVec CanonicalEmbedding::to_canonical(std::size_t i, const IntVec& m) const
{
    auto x = solve_integer(lattice_bases.at(i - 1), m);
    if (!x)
        throw Error(ErrorKind::NotMember, m.to_string() + " is not in the group of level " + std::to_string(i),
                    m.to_string());
    return changes.at(i - 1) * *x;
}

IntVec CanonicalEmbedding::from_canonical(std::size_t i, const IntVec& y) const
{
    return lattice_bases.at(i - 1) * (inverse_changes.at(i - 1) * y);
}

CanonicalEmbedding canonical_embedding(const ProAffineTower& t, std::size_t depth)
{
    if (depth == 0 || depth > t.depth())
        throw Error(ErrorKind::InsufficientDepth,
                    "embedding depth " + std::to_string(depth) + " outside 1.." + std::to_string(t.depth()));
    CanonicalEmbedding e;
    for (std::size_t i = 1; i <= depth; ++i) {
        const auto& basis = t.level(i).lattice_basis();
        e.lattice_bases.push_back(IntMatrix::from_columns(t.level(i).ambient(), basis));
        e.ranks.push_back(basis.size());
    }
    for (std::size_t i = 1; i < depth; ++i) {
        const IntMatrix images = t.connect(i).matrix * e.lattice_bases[i];
        IntMatrix a(e.ranks[i - 1], e.ranks[i]);
        for (std::size_t c = 0; c < images.cols(); ++c) {
            auto x = solve_integer(e.lattice_bases[i - 1], images.column(c));
            if (!x)
                throw Error(ErrorKind::Internal, "connect " + std::to_string(i) + " leaves the group of level " +
                                                     std::to_string(i));
            for (std::size_t r = 0; r < x->dim(); ++r)
                a(r, c) = (*x)[r];
        }
        e.lattice_maps.push_back(std::move(a));
    }

    e.changes.push_back(IntMatrix::identity(e.ranks[0]));
    e.inverse_changes.push_back(IntMatrix::identity(e.ranks[0]));
    for (std::size_t i = 1; i < depth; ++i) {
        const std::size_t r = e.ranks[i - 1];
        const std::size_t r_next = e.ranks[i];
        const IntMatrix a = e.changes[i - 1] * e.lattice_maps[i - 1];
        const SmithDecomposition snf = smith_normal_form(a);
        const auto diag = snf.diagonal();
        if (snf.rank() != r || !std::all_of(diag.begin(), diag.end(), [](const Integer& d) { return d == 1; }))
            throw Error(ErrorKind::Internal,
                        "group map of connect " + std::to_string(i) + " is not surjective");
        IntMatrix block = IntMatrix::identity(r_next);
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y)
                block(x, y) = snf.U(x, y);
        // a * w = [I | 0]
        const IntMatrix w = snf.V * block;
        e.inverse_changes.push_back(w);
        e.changes.push_back(unimodular_inverse(w));
    }

    std::size_t stable = depth;
    while (stable > 1 && e.ranks[stable - 2] == e.ranks[depth - 1])
        --stable;
    e.stable_from = stable;
    e.finite_type = depth >= 2 && e.ranks[depth - 1] == e.ranks[depth - 2];
    return e;
}

AffineSemigroup reexpressed_level(const ProAffineTower& t, const CanonicalEmbedding& e, std::size_t i)
{
    std::vector<IntVec> gens;
    for (const auto& g : t.level(i).generators())
        gens.push_back(e.to_canonical(i, g));
    return AffineSemigroup(e.ranks.at(i - 1), std::move(gens));
}

// ---------------------------------------------------------------- homs

TowerHom tower_hom_build(ProAffineTower source, ProAffineTower target, std::vector<LevelMap> level_maps)
{
    if (level_maps.empty() || level_maps.size() > target.depth())
        throw Error(ErrorKind::OutOfRange, "a tower homomorphism needs level maps for target levels 1.." +
                                               std::to_string(target.depth()));
    for (std::size_t i = 1; i <= level_maps.size(); ++i) {
        LevelMap& lm = level_maps[i - 1];
        const std::size_t j = lm.source_level;
        if (j == 0 || j > source.depth())
            throw Error(ErrorKind::OutOfRange, "level map " + std::to_string(i) + " reads source level " +
                                                   std::to_string(j) + " outside the window");
        if (i > 1 && j < level_maps[i - 2].source_level)
            throw Error(ErrorKind::IncompatibleHom, "leveling function is not monotone at level " + std::to_string(i));
        if (!(lm.hom.source == source.level(j)) || !(lm.hom.target == target.level(i)))
            throw Error(ErrorKind::IncompatibleHom,
                        "level map " + std::to_string(i) + " does not join S_" + std::to_string(j) + " and S'_" +
                            std::to_string(i));
        lm.hom = hom_build(lm.hom.source, lm.hom.target, lm.hom.matrix);
    }
    for (std::size_t i = 1; i < level_maps.size(); ++i) {
        const std::size_t j = level_maps[i - 1].source_level;
        const std::size_t j_next = level_maps[i].source_level;
        const IntMatrix down = source.composite(j, j_next);
        for (const auto& g : source.level(j_next).generators()) {
            const IntVec lhs = target.connect(i)(level_maps[i].hom(g));
            const IntVec rhs = level_maps[i - 1].hom(down * g);
            if (!(lhs == rhs))
                throw Error(ErrorKind::NonCommuting,
                            "square at target level " + std::to_string(i) + " fails on generator " + g.to_string() +
                                ": " + lhs.to_string() + " vs " + rhs.to_string(),
                            g.to_string());
        }
    }
    return TowerHom{std::move(source), std::move(target), std::move(level_maps)};
}

TowerHom identity_tower_hom(const ProAffineTower& t)
{
    std::vector<LevelMap> maps;
    for (std::size_t i = 1; i <= t.depth(); ++i)
        maps.push_back({i, identity_hom(t.level(i))});
    return TowerHom{t, t, std::move(maps)};
}

TowerHom compose(const TowerHom& outer, const TowerHom& inner)
{
    std::vector<LevelMap> maps;
    for (std::size_t i = 1; i <= outer.level_maps.size(); ++i) {
        const std::size_t mid = outer.leveling(i);
        if (mid > inner.level_maps.size())
            throw Error(ErrorKind::OutOfRange, "inner homomorphism is not defined at level " + std::to_string(mid));
        const LevelMap& in = inner.level_maps[mid - 1];
        maps.push_back({in.source_level, compose(outer.level_maps[i - 1].hom, in.hom)});
    }
    return TowerHom{inner.source, outer.target, std::move(maps)};
}

TowerElement apply(const TowerHom& h, const TowerElement& e)
{
    TowerElement out;
    for (std::size_t i = 1; i <= h.level_maps.size(); ++i) {
        const std::size_t j = h.leveling(i);
        if (j > e.depth())
            break;
        out.components.push_back(h.level_maps[i - 1].hom(e.at(j)));
    }
    return out;
}

} // namespace protoric
