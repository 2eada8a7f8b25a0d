#include "protoric/toric.hpp"

#include "protoric/error.hpp"

#include <algorithm>
#include <map>

namespace protoric {

namespace {

constexpr unsigned long kMaxBinomialMonomials = 2000000;

// mpq_class(n, d) is not reduced on construction, and equality assumes
// reduced operands.
void canonicalize(std::vector<Rational>& values)
{
    for (auto& x : values)
        x.canonicalize();
}

Rational power(const Rational& x, const Integer& e)
{
    if (e == 0)
        return 1;
    if (!e.fits_ulong_p())
        throw Error(ErrorKind::BudgetExceeded, "exponent " + e.get_str() + " is too large");
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e.get_ui());
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e.get_ui());
    out.canonicalize();
    return out;
}

std::string values_to_string(const std::vector<Rational>& values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ",";
        s += values[i].get_str();
    }
    return s + ")";
}

void check_count(const ToricLevel& v, const std::vector<Rational>& values)
{
    if (values.size() != v.semigroup.size())
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(values.size()) + " values given for " + std::to_string(v.semigroup.size()) +
                        " generators");
}

// Column c is the factorization in `target` of images[c].
IntMatrix factorization_matrix(const AffineSemigroup& target, const std::vector<IntVec>& images)
{
    IntMatrix e(target.size(), images.size());
    for (std::size_t c = 0; c < images.size(); ++c) {
        const auto f = member(target, images[c]);
        if (!f)
            throw Error(ErrorKind::NotContained, images[c].to_string() + " is not in the target semigroup",
                        images[c].to_string());
        for (std::size_t r = 0; r < target.size(); ++r)
            e(r, c) = f->multiplicities[r];
    }
    return e;
}

// M with M g_c = G_dst E[:, c] for every generator g_c of src.
IntMatrix matrix_from_exponents(const AffineSemigroup& src, const AffineSemigroup& dst, const IntMatrix& e)
{
    if (e.rows() != dst.size() || e.cols() != src.size())
        throw Error(ErrorKind::NonToric, "exponent matrix is " + std::to_string(e.rows()) + "x" +
                                             std::to_string(e.cols()) + ", expected " + std::to_string(dst.size()) +
                                             "x" + std::to_string(src.size()));
    for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c)
            if (e(r, c) < 0)
                throw Error(ErrorKind::NonToric,
                            "negative exponent: the map is only defined on the torus", e.to_string());
    const IntMatrix images = dst.generator_matrix() * e;
    const IntMatrix gt = src.generator_matrix().transpose();
    IntMatrix m(dst.ambient(), src.ambient());
    for (std::size_t r = 0; r < dst.ambient(); ++r) {
        const auto row = solve_integer(gt, images.row(r));
        if (!row)
            throw Error(ErrorKind::NonToric, "exponent data does not come from a lattice homomorphism",
                        e.to_string());
        for (std::size_t c = 0; c < src.ambient(); ++c)
            m(r, c) = (*row)[c];
    }
    return m;
}

std::vector<IntVec> images_of(const SemigroupHom& h)
{
    std::vector<IntVec> out;
    for (const auto& g : h.source.generators())
        out.push_back(h(g));
    return out;
}

bool same_levels(const ToricTower& a, const ToricTower& b)
{
    if (a.depth() != b.depth())
        return false;
    for (std::size_t i = 0; i < a.depth(); ++i)
        if (!(a.levels[i].semigroup == b.levels[i].semigroup))
            return false;
    return true;
}

IntMatrix lattice_map(const ProAffineTower& t, std::size_t i, const IntMatrix& basis_i)
{
    const auto& next = t.level(i + 1).lattice_basis();
    IntMatrix a(basis_i.cols(), next.size());
    for (std::size_t c = 0; c < next.size(); ++c) {
        const auto x = solve_integer(basis_i, t.connect(i)(next[c]));
        if (!x)
            throw Error(ErrorKind::Internal, "connect " + std::to_string(i) + " leaves the group of level " +
                                                 std::to_string(i));
        for (std::size_t r = 0; r < x->dim(); ++r)
            a(r, c) = (*x)[r];
    }
    return a;
}

} // namespace

ToricLevel variety_from_semigroup(const AffineSemigroup& s)
{
    ToricLevel v{s, {}, 0};
    if (s.is_trivial())
        return v;
    const IntMatrix g = s.generator_matrix();
    v.ideal_lattice = kernel_basis(g);
    v.torus_rank = rank(g);
    return v;
}

std::vector<Binomial> binomials_up_to_degree(const ToricLevel& v, std::size_t d)
{
    if (d > kMaxBinomialDegree)
        throw Error(ErrorKind::BudgetExceeded,
                    "binomial degree " + std::to_string(d) + " exceeds " + std::to_string(kMaxBinomialDegree));
    const std::size_t n = v.semigroup.size();
    if (n == 0 || d == 0)
        return {};
    Integer monomials;
    mpz_bin_uiui(monomials.get_mpz_t(), n + d, d);
    if (monomials > kMaxBinomialMonomials)
        throw Error(ErrorKind::BudgetExceeded, "too many monomials of degree <= " + std::to_string(d));

    const auto& gens = v.semigroup.generators();
    std::map<IntVec, std::vector<IntVec>> by_image;
    // All multiplicity vectors with total degree <= d.
    std::vector<Integer> a(n, Integer(0));
    auto visit = [&](auto&& self, std::size_t pos, std::size_t budget, const IntVec& image) -> void {
        if (pos == n) {
            by_image[image].push_back(IntVec(a));
            return;
        }
        IntVec img = image;
        for (std::size_t c = 0; c <= budget; ++c) {
            a[pos] = static_cast<unsigned long>(c);
            self(self, pos + 1, budget - c, img);
            img += gens[pos];
        }
        a[pos] = 0;
    };
    visit(visit, 0, d, IntVec::zero(v.semigroup.ambient()));

    auto disjoint = [&](const IntVec& x, const IntVec& y) {
        for (std::size_t j = 0; j < n; ++j)
            if (x[j] != 0 && y[j] != 0)
                return false;
        return true;
    };
    std::vector<Binomial> candidates;
    for (const auto& [image, group] : by_image)
        for (std::size_t p = 0; p < group.size(); ++p)
            for (std::size_t q = 0; q < group.size(); ++q)
                if (group[q] < group[p] && disjoint(group[p], group[q]))
                    candidates.push_back({group[p], group[q]});

    auto below = [&](const IntVec& x, const IntVec& y) {
        for (std::size_t j = 0; j < n; ++j)
            if (x[j] > y[j])
                return false;
        return true;
    };
    std::vector<Binomial> out;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& o : candidates) {
            if (o == c)
                continue;
            if ((below(o.lhs, c.lhs) && below(o.rhs, c.rhs)) || (below(o.rhs, c.lhs) && below(o.lhs, c.rhs))) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Binomial& x, const Binomial& y) {
        if (!(x.lhs == y.lhs))
            return x.lhs < y.lhs;
        return x.rhs < y.rhs;
    });
    return out;
}

bool relation_consistent(const ToricLevel& v, const std::vector<Rational>& values)
{
    check_count(v, values);
    const auto& gens = v.semigroup.generators();
    std::vector<IntVec> nonzero;
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (values[j] != 0)
            nonzero.push_back(gens[j]);

    // The generators in the smallest face containing the nonzero ones must
    // all be nonzero.
    std::vector<const IntVec*> tight;
    for (const auto& a : v.semigroup.cone().inequalities())
        if (std::all_of(nonzero.begin(), nonzero.end(), [&](const IntVec& g) { return dot(a, g) == 0; }))
            tight.push_back(&a);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (values[j] != 0)
            continue;
        if (std::all_of(tight.begin(), tight.end(), [&](const IntVec* a) { return dot(*a, gens[j]) == 0; }))
            return false;
    }

    if (nonzero.empty())
        return true;
    std::vector<Rational> nonzero_values;
    for (const auto& x : values)
        if (x != 0)
            nonzero_values.push_back(x);
    for (const auto& u : kernel_basis(IntMatrix::from_columns(v.semigroup.ambient(), nonzero))) {
        Rational lhs = 1, rhs = 1;
        for (std::size_t j = 0; j < u.dim(); ++j) {
            if (u[j] > 0)
                lhs *= power(nonzero_values[j], u[j]);
            else if (u[j] < 0)
                rhs *= power(nonzero_values[j], -u[j]);
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

Point point_from_values(const ToricLevel& v, std::size_t level, std::vector<Rational> values)
{
    canonicalize(values);
    if (!relation_consistent(v, values))
        throw Error(ErrorKind::RelationViolated,
                    "values " + values_to_string(values) + " violate the relations of the level",
                    values_to_string(values));
    return Point{level, std::move(values)};
}

TorusElement torus_element_from_values(const ToricLevel& v, std::size_t level, std::vector<Rational> values)
{
    canonicalize(values);
    check_count(v, values);
    for (const auto& x : values)
        if (x == 0)
            throw Error(ErrorKind::RelationViolated, "torus elements have nonzero values",
                        values_to_string(values));
    if (!relation_consistent(v, values))
        throw Error(ErrorKind::RelationViolated,
                    "values " + values_to_string(values) + " violate the relations of the level",
                    values_to_string(values));
    return TorusElement{level, std::move(values)};
}

Rational evaluate_point(const ToricLevel& v, const Point& p, const IntVec& m)
{
    check_count(v, p.values);
    const auto f = member(v.semigroup, m);
    if (!f)
        throw Error(ErrorKind::NotMember, m.to_string() + " is not in the semigroup", m.to_string());
    Rational out = 1;
    for (std::size_t j = 0; j < p.values.size(); ++j)
        if (f->multiplicities[j] != 0)
            out *= power(p.values[j], f->multiplicities[j]);
    return out;
}

Point act(const TorusElement& t, const Point& p)
{
    if (t.level != p.level)
        throw Error(ErrorKind::ContextMismatch, "torus element of level " + std::to_string(t.level) +
                                                    " acting on a point of level " + std::to_string(p.level));
    if (t.values.size() != p.values.size())
        throw Error(ErrorKind::DimensionMismatch, "value counts differ");
    Point out{p.level, p.values};
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] *= t.values[j];
    return out;
}

TorusElement act(const TorusElement& t, const TorusElement& u)
{
    const Point p = act(t, Point{u.level, u.values});
    return TorusElement{p.level, p.values};
}

std::vector<Point> idempotent_points(const ToricLevel& v, std::size_t level)
{
    const std::size_t n = v.semigroup.size();
    if (n > kMaxIdempotentGenerators)
        throw Error(ErrorKind::BudgetExceeded,
                    "idempotent enumeration is limited to " + std::to_string(kMaxIdempotentGenerators) +
                        " generators");
    std::vector<Point> out;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<Rational> values(n);
        for (std::size_t j = 0; j < n; ++j)
            values[j] = ((mask >> (n - 1 - j)) & 1U) ? 1 : 0;
        if (relation_consistent(v, values))
            out.push_back(Point{level, std::move(values)});
    }
    return out;
}

std::vector<Rational> monomial_map(const IntMatrix& exponents, const std::vector<Rational>& x)
{
    if (exponents.rows() != x.size())
        throw Error(ErrorKind::DimensionMismatch, std::to_string(x.size()) + " coordinates for an exponent matrix with " +
                                                      std::to_string(exponents.rows()) + " rows");
    std::vector<Rational> out(exponents.cols(), Rational(1));
    for (std::size_t c = 0; c < exponents.cols(); ++c)
        for (std::size_t g = 0; g < x.size(); ++g) {
            const Integer& e = exponents(g, c);
            if (e > 0) {
                out[c] *= power(x[g], e);
            } else if (e < 0) {
                if (x[g] == 0)
                    throw Error(ErrorKind::NonToric, "negative exponent at a zero coordinate");
                out[c] /= power(x[g], -e);
            }
        }
    return out;
}

// ---------------------------------------------------------------- towers

ToricTower dualize_tower(const ProAffineTower& t)
{
    ToricTower vt;
    for (const auto& s : t.levels())
        vt.levels.push_back(variety_from_semigroup(s));
    for (const auto& phi : t.connects())
        vt.inclusions.push_back(factorization_matrix(phi.target, images_of(phi)));
    return vt;
}

ProAffineTower semigroup_of(const ToricTower& vt)
{
    std::vector<AffineSemigroup> levels;
    for (const auto& v : vt.levels)
        levels.push_back(v.semigroup);
    if (vt.inclusions.size() + 1 != levels.size())
        throw Error(ErrorKind::IncompatibleHom, "toric tower has " + std::to_string(vt.inclusions.size()) +
                                                    " embeddings for " + std::to_string(levels.size()) + " levels");
    std::vector<SemigroupHom> connects;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        IntMatrix m = matrix_from_exponents(levels[i + 1], levels[i], vt.inclusions[i]);
        connects.push_back(hom_build(levels[i + 1], levels[i], std::move(m)));
    }
    return tower_build(std::move(levels), std::move(connects));
}

Point include_point(const ToricTower& vt, std::size_t i, const Point& p)
{
    if (i == 0 || i >= vt.depth())
        throw Error(ErrorKind::OutOfRange, "no embedding out of level " + std::to_string(i));
    return Point{i + 1, monomial_map(vt.inclusions[i - 1], p.values)};
}

ToricMorphism dualize_hom(const TowerHom& beta)
{
    ToricMorphism alpha{dualize_tower(beta.target), dualize_tower(beta.source), {}};
    for (const auto& lm : beta.level_maps)
        alpha.maps.push_back({lm.source_level, factorization_matrix(lm.hom.target, images_of(lm.hom))});
    return alpha;
}

TowerHom hom_of(const ToricMorphism& alpha)
{
    ProAffineTower source = semigroup_of(alpha.codomain);
    ProAffineTower target = semigroup_of(alpha.domain);
    std::vector<LevelMap> maps;
    for (std::size_t i = 1; i <= alpha.maps.size(); ++i) {
        const ToricLevelMorphism& m = alpha.maps[i - 1];
        const AffineSemigroup& src = source.level(m.target_level);
        const AffineSemigroup& dst = target.level(i);
        maps.push_back({m.target_level, hom_build(src, dst, matrix_from_exponents(src, dst, m.exponents))});
    }
    return tower_hom_build(std::move(source), std::move(target), std::move(maps));
}

ToricMorphism identity_toric_morphism(const ToricTower& vt)
{
    ToricMorphism alpha{vt, vt, {}};
    for (std::size_t i = 1; i <= vt.depth(); ++i)
        alpha.maps.push_back({i, IntMatrix::identity(vt.levels[i - 1].semigroup.size())});
    return alpha;
}

ToricMorphism compose(const ToricMorphism& outer, const ToricMorphism& inner)
{
    if (!same_levels(inner.codomain, outer.domain))
        throw Error(ErrorKind::ContextMismatch, "toric morphisms do not compose: codomain and domain differ");
    ToricMorphism out{inner.domain, outer.codomain, {}};
    for (const auto& m : inner.maps) {
        if (m.target_level == 0 || m.target_level > outer.maps.size())
            throw Error(ErrorKind::OutOfRange,
                        "outer morphism is not defined at level " + std::to_string(m.target_level));
        const ToricLevelMorphism& next = outer.maps[m.target_level - 1];
        out.maps.push_back({next.target_level, m.exponents * next.exponents});
    }
    return out;
}

bool same_morphism(const ToricMorphism& a, const ToricMorphism& b)
{
    if (!same_levels(a.domain, b.domain) || !same_levels(a.codomain, b.codomain) || a.maps.size() != b.maps.size())
        return false;
    for (std::size_t i = 0; i < a.maps.size(); ++i) {
        if (a.maps[i].target_level != b.maps[i].target_level)
            return false;
        const IntMatrix g = a.domain.levels.at(i).semigroup.generator_matrix();
        if (!(g * a.maps[i].exponents == g * b.maps[i].exponents))
            return false;
    }
    return true;
}

Point apply(const ToricMorphism& alpha, const Point& p)
{
    if (p.level == 0 || p.level > alpha.maps.size())
        throw Error(ErrorKind::OutOfRange, "morphism is not defined at level " + std::to_string(p.level));
    const ToricLevelMorphism& m = alpha.maps[p.level - 1];
    return Point{m.target_level, monomial_map(m.exponents, p.values)};
}

// ---------------------------------------------------------------- lattices

CharacterLattices characters_and_one_params(const ProAffineTower& t, std::size_t i)
{
    const AffineSemigroup& s = t.level(i);
    CharacterLattices c;
    c.level = i;
    c.character_basis = IntMatrix::from_columns(s.ambient(), s.lattice_basis());
    const std::size_t r = c.character_basis.cols();
    c.one_parameter_basis = IntMatrix::identity(r);
    c.pairing = IntMatrix(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            c.pairing(a, b) = dot(IntVec::unit(r, a), c.one_parameter_basis.column(b));
    if (i < t.depth()) {
        c.restriction = lattice_map(t, i, c.character_basis);
        c.inclusion = c.restriction->transpose();
    }
    return c;
}

IntVec character_coordinates(const CharacterLattices& c, const IntVec& chi)
{
    const auto x = solve_integer(c.character_basis, chi);
    if (!x)
        throw Error(ErrorKind::NotMember, chi.to_string() + " is not a character of level " + std::to_string(c.level),
                    chi.to_string());
    return *x;
}

Integer pair_character(const CharacterLattices& c, const IntVec& chi, const IntVec& lambda)
{
    const IntVec x = character_coordinates(c, chi);
    if (lambda.dim() != x.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "one-parameter subgroup " + lambda.to_string() + " is not in Z^" + std::to_string(x.dim()),
                    lambda.to_string());
    Integer out = 0;
    for (std::size_t a = 0; a < x.dim(); ++a)
        for (std::size_t b = 0; b < lambda.dim(); ++b)
            out += x[a] * c.pairing(a, b) * lambda[b];
    return out;
}

} // namespace protoric
