#include "protoric/semigroups.hpp"

#include "protoric/double_description.hpp"
#include "protoric/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace protoric {

IntVec Factorization::evaluate(const std::vector<IntVec>& generators, std::size_t ambient) const
{
    IntVec sum = IntVec::zero(ambient);
    for (std::size_t j = 0; j < generators.size() && j < multiplicities.size(); ++j)
        if (multiplicities[j] != 0)
            sum += multiplicities[j] * generators[j];
    return sum;
}

// ---------------------------------------------------------------- search

namespace {

// Square nonsingular subsystem of a linearly independent generator suffix.
struct IndependentSolver {
    std::vector<std::size_t> rows;
    IntMatrix full;
    std::vector<std::vector<Rational>> inverse; // inverse[i][j]

    std::optional<std::vector<Integer>> solve(const IntVec& v) const
    {
        const std::size_t t = rows.size();
        std::vector<Integer> out(t);
        for (std::size_t i = 0; i < t; ++i) {
            Rational x = 0;
            for (std::size_t j = 0; j < t; ++j)
                x += inverse[i][j] * v[rows[j]];
            if (x.get_den() != 1 || x < 0)
                return std::nullopt;
            out[i] = x.get_num();
        }
        if (full * IntVec(out) != v)
            return std::nullopt;
        return out;
    }
};

std::optional<IndependentSolver> make_solver(std::size_t ambient, const std::vector<IntVec>& gens)
{
    if (gens.empty())
        return std::nullopt;
    IntMatrix full = IntMatrix::from_columns(ambient, gens);
    if (rank(full) != gens.size())
        return std::nullopt;
    IndependentSolver s;
    std::vector<IntVec> picked;
    for (std::size_t r = 0; r < ambient && picked.size() < gens.size(); ++r) {
        picked.push_back(full.row(r));
        if (rank(IntMatrix::from_rows(gens.size(), picked)) == picked.size())
            s.rows.push_back(r);
        else
            picked.pop_back();
    }
    const IntMatrix square = IntMatrix::from_rows(gens.size(), picked);
    const std::size_t t = gens.size();
    s.inverse.assign(t, std::vector<Rational>(t));
    for (std::size_t j = 0; j < t; ++j) {
        auto col = solve_rational(square, IntVec::unit(t, j));
        for (std::size_t i = 0; i < t; ++i)
            s.inverse[i][j] = col[i];
    }
    s.full = std::move(full);
    return s;
}

} // namespace

struct FactorizationSearch::Impl {
    std::size_t ambient;
    std::vector<IntVec> gens;
    Cone cone;
    MembershipRegime regime = MembershipRegime::Unsupported;
    std::optional<IntVec> grading;
    std::vector<Integer> grades;
    SmithDecomposition lattice;
    // Graded regime, one entry per suffix start.
    std::vector<Cone> suffix_cones;
    std::vector<std::optional<IndependentSolver>> suffix_solvers;
    // Group regime: strictly positive integer relation among generators.
    IntVec positive_relation;

    bool in_lattice(const IntVec& v) const
    {
        IntVec c = lattice.U * v;
        const std::size_t r = lattice.rank();
        for (std::size_t i = 0; i < c.dim(); ++i) {
            if (i < r) {
                if (!mpz_divisible_p(c[i].get_mpz_t(), lattice.D(i, i).get_mpz_t()))
                    return false;
            } else if (c[i] != 0) {
                return false;
            }
        }
        return true;
    }

    using Memo = std::set<std::pair<std::size_t, IntVec>>;

    bool search(std::size_t s, const IntVec& rest, std::vector<Integer>& out, Memo& failed) const
    {
        if (rest.is_zero()) {
            std::fill(out.begin() + static_cast<long>(s), out.end(), Integer(0));
            return true;
        }
        if (s == gens.size())
            return false;
        if (!cone_contains(suffix_cones[s], rest))
            return false;
        if (failed.count({s, rest}))
            return false;
        if (suffix_solvers[s]) {
            if (auto x = suffix_solvers[s]->solve(rest)) {
                std::copy(x->begin(), x->end(), out.begin() + static_cast<long>(s));
                return true;
            }
            failed.insert({s, rest});
            return false;
        }
        const Integer max_mult = floor_div(dot(*grading, rest), grades[s]);
        IntVec r = rest;
        for (Integer c = 0; c <= max_mult; ++c) {
            out[s] = c;
            if (search(s + 1, r, out, failed))
                return true;
            r -= gens[s];
        }
        failed.insert({s, rest});
        return false;
    }
};

FactorizationSearch::FactorizationSearch(std::size_t ambient, std::vector<IntVec> generators)
    : impl_(std::make_unique<Impl>())
{
    Impl& m = *impl_;
    m.ambient = ambient;
    for (const auto& g : generators)
        if (g.dim() != ambient)
            throw Error(ErrorKind::DimensionMismatch,
                        "generator " + g.to_string() + " is not in Z^" + std::to_string(ambient),
                        g.to_string());
    m.gens = std::move(generators);
    m.cone = cone_from_rays(ambient, m.gens);
    m.lattice = smith_normal_form(IntMatrix::from_columns(ambient, m.gens));
    m.grading = interior_dual_vector(m.cone);

    if (m.grading) {
        m.regime = MembershipRegime::Graded;
        for (const auto& g : m.gens)
            m.grades.push_back(dot(*m.grading, g));
        for (std::size_t s = 0; s < m.gens.size(); ++s) {
            std::vector<IntVec> suffix(m.gens.begin() + static_cast<long>(s), m.gens.end());
            m.suffix_cones.push_back(cone_from_rays(ambient, suffix));
            m.suffix_solvers.push_back(make_solver(ambient, suffix));
        }
        return;
    }

    const bool group = std::all_of(m.gens.begin(), m.gens.end(),
                                   [&](const IntVec& g) { return cone_contains(m.cone, -g); });
    if (!group)
        return;
    // Sum of the extreme rays of {z in ker G : z >= 0} is strictly positive.
    const std::vector<IntVec> kernel = kernel_basis(IntMatrix::from_columns(ambient, m.gens));
    const IntMatrix k = IntMatrix::from_columns(m.gens.size(), kernel);
    std::vector<IntVec> rows;
    for (std::size_t j = 0; j < k.rows(); ++j)
        rows.push_back(k.row(j));
    const GeneratorSystem sys = generators_from_inequalities(kernel.size(), rows);
    IntVec z = IntVec::zero(m.gens.size());
    for (const auto& y : sys.rays)
        z += k * y;
    if (std::any_of(z.begin(), z.end(), [](const Integer& x) { return x <= 0; }))
        throw Error(ErrorKind::Internal, "group-regime semigroup without a positive relation");
    m.positive_relation = std::move(z);
    m.regime = MembershipRegime::Group;
}

FactorizationSearch::~FactorizationSearch() = default;
FactorizationSearch::FactorizationSearch(FactorizationSearch&&) noexcept = default;
FactorizationSearch& FactorizationSearch::operator=(FactorizationSearch&&) noexcept = default;

MembershipRegime FactorizationSearch::regime() const noexcept
{
    return impl_->regime;
}

const std::optional<IntVec>& FactorizationSearch::grading() const noexcept
{
    return impl_->grading;
}

const Cone& FactorizationSearch::cone() const noexcept
{
    return impl_->cone;
}

std::optional<Factorization> FactorizationSearch::factor(const IntVec& v) const
{
    const Impl& m = *impl_;
    if (v.dim() != m.ambient)
        throw Error(ErrorKind::DimensionMismatch,
                    "vector " + v.to_string() + " is not in Z^" + std::to_string(m.ambient), v.to_string());
    const std::size_t n = m.gens.size();
    if (v.is_zero())
        return Factorization{std::vector<Integer>(n, Integer(0))};

    switch (m.regime) {
    case MembershipRegime::Unsupported:
        throw Error(ErrorKind::UnsupportedRegime,
                    "membership is only decided for pointed semigroups and groups");
    case MembershipRegime::Group: {
        auto x = solve_integer(IntMatrix::from_columns(m.ambient, m.gens), v);
        if (!x)
            return std::nullopt;
        Integer shift = 0;
        for (std::size_t j = 0; j < n; ++j)
            if ((*x)[j] < 0)
                shift = std::max(shift, Integer(ceil_div(-(*x)[j], m.positive_relation[j])));
        IntVec f = *x + shift * m.positive_relation;
        return Factorization{f.entries()};
    }
    case MembershipRegime::Graded:
        break;
    }

    if (!cone_contains(m.cone, v) || !m.in_lattice(v))
        return std::nullopt;
    std::vector<Integer> out(n, Integer(0));
    Impl::Memo failed;
    if (!m.search(0, v, out, failed))
        return std::nullopt;
    return Factorization{std::move(out)};
}

// ---------------------------------------------------------------- semigroup

struct AffineSemigroup::Cache {
    std::once_flag search_once;
    std::unique_ptr<FactorizationSearch> search;
    std::once_flag basis_once;
    std::vector<IntVec> basis;
};

AffineSemigroup::AffineSemigroup(std::size_t ambient, std::vector<IntVec> generators)
    : ambient_(ambient), cache_(std::make_shared<Cache>())
{
    for (auto& g : generators) {
        if (g.dim() != ambient)
            throw Error(ErrorKind::DimensionMismatch,
                        "generator " + g.to_string() + " is not in Z^" + std::to_string(ambient),
                        g.to_string());
        if (!g.is_zero())
            generators_.push_back(std::move(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

IntMatrix AffineSemigroup::generator_matrix() const
{
    return IntMatrix::from_columns(ambient_, generators_);
}

std::optional<std::size_t> AffineSemigroup::generator_index(const IntVec& g) const
{
    auto it = std::lower_bound(generators_.begin(), generators_.end(), g);
    if (it == generators_.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - generators_.begin());
}

const FactorizationSearch& AffineSemigroup::search() const
{
    std::call_once(cache_->search_once, [&] {
        cache_->search = std::make_unique<FactorizationSearch>(ambient_, generators_);
    });
    return *cache_->search;
}

const Cone& AffineSemigroup::cone() const
{
    return search().cone();
}

const std::vector<IntVec>& AffineSemigroup::lattice_basis() const
{
    std::call_once(cache_->basis_once, [&] {
        if (generators_.empty())
            return;
        const SmithDecomposition snf = smith_normal_form(generator_matrix());
        const std::size_t r = snf.rank();
        const std::vector<Integer> d = snf.diagonal();
        if (r == ambient_ && std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; })) {
            for (std::size_t i = 0; i < ambient_; ++i)
                cache_->basis.push_back(IntVec::unit(ambient_, i));
            return;
        }
        const IntMatrix u_inv = unimodular_inverse(snf.U);
        for (std::size_t i = 0; i < r; ++i)
            cache_->basis.push_back((d[i] * u_inv.column(i)).sign_normalized());
    });
    return cache_->basis;
}

AffineSemigroup semigroup_from_generators(std::size_t k, std::vector<IntVec> generators)
{
    return AffineSemigroup(k, std::move(generators));
}

std::optional<IntVec> positive_grading(const AffineSemigroup& s)
{
    return s.search().grading();
}

std::optional<Factorization> member(const AffineSemigroup& s, const IntVec& v)
{
    return s.search().factor(v);
}

bool contains(const AffineSemigroup& s, const IntVec& v)
{
    return member(s, v).has_value();
}

std::vector<IntVec> group_completion(const AffineSemigroup& s)
{
    return s.lattice_basis();
}

AffineSemigroup saturate(const AffineSemigroup& s)
{
    if (!s.cone().is_pointed())
        throw Error(ErrorKind::NotPointed, "saturation requires a pointed cone",
                    s.cone().lineality().front().to_string());
    if (s.is_trivial())
        return s;
    const auto& basis = s.lattice_basis();
    const IntMatrix b = IntMatrix::from_columns(s.ambient(), basis);
    std::vector<IntVec> coords;
    for (const auto& g : s.generators())
        coords.push_back(*solve_integer(b, g));
    const HilbertBasis hb = hilbert_basis(cone_from_rays(basis.size(), coords));
    std::vector<IntVec> gens;
    for (const auto& h : hb.elements)
        gens.push_back(b * h);
    return AffineSemigroup(s.ambient(), std::move(gens));
}

bool semantically_equal(const AffineSemigroup& a, const AffineSemigroup& b)
{
    if (a.ambient() != b.ambient())
        return false;
    auto inside = [](const AffineSemigroup& x, const AffineSemigroup& y) {
        return std::all_of(x.generators().begin(), x.generators().end(),
                           [&](const IntVec& g) { return contains(y, g); });
    };
    return inside(a, b) && inside(b, a);
}

// ---------------------------------------------------------------- homs

SemigroupHom hom_build(AffineSemigroup source, AffineSemigroup target, IntMatrix matrix)
{
    if (matrix.rows() != target.ambient() || matrix.cols() != source.ambient())
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix of shape " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                        " cannot map Z^" + std::to_string(source.ambient()) + " to Z^" +
                        std::to_string(target.ambient()));
    for (const auto& g : source.generators()) {
        const IntVec image = matrix * g;
        if (!contains(target, image))
            throw Error(ErrorKind::NotContained,
                        "image " + image.to_string() + " of generator " + g.to_string() +
                            " is not in the target semigroup",
                        g.to_string());
    }
    return SemigroupHom{std::move(source), std::move(target), std::move(matrix)};
}

SemigroupHom compose(const SemigroupHom& outer, const SemigroupHom& inner)
{
    if (!(inner.target == outer.source))
        throw Error(ErrorKind::IncompatibleHom, "composed homomorphisms do not share an endpoint");
    return SemigroupHom{inner.source, outer.target, outer.matrix * inner.matrix};
}

SemigroupHom identity_hom(const AffineSemigroup& s)
{
    return SemigroupHom{s, s, IntMatrix::identity(s.ambient())};
}

bool congruence_holds(const KernelCongruence& r, const IntVec& m, const IntVec& m2)
{
    for (const IntVec* x : {&m, &m2})
        if (!contains(r.hom.source, *x))
            throw Error(ErrorKind::NotMember, x->to_string() + " is not in the source semigroup",
                        x->to_string());
    return r.hom(m) == r.hom(m2);
}

} // namespace protoric
