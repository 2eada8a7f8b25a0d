#include "protoric/cones.hpp"

#include "protoric/double_description.hpp"
#include "protoric/error.hpp"

#include <algorithm>
#include <set>

namespace protoric {

namespace {

constexpr std::size_t kMaxSimplicialSubsets = 200000;
constexpr std::size_t kMaxParallelepipedPoints = 500000;
constexpr std::size_t kMaxFaceInequalities = 20;

bool satisfies(std::span<const IntVec> inequalities, const IntVec& v)
{
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [&](const IntVec& a) { return dot(a, v) >= 0; });
}

// Calls fn(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::size_t Cone::span_dim() const
{
    if (rays_.empty())
        return 0;
    return rank(IntMatrix::from_columns(dim_, rays_));
}

Cone cone_from_rays(std::size_t dim, std::vector<IntVec> rays)
{
    Cone c;
    c.dim_ = dim;
    for (auto& r : rays) {
        if (r.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch,
                        "ray " + r.to_string() + " is not of dimension " + std::to_string(dim), r.to_string());
        if (!r.is_zero())
            c.rays_.push_back(r.primitive());
    }
    std::sort(c.rays_.begin(), c.rays_.end());
    c.rays_.erase(std::unique(c.rays_.begin(), c.rays_.end()), c.rays_.end());

    GeneratorSystem dual = generators_from_inequalities(dim, c.rays_);
    c.inequalities_ = dual.rays;
    for (const auto& l : dual.lineality) {
        c.inequalities_.push_back(l);
        c.inequalities_.push_back(-l);
    }
    std::sort(c.inequalities_.begin(), c.inequalities_.end());

    GeneratorSystem primal = generators_from_inequalities(dim, c.inequalities_);
    c.extreme_rays_ = std::move(primal.rays);
    c.lineality_ = std::move(primal.lineality);
    return c;
}

Cone dual_cone(const Cone& c)
{
    return cone_from_rays(c.dim(), c.inequalities());
}

bool cone_contains(const Cone& c, const IntVec& v)
{
    if (v.dim() != c.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "vector " + v.to_string() + " is not of dimension " + std::to_string(c.dim()),
                    v.to_string());
    return satisfies(c.inequalities(), v);
}

std::optional<IntVec> interior_dual_vector(const Cone& c)
{
    if (!c.is_pointed())
        return std::nullopt;
    IntVec w = IntVec::zero(c.dim());
    for (const auto& a : c.inequalities())
        w += a;
    return w.primitive();
}

HilbertBasis hilbert_basis(const Cone& c)
{
    if (c.dim() > kHilbertBasisMaxDim)
        throw Error(ErrorKind::BudgetExceeded,
                    "Hilbert basis computation is limited to dimension " +
                        std::to_string(kHilbertBasisMaxDim));
    if (!c.is_pointed())
        throw Error(ErrorKind::NotPointed, "the cone contains a line; its Hilbert basis is undefined",
                    c.lineality().front().to_string());
    const auto& extreme = c.extreme_rays();
    if (extreme.empty())
        return {};

    // Work in a basis of span(C) ∩ Z^dim so the cone is full-dimensional.
    const IntMatrix rays = IntMatrix::from_columns(c.dim(), extreme);
    const SmithDecomposition snf = smith_normal_form(rays);
    const std::size_t k = snf.rank();
    const IntMatrix basis = unimodular_inverse(snf.U).column_block(0, k);
    const IntMatrix coords = (snf.U * rays).row_block(0, k);
    const std::vector<IntVec> ray_coords = coords.columns();

    const Cone local = cone_from_rays(k, ray_coords);
    const IntVec grading = *interior_dual_vector(local);

    // Every Hilbert basis element is an extreme ray or a nonzero point of the
    // half-open parallelepiped of some simplicial subcone.
    std::set<IntVec> candidates(ray_coords.begin(), ray_coords.end());
    std::size_t subsets = 0;
    std::size_t points = 0;
    for_each_subset(ray_coords.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (++subsets > kMaxSimplicialSubsets)
            throw Error(ErrorKind::BudgetExceeded, "too many simplicial subcones");
        std::vector<IntVec> cols;
        for (std::size_t i : idx)
            cols.push_back(ray_coords[i]);
        const IntMatrix a = IntMatrix::from_columns(k, cols);
        const Integer det = determinant(a);
        if (det == 0)
            return;
        const Integer volume = abs(det);
        if (volume.fits_ulong_p())
            points += volume.get_ui();
        if (!volume.fits_ulong_p() || points > kMaxParallelepipedPoints)
            throw Error(ErrorKind::BudgetExceeded, "fundamental parallelepipeds too large");

        std::vector<std::vector<Rational>> inverse_cols;
        for (std::size_t j = 0; j < k; ++j)
            inverse_cols.push_back(solve_rational(a, IntVec::unit(k, j)));

        const SmithDecomposition local_snf = smith_normal_form(a);
        const IntMatrix p_inv = unimodular_inverse(local_snf.U);
        const std::vector<Integer> moduli = local_snf.diagonal();

        // Mixed-radix walk over the group Z^k / A Z^k.
        IntVec y = IntVec::zero(k);
        for (;;) {
            const IntVec z = p_inv * y;
            IntVec point = z;
            for (std::size_t i = 0; i < k; ++i) {
                Rational lambda = 0;
                for (std::size_t j = 0; j < k; ++j)
                    lambda += inverse_cols[j][i] * z[j];
                Integer fl;
                mpz_fdiv_q(fl.get_mpz_t(), lambda.get_num_mpz_t(), lambda.get_den_mpz_t());
                if (fl != 0)
                    point -= fl * cols[i];
            }
            if (!point.is_zero())
                candidates.insert(point);

            std::size_t pos = 0;
            while (pos < k) {
                y[pos] += 1;
                if (y[pos] < moduli[pos])
                    break;
                y[pos] = 0;
                ++pos;
            }
            if (pos == k)
                break;
        }
    });

    struct Graded {
        Integer grade;
        IntVec v;
    };
    std::vector<Graded> ordered;
    for (const auto& v : candidates)
        ordered.push_back({dot(grading, v), v});
    std::sort(ordered.begin(), ordered.end(), [](const Graded& x, const Graded& y) {
        if (x.grade != y.grade)
            return x.grade < y.grade;
        return x.v < y.v;
    });

    std::vector<Graded> accepted;
    for (const auto& h : ordered) {
        bool reducible = false;
        for (const auto& g : accepted) {
            if (g.grade >= h.grade)
                break;
            if (satisfies(local.inequalities(), h.v - g.v)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            accepted.push_back(h);
    }

    HilbertBasis hb;
    for (const auto& g : accepted)
        hb.elements.push_back(basis * g.v);
    std::sort(hb.elements.begin(), hb.elements.end());
    return hb;
}

std::vector<Cone> faces(const Cone& c)
{
    if (c.dim() > kFacesMaxDim)
        throw Error(ErrorKind::BudgetExceeded,
                    "face enumeration is limited to dimension " + std::to_string(kFacesMaxDim));
    if (!c.is_pointed())
        throw Error(ErrorKind::NotPointed, "face enumeration requires a pointed cone");
    const auto& ineq = c.inequalities();
    if (ineq.size() > kMaxFaceInequalities)
        throw Error(ErrorKind::BudgetExceeded, "too many facets for face enumeration");

    const auto& extreme = c.extreme_rays();
    std::set<std::vector<IntVec>> ray_sets;
    const std::size_t subsets = std::size_t{1} << ineq.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<IntVec> tight;
        for (const auto& r : extreme) {
            bool on_face = true;
            for (std::size_t i = 0; i < ineq.size() && on_face; ++i)
                if ((mask >> i) & 1U)
                    on_face = dot(ineq[i], r) == 0;
            if (on_face)
                tight.push_back(r);
        }
        ray_sets.insert(std::move(tight));
    }

    std::vector<std::vector<IntVec>> ordered(ray_sets.begin(), ray_sets.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<Cone> out;
    for (auto& rays : ordered)
        out.push_back(cone_from_rays(c.dim(), rays));
    return out;
}

} // namespace protoric
