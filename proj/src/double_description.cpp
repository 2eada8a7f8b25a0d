#include "protoric/double_description.hpp"

#include "protoric/error.hpp"

#include <algorithm>

namespace protoric {

namespace {

struct Ray {
    IntVec v;
    // tight[c] is true when processed constraint c vanishes on v.
    std::vector<bool> tight;
};

std::size_t rank_of_rows(std::span<const IntVec> all, const std::vector<std::size_t>& which, std::size_t dim)
{
    if (which.empty())
        return 0;
    std::vector<IntVec> rows;
    rows.reserve(which.size());
    for (std::size_t c : which)
        rows.push_back(all[c]);
    return rank(IntMatrix::from_rows(dim, rows));
}

} // namespace

GeneratorSystem generators_from_inequalities(std::size_t dim, std::span<const IntVec> inequalities)
{
    for (const auto& a : inequalities)
        if (a.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch,
                        "inequality " + a.to_string() + " is not of dimension " + std::to_string(dim));

    std::vector<IntVec> lineality;
    for (std::size_t i = 0; i < dim; ++i)
        lineality.push_back(IntVec::unit(dim, i));
    std::vector<Ray> rays;

    for (std::size_t c = 0; c < inequalities.size(); ++c) {
        const IntVec& a = inequalities[c];
        if (a.is_zero()) {
            for (auto& r : rays)
                r.tight.push_back(true);
            continue;
        }

        auto pivot = std::find_if(lineality.begin(), lineality.end(),
                                  [&](const IntVec& l) { return dot(a, l) != 0; });
        if (pivot != lineality.end()) {
            // The constraint cuts the lineality space: one lineality direction
            // becomes a ray, everything else is made orthogonal to `a`.
            IntVec l = *pivot;
            Integer al = dot(a, l);
            if (al < 0) {
                l = -l;
                al = -al;
            }
            lineality.erase(pivot);
            for (auto& other : lineality) {
                Integer ao = dot(a, other);
                if (ao != 0)
                    other = (al * other - ao * l).primitive();
            }
            for (auto& r : rays) {
                Integer ar = dot(a, r.v);
                if (ar != 0)
                    r.v = (al * r.v - ar * l).primitive();
                r.tight.push_back(true);
            }
            Ray fresh{l, std::vector<bool>(c, true)};
            fresh.tight.push_back(false);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Ray> positive, zero, negative;
        std::vector<Integer> pos_val, neg_val;
        for (auto& r : rays) {
            Integer s = dot(a, r.v);
            if (s > 0) {
                positive.push_back(r);
                pos_val.push_back(s);
            } else if (s < 0) {
                negative.push_back(r);
                neg_val.push_back(s);
            } else {
                zero.push_back(r);
            }
        }
        if (negative.empty()) {
            for (auto& r : rays)
                r.tight.push_back(dot(a, r.v) == 0);
            continue;
        }

        std::vector<Ray> next;
        for (const auto& r : positive) {
            next.push_back(r);
            next.back().tight.push_back(false);
        }
        for (auto& r : zero) {
            r.tight.push_back(true);
            next.push_back(std::move(r));
        }

        const std::size_t free_dim = dim - lineality.size();
        // Rays of a pointed cone of dimension < 2 have no adjacent pairs.
        if (free_dim >= 2) {
            const std::size_t needed = free_dim - 2;
            for (std::size_t p = 0; p < positive.size(); ++p)
                for (std::size_t n = 0; n < negative.size(); ++n) {
                    std::vector<std::size_t> common;
                    for (std::size_t k = 0; k < c; ++k)
                        if (positive[p].tight[k] && negative[n].tight[k])
                            common.push_back(k);
                    if (common.size() < needed)
                        continue;
                    if (rank_of_rows(inequalities, common, dim) != needed)
                        continue;
                    IntVec v = (pos_val[p] * negative[n].v - neg_val[n] * positive[p].v).primitive();
                    std::vector<bool> tight(c + 1, false);
                    for (std::size_t k : common)
                        tight[k] = true;
                    tight[c] = true;
                    next.push_back(Ray{std::move(v), std::move(tight)});
                }
        }
        rays = std::move(next);
    }

    GeneratorSystem out;
    for (auto& l : lineality)
        out.lineality.push_back(l.primitive().sign_normalized());
    std::sort(out.lineality.begin(), out.lineality.end());
    for (auto& r : rays)
        out.rays.push_back(r.v.primitive());
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

} // namespace protoric
