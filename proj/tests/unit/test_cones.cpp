#include "helpers.hpp"

#include "../support/oracles.hpp"

#include "protoric/cones.hpp"
#include "protoric/double_description.hpp"
#include "protoric/error.hpp"

#include <random>

using namespace protoric;
using testing::vecs;

namespace {

IntVec from_oracle(const oracle::Vec& v)
{
    std::vector<Integer> out;
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return IntVec(std::move(out));
}

std::vector<IntVec> from_oracle(const std::vector<oracle::Vec>& vs)
{
    std::vector<IntVec> out;
    for (const auto& v : vs)
        out.push_back(from_oracle(v));
    return out;
}

} // namespace

TEST_CASE("cone from rays")
{
    SUBCASE("first orthant")
    {
        const Cone c = cone_from_rays(2, vecs({{1, 0}, {0, 1}}));
        CHECK(c.is_pointed());
        CHECK(c.extreme_rays() == vecs({{0, 1}, {1, 0}}));
        CHECK(c.span_dim() == 2);
    }
    SUBCASE("level-2 double cover cone")
    {
        const Cone c = cone_from_rays(2, vecs({{2, -1}, {0, 1}}));
        auto ineq = c.inequalities();
        std::sort(ineq.begin(), ineq.end());
        CHECK(ineq == vecs({{1, 0}, {1, 2}}));
    }
    SUBCASE("primitive normalization")
    {
        const Cone c = cone_from_rays(2, vecs({{4, 0}}));
        CHECK(c.rays() == vecs({{1, 0}}));
    }
    SUBCASE("lineality")
    {
        const Cone c = cone_from_rays(2, vecs({{1, 0}, {-1, 0}, {0, 1}}));
        CHECK_FALSE(c.is_pointed());
        CHECK(c.lineality().size() == 1);
    }
}

TEST_CASE("double description from inequalities")
{
    const IntVec a{1, 0};
    const IntVec b{1, 2};
    const std::vector<IntVec> ineq{a, b};
    const auto g = generators_from_inequalities(2, ineq);
    CHECK(g.lineality.empty());
    CHECK(g.rays == vecs({{0, 1}, {2, -1}}));

    const std::vector<IntVec> half{IntVec{0, 1}};
    const auto h = generators_from_inequalities(2, half);
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays == vecs({{0, 1}}));
}

TEST_CASE("dual cones")
{
    SUBCASE("first orthant is self-dual")
    {
        const Cone d = dual_cone(cone_from_rays(2, vecs({{1, 0}, {0, 1}})));
        CHECK(d.extreme_rays() == vecs({{0, 1}, {1, 0}}));
    }
    SUBCASE("full plane dualizes to zero")
    {
        const Cone d = dual_cone(cone_from_rays(2, vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
        CHECK(d.extreme_rays().empty());
        CHECK(d.span_dim() == 0);
    }
    SUBCASE("double cover cone against a box oracle")
    {
        const Cone c = cone_from_rays(2, vecs({{2, -1}, {0, 1}}));
        const Cone d = dual_cone(c);
        CHECK(d.extreme_rays() == vecs({{1, 0}, {1, 2}}));
        // Every box point pairing nonnegatively with the rays of C lies in
        // the dual, and conversely.
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                const IntVec u{x, y};
                const bool pairs = dot(u, IntVec{2, -1}) >= 0 && dot(u, IntVec{0, 1}) >= 0;
                CHECK(cone_contains(d, u) == pairs);
            }
    }
}

TEST_CASE("containment")
{
    const Cone c = cone_from_rays(2, vecs({{2, -1}, {0, 1}}));
    CHECK(cone_contains(c, IntVec{1, 0}));
    CHECK_FALSE(cone_contains(c, IntVec{1, -1}));
    CHECK(cone_contains(c, IntVec{0, 0}));
}

TEST_CASE("hilbert bases")
{
    CHECK(hilbert_basis(cone_from_rays(2, vecs({{1, 0}, {0, 1}}))).elements == vecs({{0, 1}, {1, 0}}));
    CHECK(hilbert_basis(cone_from_rays(2, vecs({{2, -1}, {0, 1}}))).elements == vecs({{0, 1}, {1, 0}, {2, -1}}));
    CHECK(hilbert_basis(cone_from_rays(2, vecs({{1, 1}, {1, -1}}))).elements == vecs({{1, -1}, {1, 0}, {1, 1}}));
    try {
        (void)hilbert_basis(cone_from_rays(1, vecs({{1}, {-1}})));
        FAIL("expected NotPointed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPointed);
    }
}

TEST_CASE("hilbert bases agree with the box oracle on fixed cones")
{
    const std::vector<std::vector<oracle::Vec>> cones{
        {{2, -1}, {0, 1}},
        {{1, 1}, {1, -1}},
        {{1, 3}, {3, 1}},
        {{-2, 3}, {4, -1}},
        {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}},
        {{2, -1, -1}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}},
    };
    for (const auto& rays : cones) {
        const std::size_t dim = rays.front().size();
        std::vector<IntVec> r;
        for (const auto& v : rays)
            r.push_back(from_oracle(v));
        CAPTURE(IntMatrix::from_rows(dim, r).to_string());
        CHECK(hilbert_basis(cone_from_rays(dim, r)).elements == from_oracle(oracle::hilbert_basis(rays, dim)));
    }
}

TEST_CASE("hilbert bases agree with the box oracle on random 2d cones")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<int> count(2, 4);
    int done = 0;
    while (done < 20) {
        std::vector<oracle::Vec> rays;
        const int n = count(rng);
        while (static_cast<int>(rays.size()) < n) {
            oracle::Vec v{entry(rng), entry(rng)};
            if (v != oracle::Vec{0, 0})
                rays.push_back(v);
        }
        if (!oracle::is_pointed(rays))
            continue;
        ++done;
        std::vector<IntVec> r;
        for (const auto& v : rays)
            r.push_back(from_oracle(v));
        const Cone c = cone_from_rays(2, r);
        CHECK(c.is_pointed());
        CHECK(hilbert_basis(c).elements == from_oracle(oracle::hilbert_basis(rays, 2)));
    }
}

TEST_CASE("pointedness agrees with the oracle")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<oracle::Vec> rays;
        while (rays.size() < 3) {
            oracle::Vec v{entry(rng), entry(rng), entry(rng)};
            if (v != oracle::Vec{0, 0, 0})
                rays.push_back(v);
        }
        std::vector<IntVec> r;
        for (const auto& v : rays)
            r.push_back(from_oracle(v));
        CHECK(cone_from_rays(3, r).is_pointed() == oracle::is_pointed(rays));
    }
}

TEST_CASE("faces")
{
    CHECK(faces(cone_from_rays(2, vecs({{2, -1}, {0, 1}}))).size() == 4);
    CHECK(faces(cone_from_rays(2, {})).size() == 1);
    CHECK(faces(cone_from_rays(3, vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))).size() == 8);
    // Square pyramid: apex, 4 rays, 4 two-dimensional faces, the cone.
    CHECK(faces(cone_from_rays(3, vecs({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}))).size() == 10);
}

TEST_CASE("interior dual vector")
{
    const Cone c = cone_from_rays(2, vecs({{2, -1}, {0, 1}}));
    const auto w = interior_dual_vector(c);
    REQUIRE(w.has_value());
    CHECK(dot(*w, IntVec{2, -1}) > 0);
    CHECK(dot(*w, IntVec{0, 1}) > 0);
    CHECK_FALSE(interior_dual_vector(cone_from_rays(1, vecs({{1}, {-1}}))).has_value());
    CHECK(interior_dual_vector(cone_from_rays(2, {}))->is_zero());
}

TEST_CASE("inequalities are primitive and tight")
{
    const Cone c = cone_from_rays(3, vecs({{2, -1, -1}, {0, 1, 0}, {0, 0, 1}}));
    for (const auto& a : c.inequalities()) {
        CHECK(a.content() == 1);
        for (const auto& r : c.rays())
            CHECK(dot(a, r) >= 0);
    }
}
