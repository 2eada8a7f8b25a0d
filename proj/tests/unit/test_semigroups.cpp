#include "helpers.hpp"

#include "protoric/error.hpp"
#include "protoric/semigroups.hpp"

#include <random>

using namespace protoric;
using testing::vecs;

namespace {

AffineSemigroup level2()
{
    return semigroup_from_generators(2, vecs({{1, 0}, {2, -1}, {0, 1}}));
}

} // namespace

TEST_CASE("normalization")
{
    const AffineSemigroup s = level2();
    CHECK(s.size() == 3);
    CHECK(s.generators() == vecs({{0, 1}, {1, 0}, {2, -1}}));
    CHECK(semigroup_from_generators(1, {}).is_trivial());
    CHECK(semigroup_from_generators(2, vecs({{1, 0}, {1, 0}, {2, 0}})).generators() == vecs({{1, 0}, {2, 0}}));
    CHECK(semigroup_from_generators(2, vecs({{0, 0}, {1, 0}})).size() == 1);
}

TEST_CASE("positive grading")
{
    const AffineSemigroup s = level2();
    const auto w = positive_grading(s);
    REQUIRE(w.has_value());
    for (const auto& g : s.generators())
        CHECK(dot(*w, g) > 0);
    CHECK_FALSE(positive_grading(semigroup_from_generators(1, vecs({{1}, {-1}}))).has_value());
    const auto e1 = positive_grading(semigroup_from_generators(2, vecs({{1, 0}})));
    REQUIRE(e1.has_value());
    CHECK(dot(*e1, IntVec{1, 0}) > 0);
}

TEST_CASE("membership")
{
    const AffineSemigroup s = level2();
    const auto f = member(s, IntVec{3, -1});
    REQUIRE(f.has_value());
    CHECK(f->evaluate(s.generators(), 2) == IntVec{3, -1});
    CHECK_FALSE(member(s, IntVec{1, -1}).has_value());
    const auto zero = member(s, IntVec{0, 0});
    REQUIRE(zero.has_value());
    for (const auto& c : zero->multiplicities)
        CHECK(c == 0);
}

TEST_CASE("membership agrees with the defining inequalities of a saturated semigroup")
{
    const AffineSemigroup s = level2();
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
            const bool expected = x >= 0 && x + 2 * y >= 0;
            CHECK(contains(s, IntVec{x, y}) == expected);
        }
}

TEST_CASE("membership in a numerical semigroup")
{
    const AffineSemigroup s = semigroup_from_generators(1, vecs({{2}, {3}}));
    for (long n = -3; n <= 20; ++n) {
        // <2,3> misses exactly 1 among the nonnegative integers.
        const bool expected = n >= 0 && n != 1;
        CHECK(contains(s, IntVec{n}) == expected);
    }
}

TEST_CASE("group regime")
{
    const AffineSemigroup z = semigroup_from_generators(2, vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(z.search().regime() == MembershipRegime::Group);
    const auto f = member(z, IntVec{-3, 5});
    REQUIRE(f.has_value());
    CHECK(f->evaluate(z.generators(), 2) == IntVec{-3, 5});
    for (const auto& c : f->multiplicities)
        CHECK(c >= 0);

    const AffineSemigroup even = semigroup_from_generators(1, vecs({{2}, {-2}}));
    CHECK(contains(even, IntVec{-4}));
    CHECK_FALSE(contains(even, IntVec{3}));
}

TEST_CASE("saturation")
{
    CHECK(semantically_equal(saturate(level2()), level2()));
    const AffineSemigroup num = semigroup_from_generators(1, vecs({{2}, {3}}));
    const AffineSemigroup sat = saturate(num);
    CHECK(contains(sat, IntVec{1}));
    CHECK_FALSE(contains(num, IntVec{1}));
    CHECK(saturate(semigroup_from_generators(2, {})).is_trivial());
}

TEST_CASE("group completion")
{
    const auto b = group_completion(level2());
    CHECK(b.size() == 2);
    const IntMatrix basis = IntMatrix::from_columns(2, b);
    CHECK(solve_integer(basis, IntVec{1, 0}).has_value());
    CHECK(solve_integer(basis, IntVec{0, 1}).has_value());
    const auto two = group_completion(semigroup_from_generators(2, vecs({{2, 0}})));
    REQUIRE(two.size() == 1);
    CHECK(two[0].sign_normalized() == IntVec{2, 0});
    CHECK(group_completion(semigroup_from_generators(2, {})).empty());
}

TEST_CASE("homomorphisms")
{
    const AffineSemigroup s1 = semigroup_from_generators(1, vecs({{1}}));
    SUBCASE("coordinate-forgetting connect")
    {
        const auto h = hom_build(level2(), s1, IntMatrix{{1, 0}});
        CHECK(h(IntVec{2, -1}) == IntVec{2});
    }
    SUBCASE("sum map")
    {
        const AffineSemigroup n2 = semigroup_from_generators(2, vecs({{1, 0}, {0, 1}}));
        CHECK_NOTHROW(hom_build(n2, s1, IntMatrix{{1, 1}}));
    }
    SUBCASE("sign obstruction")
    {
        try {
            (void)hom_build(s1, s1, IntMatrix{{-1}});
            FAIL("expected NotContained");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotContained);
            CHECK(e.witness() == "(1)");
        }
    }
    SUBCASE("composition and identity")
    {
        const AffineSemigroup n2 = semigroup_from_generators(2, vecs({{1, 0}, {0, 1}}));
        const auto sum = hom_build(n2, s1, IntMatrix{{1, 1}});
        const auto dbl = hom_build(n2, n2, IntMatrix{{2, 0}, {0, 2}});
        const auto c = compose(sum, dbl);
        CHECK(c.matrix == IntMatrix{{2, 2}});
        CHECK(compose(sum, identity_hom(n2)).matrix == sum.matrix);
    }
}

TEST_CASE("kernel congruence")
{
    const AffineSemigroup n2 = semigroup_from_generators(2, vecs({{1, 0}, {0, 1}}));
    const AffineSemigroup n1 = semigroup_from_generators(1, vecs({{1}}));
    const KernelCongruence r{hom_build(n2, n1, IntMatrix{{1, 0}})};
    CHECK(congruence_holds(r, IntVec{1, 5}, IntVec{1, 9}));
    CHECK_FALSE(congruence_holds(r, IntVec{1, 5}, IntVec{2, 5}));
    CHECK_THROWS_AS(congruence_holds(r, IntVec{-1, 5}, IntVec{1, 9}), Error);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntVec m{d(rng), d(rng)};
        const IntVec n{m[0].get_si(), d(rng)};
        const IntVec m2{d(rng), d(rng)};
        const IntVec n2{m2[0].get_si(), d(rng)};
        REQUIRE(congruence_holds(r, m, n));
        REQUIRE(congruence_holds(r, m2, n2));
        CHECK(congruence_holds(r, m + m2, n + n2));
    }
}

TEST_CASE("semantic equality")
{
    CHECK(semantically_equal(level2(), semigroup_from_generators(2, vecs({{0, 1}, {1, 0}, {2, -1}, {3, -1}}))));
    CHECK_FALSE(semantically_equal(level2(), semigroup_from_generators(2, vecs({{0, 1}, {1, 0}}))));
}
