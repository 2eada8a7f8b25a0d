#include "helpers.hpp"

#include "protoric/cones.hpp"
#include "protoric/error.hpp"
#include "protoric/toric.hpp"

#include <random>

using namespace protoric;
using testing::vecs;

namespace {

// Generator order of the double-cover level 2 is (0,1), (1,0), (2,-1), that
// is x2, y, x1 in the variables of the defining relation.
ToricLevel level2()
{
    return variety_from_semigroup(family_level(TowerFamily::DoubleCover, 2));
}

std::vector<Rational> q(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

Rational random_nonzero(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    long n = 0;
    while (n == 0)
        n = num(rng);
    Rational x(n, den(rng));
    x.canonicalize();
    return x;
}

} // namespace

TEST_CASE("varieties of semigroups")
{
    const ToricLevel v = level2();
    REQUIRE(v.ideal_lattice.size() == 1);
    CHECK(v.ideal_lattice[0].sign_normalized() == IntVec{1, -2, 1});
    CHECK(v.torus_rank == 2);

    const ToricLevel plane = variety_from_semigroup(semigroup_from_generators(2, vecs({{1, 0}, {0, 1}})));
    CHECK(plane.ideal_lattice.empty());
    CHECK(plane.torus_rank == 2);

    const ToricLevel point = variety_from_semigroup(semigroup_from_generators(2, {}));
    CHECK(point.torus_rank == 0);

    // The torus rank is the rank of the group generated by S.
    for (auto f : {TowerFamily::Torus, TowerFamily::AffineSpace, TowerFamily::DoubleCover})
        for (std::size_t i = 1; i <= 4; ++i) {
            const AffineSemigroup s = family_level(f, i);
            CHECK(variety_from_semigroup(s).torus_rank == group_completion(s).size());
        }
}

TEST_CASE("binomials")
{
    SUBCASE("double cover level 2")
    {
        const auto b = binomials_up_to_degree(level2(), 2);
        REQUIRE(b.size() == 1);
        // y^2 = x1 * x2
        CHECK(b[0].lhs == IntVec{1, 0, 1});
        CHECK(b[0].rhs == IntVec{0, 2, 0});
    }
    SUBCASE("free semigroup")
    {
        const ToricLevel v = variety_from_semigroup(semigroup_from_generators(2, vecs({{1, 0}, {0, 1}})));
        CHECK(binomials_up_to_degree(v, 4).empty());
    }
    SUBCASE("numerical semigroup <2,3>")
    {
        const ToricLevel v = variety_from_semigroup(semigroup_from_generators(1, vecs({{2}, {3}})));
        const auto b = binomials_up_to_degree(v, 6);
        const Binomial cusp{IntVec{3, 0}, IntVec{0, 2}};
        CHECK(std::find(b.begin(), b.end(), cusp) != b.end());
        // Every listed relation holds: 2 * lhs_1 + 3 * lhs_2 = 2 * rhs_1 + 3 * rhs_2.
        for (const auto& r : b)
            CHECK(2 * r.lhs[0] + 3 * r.lhs[1] == 2 * r.rhs[0] + 3 * r.rhs[1]);
    }
    SUBCASE("budget")
    {
        CHECK_THROWS_AS(binomials_up_to_degree(level2(), kMaxBinomialDegree + 1), Error);
    }
}

TEST_CASE("points")
{
    const ToricLevel v = level2();
    SUBCASE("trivial character")
    {
        const Point p = point_from_values(v, 2, q({1, 1, 1}));
        for (long x = 0; x <= 4; ++x)
            for (long y = -2; y <= 4; ++y)
                if (contains(v.semigroup, IntVec{x, y}))
                    CHECK(evaluate_point(v, p, IntVec{x, y}) == 1);
    }
    SUBCASE("y = 2, x1 = 4, x2 = 1")
    {
        const Point p = point_from_values(v, 2, q({1, 2, 4}));
        CHECK(evaluate_point(v, p, IntVec{1, 0}) == 2);
        CHECK(evaluate_point(v, p, IntVec{0, 0}) == 1);
        CHECK_THROWS_AS(evaluate_point(v, p, IntVec{1, -1}), Error);
    }
    SUBCASE("relation violated")
    {
        try {
            (void)point_from_values(v, 2, q({3, 1, 2}));
            FAIL("expected RelationViolated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::RelationViolated);
        }
        CHECK_THROWS_AS(point_from_values(v, 2, q({1, 1})), Error);
    }
    SUBCASE("zero values must sit on a face")
    {
        CHECK(relation_consistent(v, q({5, 0, 0})));
        CHECK(relation_consistent(v, q({0, 0, 3})));
        CHECK(relation_consistent(v, q({0, 0, 0})));
        // (1,0) is interior, so a nonzero value there forces all values nonzero.
        CHECK_FALSE(relation_consistent(v, q({0, 1, 0})));
        CHECK_FALSE(relation_consistent(v, q({1, 0, 1})));
    }
    SUBCASE("multiplicativity on random points and members")
    {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> mult(0, 3);
        for (int trial = 0; trial < 50; ++trial) {
            // Characters of Z^2 restricted to S: a^m1 b^m2.
            const Rational a = random_nonzero(rng);
            const Rational b = random_nonzero(rng);
            const Point p = point_from_values(v, 2, {b, a, a * a / b});
            for (int pair = 0; pair < 5; ++pair) {
                IntVec m = IntVec::zero(2);
                IntVec n = IntVec::zero(2);
                for (const auto& g : v.semigroup.generators()) {
                    m += Integer(mult(rng)) * g;
                    n += Integer(mult(rng)) * g;
                }
                CHECK(evaluate_point(v, p, m + n) == evaluate_point(v, p, m) * evaluate_point(v, p, n));
            }
        }
    }
}

TEST_CASE("torus action")
{
    const ToricLevel v = level2();
    const TorusElement one = torus_element_from_values(v, 2, q({1, 1, 1}));
    const Point p = point_from_values(v, 2, q({1, 2, 4}));
    CHECK(act(one, p) == p);
    CHECK_THROWS_AS(torus_element_from_values(v, 2, q({0, 1, 1})), Error);

    const ToricLevel plane = variety_from_semigroup(semigroup_from_generators(2, vecs({{1, 0}, {0, 1}})));
    const TorusElement two = torus_element_from_values(plane, 1, q({2, 2}));
    CHECK(act(two, point_from_values(plane, 1, q({1, 1}))).values == q({2, 2}));
    CHECK_THROWS_AS(act(two, p), Error);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = random_nonzero(rng), b = random_nonzero(rng);
        const Rational c = random_nonzero(rng), d = random_nonzero(rng);
        const TorusElement t = torus_element_from_values(v, 2, {b, a, a * a / b});
        const TorusElement u = torus_element_from_values(v, 2, {d, c, c * c / d});
        const Point x = point_from_values(v, 2, {Rational(0), Rational(0), random_nonzero(rng)});
        CHECK(act(act(t, u), x) == act(t, act(u, x)));
    }
}

TEST_CASE("idempotent points")
{
    const ToricLevel v = level2();
    const auto pts = idempotent_points(v, 2);
    CHECK(pts.size() == 4);
    CHECK(pts.size() == faces(v.semigroup.cone()).size());
    // Brute force over all {0,1} assignments.
    std::size_t brute = 0;
    for (int mask = 0; mask < 8; ++mask) {
        const auto vals = q({mask >> 2 & 1, mask >> 1 & 1, mask & 1});
        if (vals[0] * vals[2] == vals[1] * vals[1] && (vals[1] == 0 || (vals[0] != 0 && vals[2] != 0)))
            ++brute;
    }
    CHECK(brute == 4);

    const ToricLevel plane = variety_from_semigroup(semigroup_from_generators(2, vecs({{1, 0}, {0, 1}})));
    CHECK(idempotent_points(plane, 1).size() == 4);
    const ToricLevel torus = variety_from_semigroup(family_level(TowerFamily::Torus, 2));
    const auto t = idempotent_points(torus, 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0].values == q({1, 1, 1, 1}));
}

TEST_CASE("monomial maps")
{
    const IntMatrix e{{1, 0}, {2, 1}};
    CHECK(monomial_map(e, q({3, 5})) == std::vector<Rational>{Rational(75), Rational(5)});
    CHECK(monomial_map(e, q({0, 5})) == std::vector<Rational>{Rational(0), Rational(5)});
    CHECK_THROWS_AS(monomial_map(IntMatrix{{-1}}, q({0})), Error);
}

TEST_CASE("toric towers")
{
    SUBCASE("round trips")
    {
        for (auto f : {TowerFamily::Torus, TowerFamily::AffineSpace, TowerFamily::DoubleCover}) {
            const auto t = family_tower(f, 3);
            const auto back = semigroup_of(dualize_tower(t));
            for (std::size_t i = 1; i <= 3; ++i)
                CHECK(semantically_equal(back.level(i), t.level(i)));
        }
    }
    SUBCASE("the level 2 to level 3 embedding sets the new coordinate to 1")
    {
        const auto vt = dualize_tower(family_tower(TowerFamily::DoubleCover, 3));
        // Level 3 generators: (0,0,1) = x3, (0,1,0) = x2, (1,0,0) = y, (2,-1,-1) = x1.
        const Point p{2, q({3, 6, 12})};
        REQUIRE(relation_consistent(vt.levels[1], p.values));
        const Point image = include_point(vt, 2, p);
        CHECK(image.values == q({1, 3, 6, 12}));
        CHECK(relation_consistent(vt.levels[2], image.values));
    }
    SUBCASE("equivariance of the embedding")
    {
        const auto vt = dualize_tower(family_tower(TowerFamily::DoubleCover, 3));
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const Rational a = random_nonzero(rng), b = random_nonzero(rng);
            const TorusElement t = torus_element_from_values(vt.levels[1], 2, {b, a, a * a / b});
            const Rational c = random_nonzero(rng), d = random_nonzero(rng);
            const Point x = point_from_values(vt.levels[1], 2, {d, c, c * c / d});
            const Point lhs = include_point(vt, 2, act(t, x));
            const Point t_up = include_point(vt, 2, Point{2, t.values});
            const TorusElement t3 = torus_element_from_values(vt.levels[2], 3, t_up.values);
            CHECK(lhs == act(t3, include_point(vt, 2, x)));
        }
    }
    SUBCASE("semigroup_of rejects data that is not toric")
    {
        auto vt = dualize_tower(family_tower(TowerFamily::AffineSpace, 2));
        vt.inclusions[0](0, 0) = -1;
        CHECK_THROWS_AS(semigroup_of(vt), Error);
    }
}

TEST_CASE("dual morphisms")
{
    const auto t = family_tower(TowerFamily::Torus, 3);
    const auto vt = dualize_tower(t);
    CHECK(same_morphism(dualize_hom(identity_tower_hom(t)), identity_toric_morphism(vt)));

    // Composition of the two consecutive connects, read as tower maps.
    const auto a = family_tower(TowerFamily::AffineSpace, 3);
    std::vector<LevelMap> dbl;
    for (std::size_t i = 1; i <= 3; ++i) {
        IntMatrix m = IntMatrix::identity(i);
        for (std::size_t r = 0; r < i; ++r)
            m(r, r) = 2;
        dbl.push_back({i, hom_build(a.level(i), a.level(i), m)});
    }
    const TowerHom h = tower_hom_build(a, a, dbl);
    const ToricMorphism dh = dualize_hom(h);
    CHECK(same_morphism(dualize_hom(compose(h, h)), compose(dh, dh)));
    const TowerHom back = hom_of(dh);
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(back.level_maps[i - 1].hom.matrix == h.level_maps[i - 1].hom.matrix);

    // Squaring on the first coordinate of a point.
    const Point p{1, q({3})};
    CHECK(apply(dh, p).values == q({9}));
}

TEST_CASE("character lattices")
{
    const auto t = family_tower(TowerFamily::Torus, 3);
    const CharacterLattices c3 = characters_and_one_params(t, 3);
    CHECK(c3.character_basis.rows() == 3);
    CHECK(c3.pairing == IntMatrix::identity(3));

    const auto d = family_tower(TowerFamily::DoubleCover, 3);
    const CharacterLattices c2 = characters_and_one_params(d, 2);
    CHECK(c2.character_basis.cols() == 2);
    REQUIRE(c2.restriction.has_value());
    CHECK(c2.inclusion->transpose() == *c2.restriction);
    CHECK(character_coordinates(c2, IntVec{1, 0}).dim() == 2);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> e(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntVec x{e(rng), e(rng)}, y{e(rng), e(rng)};
        const IntVec l{e(rng), e(rng)}, k{e(rng), e(rng)};
        CHECK(pair_character(c2, x + y, l) == pair_character(c2, x, l) + pair_character(c2, y, l));
        CHECK(pair_character(c2, x, l + k) == pair_character(c2, x, l) + pair_character(c2, x, k));
    }
}
