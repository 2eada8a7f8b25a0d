#include "helpers.hpp"

#include "protoric/algebra.hpp"
#include "protoric/error.hpp"

#include <random>

using namespace protoric;

namespace {

const ProAffineTower& affine8()
{
    static const ProAffineTower t = family_tower(TowerFamily::AffineSpace, 8);
    return t;
}

IntVec ones(std::size_t k, std::size_t dim)
{
    IntVec v = IntVec::zero(dim);
    for (std::size_t i = 0; i < k; ++i)
        v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("arithmetic")
{
    const auto t = family_tower(TowerFamily::AffineSpace, 2);
    const IntVec a{1, 0}, b{0, 1};
    const auto xa = monomial(t, 2, a);
    const auto xb = monomial(t, 2, b);
    CHECK(mul(xa, xb) == monomial(t, 2, a + b));
    CHECK(mul(xa, algebra_one(t, 2)) == xa);
    const auto s = add(xa, xb);
    const auto sq = mul(s, s);
    CHECK(sq.coefficient(IntVec{2, 0}) == 1);
    CHECK(sq.coefficient(IntVec{1, 1}) == 2);
    CHECK(sq.coefficient(IntVec{0, 2}) == 1);
    CHECK(sq.support_size() == 3);
    CHECK(subtract(xa, xa).is_zero());
    CHECK(scale(Rational(1, 2), xa).coefficient(a) == Rational(1, 2));
    CHECK(scale(0, xa).is_zero());
    CHECK_THROWS_AS(monomial(t, 2, IntVec{-1, 0}), Error);
    CHECK_THROWS_AS(add(xa, algebra_one(t, 1)), Error);
}

TEST_CASE("ring axioms on random elements")
{
    const auto t = family_tower(TowerFamily::AffineSpace, 2);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> e(0, 3), c(-3, 3);
    auto random_element = [&] {
        AlgebraElement f = algebra_zero(2);
        for (int k = 0; k < 3; ++k)
            f = add(f, monomial(t, 2, IntVec{e(rng), e(rng)}, Rational(c(rng)) / 2));
        return f;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_element(), g = random_element(), h = random_element();
        CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
        CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
        CHECK(mul(f, g) == mul(g, f));
        // pi_1 is an algebra homomorphism.
        CHECK(project(t, mul(f, g), 1) == mul(project(t, f, 1), project(t, g, 1)));
    }
}

TEST_CASE("projections and ideals")
{
    const auto t = family_tower(TowerFamily::AffineSpace, 2);
    const auto f = subtract(monomial(t, 2, IntVec{1, 0}), monomial(t, 2, IntVec{0, 1}));
    const auto p = project(t, f, 1);
    CHECK(p.coefficient(IntVec{1}) == 1);
    CHECK(p.coefficient(IntVec{0}) == -1);
    CHECK_FALSE(in_ideal(t, f, 1));
    CHECK(project(t, algebra_one(t, 2), 1) == algebra_one(t, 1));
    CHECK(in_ideal(t, subtract(monomial(t, 2, IntVec{1, 3}), monomial(t, 2, IntVec{1, 5})), 1));
    CHECK_THROWS_AS(project(t, f, 0), Error);
    CHECK_THROWS_AS(project(t, f, 3), Error);

    // pi_l(x_j - x_i) = 0 for i, j > l in the affine space tower.
    const auto& a = affine8();
    for (std::size_t l = 1; l <= 8; ++l)
        for (std::size_t i = l + 1; i <= 8; ++i)
            for (std::size_t j = i + 1; j <= 8; ++j)
                CHECK(in_ideal(a, subtract(monomial(a, 8, ones(j, 8)), monomial(a, 8, ones(i, 8))), l));
}

TEST_CASE("the Cauchy sequence f_i")
{
    const auto& t = affine8();
    CHECK(exref_sequence(t, 1) == monomial(t, 8, ones(1, 8)));
    const auto f2 = exref_sequence(t, 2);
    CHECK(f2.coefficient(ones(1, 8)) == Rational(1, 2));
    CHECK(f2.coefficient(ones(2, 8)) == Rational(1, 2));
    for (std::size_t i = 1; i <= 8; ++i) {
        const auto f = exref_sequence(t, i);
        CHECK(f.support_size() == i);
        // Coefficients sum to 1: sum_{k<i} 2^-k + 2^-(i-1).
        Rational total = 0;
        for (const auto& [m, c] : f.terms)
            total += c;
        CHECK(total == 1);
    }
    for (std::size_t l = 1; l <= 8; ++l)
        for (std::size_t i = l + 1; i <= 8; ++i)
            for (std::size_t j = i + 1; j <= 8; ++j)
                CHECK(project(t, subtract(exref_sequence(t, j), exref_sequence(t, i)), l).is_zero());
    CHECK_THROWS_AS(exref_sequence(t, 9), Error);
}

TEST_CASE("text form")
{
    const auto t = family_tower(TowerFamily::AffineSpace, 3);
    const auto f = add(monomial(t, 3, IntVec{1, 0, 1}, Rational(3, 2)), monomial(t, 3, IntVec{0, 0, 0}, -1));
    CHECK(to_string(f) == "-1*chi(0,0,0) + 3/2*chi(1,0,1)");
    CHECK(parse_algebra_element(t, 3, to_string(f)) == f);
    CHECK(to_string(algebra_zero(3)) == "0");
    CHECK(parse_algebra_element(t, 3, "0").is_zero());
    CHECK_THROWS_AS(parse_algebra_element(t, 3, "2*chi(1,0"), Error);
    CHECK_THROWS_AS(parse_algebra_element(t, 3, "2*chi(-1,0,0)"), Error);
}
