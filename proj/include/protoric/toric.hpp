#pragma once

// The toric side of each level: V(S) described by its semigroup, the lattice
// of relations among generators, binomials, rational points (semigroup
// homomorphisms S -> (Q, *)), the torus action, and the levelwise functors
// between pro-affine towers and towers of toric varieties.
//
// Coordinates of V(S_i) are indexed by the generators of S_i in their sorted
// order; a point is the value of its homomorphism on each generator.

#include "protoric/towers.hpp"

#include <vector>

namespace protoric {

struct ToricLevel {
    AffineSemigroup semigroup;
    /// Basis of {u in Z^n : sum_j u_j g_j = 0}, n = number of generators.
    std::vector<IntVec> ideal_lattice;
    std::size_t torus_rank = 0;
};

ToricLevel variety_from_semigroup(const AffineSemigroup& s);

/// chi^lhs = chi^rhs as generator-multiplicity vectors.
struct Binomial {
    IntVec lhs;
    IntVec rhs;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline constexpr std::size_t kMaxBinomialDegree = 8;

/// Componentwise-minimal relations whose sides both have degree <= d, with
/// disjoint supports and lhs > rhs lexicographically. Throws BudgetExceeded.
std::vector<Binomial> binomials_up_to_degree(const ToricLevel& v, std::size_t d);

/// Values of a homomorphism S_level -> (Q, *) on the generators.
struct Point {
    std::size_t level = 0;
    std::vector<Rational> values;

    friend bool operator==(const Point&, const Point&) = default;
};

/// A point of the dense torus: every value nonzero.
struct TorusElement {
    std::size_t level = 0;
    std::vector<Rational> values;
};

/// Throws RelationViolated when the values do not define a homomorphism, and
/// DimensionMismatch when the count differs from the generator count.
Point point_from_values(const ToricLevel& v, std::size_t level, std::vector<Rational> values);
TorusElement torus_element_from_values(const ToricLevel& v, std::size_t level, std::vector<Rational> values);

/// Whether the values define a homomorphism: the generators with nonzero
/// value span a face of the semigroup, and the nonzero values satisfy every
/// relation among those generators.
bool relation_consistent(const ToricLevel& v, const std::vector<Rational>& values);

/// Lambda(m), through any factorization of m. Throws NotMember.
Rational evaluate_point(const ToricLevel& v, const Point& p, const IntVec& m);

/// (t.p)(g) = t(g) p(g). Throws ContextMismatch when the levels differ.
Point act(const TorusElement& t, const Point& p);
TorusElement act(const TorusElement& t, const TorusElement& u);

inline constexpr std::size_t kMaxIdempotentGenerators = 16;

/// Every relation-consistent {0,1}-valued point, in lexicographic order.
std::vector<Point> idempotent_points(const ToricLevel& v, std::size_t level);

/// x -> (prod_g x_g^{E(g, c)})_c with 0^0 = 1. Negative exponents throw
/// NonToric when the base is zero.
std::vector<Rational> monomial_map(const IntMatrix& exponents, const std::vector<Rational>& x);

struct ToricTower {
    std::vector<ToricLevel> levels;
    /// Closed embeddings V_i -> V_{i+1} dual to the connects: column c holds
    /// the factorization in S_i of the image of generator c of S_{i+1}
    /// (n_i x n_{i+1}).
    std::vector<IntMatrix> inclusions;

    std::size_t depth() const noexcept { return levels.size(); }
};

ToricTower dualize_tower(const ProAffineTower& t);
/// Rebuilds the semigroup tower; connect matrices are recovered by solving
/// against the generator matrices. Throws NonToric.
ProAffineTower semigroup_of(const ToricTower& vt);

/// Image of a level-i point under the embedding into level i + 1.
Point include_point(const ToricTower& vt, std::size_t i, const Point& p);

/// Morphism V' -> V of toric towers dual to a tower hom T -> T'.
struct ToricLevelMorphism {
    /// Level j(i) of the codomain receiving level i of the domain.
    std::size_t target_level;
    /// n'_i x n_{j(i)}: column g is the factorization of beta_i(g) in S'_i.
    IntMatrix exponents;
};

struct ToricMorphism {
    ToricTower domain;   ///< V' = V(T')
    ToricTower codomain; ///< V = V(T)
    std::vector<ToricLevelMorphism> maps;
};

ToricMorphism dualize_hom(const TowerHom& beta);
/// Inverse of dualize_hom. Throws NonToric when the exponent data does not
/// come from a semigroup homomorphism.
TowerHom hom_of(const ToricMorphism& alpha);

ToricMorphism identity_toric_morphism(const ToricTower& vt);
/// outer ∘ inner, with inner.codomain == outer.domain.
ToricMorphism compose(const ToricMorphism& outer, const ToricMorphism& inner);

/// Same towers, leveling and generator images (G'_i E on every level).
bool same_morphism(const ToricMorphism& a, const ToricMorphism& b);

/// alpha_i applied to a point of level i of the domain.
Point apply(const ToricMorphism& alpha, const Point& p);

/// M_i = ZS_i and its dual N_i = Hom(M_i, Z), in the coordinates of a basis
/// of M_i and the dual basis of N_i.
struct CharacterLattices {
    std::size_t level = 0;
    /// ambient_i x r_i, columns a basis of M_i.
    IntMatrix character_basis;
    /// r_i x r_i, columns the dual basis of N_i in dual coordinates.
    IntMatrix one_parameter_basis;
    /// <m_a, n_b>.
    IntMatrix pairing;
    /// M_{i+1} -> M_i in basis coordinates, when level i + 1 is in the window.
    std::optional<IntMatrix> restriction;
    /// N_i -> N_{i+1}, the transpose of the restriction.
    std::optional<IntMatrix> inclusion;
};

CharacterLattices characters_and_one_params(const ProAffineTower& t, std::size_t i);

/// Basis coordinates of a character of M_i given in the ambient lattice.
/// Throws NotMember.
IntVec character_coordinates(const CharacterLattices& c, const IntVec& chi);
/// <chi, lambda> with chi in ambient coordinates and lambda in N_i coordinates.
Integer pair_character(const CharacterLattices& c, const IntVec& chi, const IntVec& lambda);

} // namespace protoric
