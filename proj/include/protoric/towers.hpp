#pragma once

// Finite windows S_1 <- S_2 <- ... <- S_L onto pro-affine semigroups: the
// levels, their surjective connecting homomorphisms, elements of the limit
// truncated to a depth, the induced filtration R_k, Cauchy prefixes, the
// canonical embedding into Z^omega coordinates, and tower homomorphisms.
//
// A pro-affine semigroup is closed in Z^omega once embedded; closedness is
// not checked here because it cannot be decided from a finite window. The
// surjectivity enforced by tower_build is what makes the window faithful.

#include "protoric/semigroups.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace protoric {

enum class TowerFamily { Torus, AffineSpace, DoubleCover };

std::string_view family_name(TowerFamily f) noexcept;
std::optional<TowerFamily> family_from_name(std::string_view name) noexcept;

inline constexpr std::size_t kMaxTowerDepth = 12;

class ProAffineTower {
public:
    std::size_t depth() const noexcept { return levels_.size(); }
    /// Level i, 1-based.
    const AffineSemigroup& level(std::size_t i) const;
    /// phi_i : S_{i+1} -> S_i, 1-based (1 <= i < depth).
    const SemigroupHom& connect(std::size_t i) const;
    /// phi_{ij} : S_j -> S_i for i <= j (identity when i == j).
    IntMatrix composite(std::size_t i, std::size_t j) const;
    const std::optional<TowerFamily>& family() const noexcept { return family_; }

    const std::vector<AffineSemigroup>& levels() const noexcept { return levels_; }
    const std::vector<SemigroupHom>& connects() const noexcept { return connects_; }

    friend ProAffineTower tower_build(std::vector<AffineSemigroup>, std::vector<SemigroupHom>,
                                      std::optional<TowerFamily>);

private:
    std::vector<AffineSemigroup> levels_;
    std::vector<SemigroupHom> connects_;
    std::optional<TowerFamily> family_;
};

/// Validates endpoints and surjectivity of every connect. Throws
/// NotSurjective (witness: the unreachable generator of S_i),
/// IncompatibleHom, or OutOfRange.
ProAffineTower tower_build(std::vector<AffineSemigroup> levels, std::vector<SemigroupHom> connects,
                           std::optional<TowerFamily> family = std::nullopt);

/// Level i of a family, built from its rule.
AffineSemigroup family_level(TowerFamily f, std::size_t i);
ProAffineTower family_tower(TowerFamily f, std::size_t depth);

/// Truncates, or extends by the family rule past the current depth.
ProAffineTower tower_extend(const ProAffineTower& t, std::size_t depth);

/// Constant tower S <- S <- ... with identity connects.
ProAffineTower constant_tower(const AffineSemigroup& s, std::size_t depth);

/// Preimage of m in S_{i+1} under phi_i whose multiplicity vector over the
/// generators of S_{i+1} is lexicographically least (graded images).
IntVec lift(const ProAffineTower& t, std::size_t i, const IntVec& m);

struct TowerElement {
    /// m_1, ..., m_d
    std::vector<IntVec> components;

    std::size_t depth() const noexcept { return components.size(); }
    /// m_k, 1-based.
    const IntVec& at(std::size_t k) const { return components.at(k - 1); }
};

/// Truncations (m|_1, ..., m|_depth) of one vector, for towers whose
/// connects forget the last coordinate.
TowerElement element_from_prefix(const IntVec& m, std::size_t depth);

struct ElementCheck {
    bool ok = true;
    /// First failing level (1-based), 0 when ok.
    std::size_t level = 0;
    std::string message;
};

ElementCheck element_check(const ProAffineTower& t, const TowerElement& e);

/// (e, e') in R_k: the level-k components agree.
bool filtration_related(const ProAffineTower& t, const TowerElement& e, const TowerElement& e2, std::size_t k);

struct CauchyReport {
    bool is_cauchy_prefix = false;
    /// Per level k (index k-1): least sequence index N (counting from 0)
    /// such that the level-k components from index N on are all equal, or
    /// nothing when the window shows no stabilization.
    std::vector<std::optional<std::size_t>> stabilization;
    /// Stabilized components, present when every level stabilized.
    std::optional<TowerElement> limit;
};

/// A level counts as stabilized when the constant tail has length >= 2.
CauchyReport cauchy_check(const std::vector<TowerElement>& seq, std::size_t depth);

/// Named restriction of a tower's limit semigroup.
struct SubsemigroupRestriction {
    std::string predicate;
    /// Points removed from the limit, as dense prefixes of finitely
    /// supported sequences.
    std::vector<IntVec> excluded;
};

/// Whether the limit prefix lies in the restricted subsemigroup as far as
/// the window can tell: every level must be a member, and no excluded point
/// may agree with the prefix on the whole window. Throws UnknownPredicate.
bool sub_tower_limit_membership(const ProAffineTower& t, const SubsemigroupRestriction& restriction,
                                const TowerElement& limit);

struct CanonicalEmbedding {
    std::vector<std::size_t> ranks;
    /// Basis of ZS_i as columns (ambient_i x rank_i).
    std::vector<IntMatrix> lattice_bases;
    /// Connect group maps in lattice coordinates (rank_i x rank_{i+1}).
    std::vector<IntMatrix> lattice_maps;
    /// Unimodular changes C_i: lattice coordinates -> canonical coordinates.
    std::vector<IntMatrix> changes;
    std::vector<IntMatrix> inverse_changes;
    bool finite_type = false;
    /// First level from which the ranks are constant across the window.
    std::size_t stable_from = 1;

    /// Canonical-coordinate form of the connect i (rank_i x rank_{i+1}).
    IntMatrix canonical_map(std::size_t i) const;
    /// Canonical coordinates of a vector of ZS_i.
    IntVec to_canonical(std::size_t i, const IntVec& m) const;
    IntVec from_canonical(std::size_t i, const IntVec& y) const;
};

CanonicalEmbedding canonical_embedding(const ProAffineTower& t, std::size_t depth);

/// Level i of the tower re-expressed in canonical coordinates.
AffineSemigroup reexpressed_level(const ProAffineTower& t, const CanonicalEmbedding& e, std::size_t i);

struct LevelMap {
    /// Source level j(i) feeding target level i.
    std::size_t source_level;
    SemigroupHom hom;
};

struct TowerHom {
    ProAffineTower source;
    ProAffineTower target;
    /// One entry per target level (index i-1).
    std::vector<LevelMap> level_maps;

    std::size_t leveling(std::size_t i) const { return level_maps.at(i - 1).source_level; }
};

/// Validates every level map and commuting square; throws NonCommuting with
/// the first failing generator and level.
TowerHom tower_hom_build(ProAffineTower source, ProAffineTower target, std::vector<LevelMap> level_maps);

TowerHom identity_tower_hom(const ProAffineTower& t);
/// outer ∘ inner
TowerHom compose(const TowerHom& outer, const TowerHom& inner);

/// Image of a source element under the induced map, level by level.
TowerElement apply(const TowerHom& h, const TowerElement& e);

} // namespace protoric
