#pragma once

// Finitely generated affine semigroups S ⊂ Z^k, their homomorphisms and
// kernel congruences.

#include "protoric/cones.hpp"
#include "protoric/lattice.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace protoric {

/// Multiplicity per generator (same order as AffineSemigroup::generators()).
struct Factorization {
    std::vector<Integer> multiplicities;

    /// Sum of multiplicity * generator.
    IntVec evaluate(const std::vector<IntVec>& generators, std::size_t ambient) const;
};

enum class MembershipRegime {
    Graded,      ///< cone(generators) is pointed
    Group,       ///< the generators generate a group
    Unsupported,
};

/// Searches factorizations over a fixed generator list. Graded regime:
/// depth-first over multiplicity vectors in lexicographic order, pruned by
/// the cone of the remaining generators and the grading. Group regime:
/// lattice solve shifted by a strictly positive relation.
class FactorizationSearch {
public:
    FactorizationSearch(std::size_t ambient, std::vector<IntVec> generators);
    ~FactorizationSearch();
    FactorizationSearch(FactorizationSearch&&) noexcept;
    FactorizationSearch& operator=(FactorizationSearch&&) noexcept;

    MembershipRegime regime() const noexcept;
    const std::optional<IntVec>& grading() const noexcept;
    const Cone& cone() const noexcept;

    /// Throws UnsupportedRegime / DimensionMismatch.
    std::optional<Factorization> factor(const IntVec& v) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class AffineSemigroup {
public:
    /// Normalizes: drops zero, deduplicates, sorts lexicographically.
    AffineSemigroup(std::size_t ambient, std::vector<IntVec> generators);

    std::size_t ambient() const noexcept { return ambient_; }
    const std::vector<IntVec>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool is_trivial() const noexcept { return generators_.empty(); }

    /// ambient x size matrix whose columns are the generators.
    IntMatrix generator_matrix() const;
    /// Index of `g` in generators(), if it is one.
    std::optional<std::size_t> generator_index(const IntVec& g) const;

    const Cone& cone() const;
    const FactorizationSearch& search() const;
    /// Basis of the group ZS ⊂ Z^ambient.
    const std::vector<IntVec>& lattice_basis() const;

    /// Presentation equality (same normalized generator list).
    friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b)
    {
        return a.ambient_ == b.ambient_ && a.generators_ == b.generators_;
    }

private:
    struct Cache;

    std::size_t ambient_;
    std::vector<IntVec> generators_;
    std::shared_ptr<Cache> cache_;
};

AffineSemigroup semigroup_from_generators(std::size_t k, std::vector<IntVec> generators);

/// w with <w, g> > 0 for every generator, when cone(generators) is pointed.
std::optional<IntVec> positive_grading(const AffineSemigroup& s);

std::optional<Factorization> member(const AffineSemigroup& s, const IntVec& v);
bool contains(const AffineSemigroup& s, const IntVec& v);

/// cone(S) ∩ ZS, generated by its Hilbert basis relative to ZS.
AffineSemigroup saturate(const AffineSemigroup& s);

std::vector<IntVec> group_completion(const AffineSemigroup& s);

/// Mutual membership of generators.
bool semantically_equal(const AffineSemigroup& a, const AffineSemigroup& b);

struct SemigroupHom {
    AffineSemigroup source;
    AffineSemigroup target;
    /// target.ambient() x source.ambient()
    IntMatrix matrix;

    IntVec operator()(const IntVec& m) const { return matrix * m; }
};

/// Throws NotContained with the offending source generator as witness.
SemigroupHom hom_build(AffineSemigroup source, AffineSemigroup target, IntMatrix matrix);

SemigroupHom compose(const SemigroupHom& outer, const SemigroupHom& inner);
SemigroupHom identity_hom(const AffineSemigroup& s);

/// R = {(m, m') : hom(m) = hom(m')}.
struct KernelCongruence {
    SemigroupHom hom;
};

/// Throws NotMember when m or m' is outside the source semigroup.
bool congruence_holds(const KernelCongruence& r, const IntVec& m, const IntVec& m2);

} // namespace protoric
