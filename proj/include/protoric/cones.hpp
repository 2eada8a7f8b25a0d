#pragma once

// Rational polyhedral cones given by rays, their facet inequalities, duals,
// faces and Hilbert bases of cone ∩ Z^dim.

#include "protoric/lattice.hpp"

#include <span>
#include <vector>

namespace protoric {

/// A rational polyhedral cone in R^dim. Both descriptions are computed at
/// construction: `rays()` is the normalized input, `inequalities()` the
/// facet normals a with <a, x> >= 0 (an implicit equality a = 0 appears as
/// the pair a, -a).
class Cone {
public:
    std::size_t dim() const noexcept { return dim_; }
    /// Primitive, deduplicated, lexicographically sorted input rays.
    const std::vector<IntVec>& rays() const noexcept { return rays_; }
    const std::vector<IntVec>& inequalities() const noexcept { return inequalities_; }
    /// Minimal generators modulo the lineality space.
    const std::vector<IntVec>& extreme_rays() const noexcept { return extreme_rays_; }
    const std::vector<IntVec>& lineality() const noexcept { return lineality_; }

    bool is_pointed() const noexcept { return lineality_.empty(); }
    /// Dimension of the linear span.
    std::size_t span_dim() const;

    friend Cone cone_from_rays(std::size_t dim, std::vector<IntVec> rays);

private:
    std::size_t dim_ = 0;
    std::vector<IntVec> rays_;
    std::vector<IntVec> inequalities_;
    std::vector<IntVec> extreme_rays_;
    std::vector<IntVec> lineality_;
};

Cone cone_from_rays(std::size_t dim, std::vector<IntVec> rays);

/// {u : <u, v> >= 0 for all v in C}.
Cone dual_cone(const Cone& c);

bool cone_contains(const Cone& c, const IntVec& v);

/// Minimal generating set of C ∩ Z^dim, sorted lexicographically.
struct HilbertBasis {
    std::vector<IntVec> elements;
};

inline constexpr std::size_t kHilbertBasisMaxDim = 6;
inline constexpr std::size_t kFacesMaxDim = 4;

/// Throws NotPointed for cones containing a line and BudgetExceeded past
/// kHilbertBasisMaxDim or when the candidate enumeration grows too large.
HilbertBasis hilbert_basis(const Cone& c);

/// Every face of a pointed cone, from {0} up to C itself, ordered by number
/// of extreme rays and then lexicographically.
std::vector<Cone> faces(const Cone& c);

/// A vector w with <w, r> > 0 for every nonzero r in C; present iff C is
/// pointed. The zero cone yields the zero vector.
std::optional<IntVec> interior_dual_vector(const Cone& c);

} // namespace protoric
