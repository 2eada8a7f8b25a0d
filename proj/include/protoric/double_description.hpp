#pragma once

// Double description conversion from an inequality system {x : A x >= 0}
// to a generating system (lineality basis + extreme rays), in exact integer
// arithmetic with incremental insertion in input order.

#include "protoric/lattice.hpp"

#include <span>
#include <vector>

namespace protoric {

struct GeneratorSystem {
    /// Basis of the largest linear subspace contained in the cone.
    std::vector<IntVec> lineality;
    /// Primitive extreme rays modulo the lineality space, sorted.
    std::vector<IntVec> rays;
};

GeneratorSystem generators_from_inequalities(std::size_t dim, std::span<const IntVec> inequalities);

} // namespace protoric
