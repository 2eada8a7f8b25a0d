#pragma once

// Turns a parsed document into a validated tower: structural checks on the
// declarations, `rays` through Hilbert bases, `equation` through the
// cokernel of its exponent vector, then tower_build.

#include "protoric/frontend/parser.hpp"
#include "protoric/towers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace protoric::frontend {

struct EquationElaboration {
    /// Variables in order of first appearance.
    std::vector<std::string> variables;
    /// Exponents of the left side minus those of the right side.
    IntVec exponent_difference;
    /// (n-1) x n map Z^n -> Z^n / Z u onto a free quotient.
    IntMatrix cokernel_map;
    /// Image of each variable, in variable order.
    std::vector<IntVec> images;
};

/// Throws Torsion when the exponent difference is not primitive.
EquationElaboration elaborate_equation(const Monomial& lhs, const Monomial& rhs);

struct ElaboratedTower {
    TowerDocument document;
    ProAffineTower tower;
    /// Per declared level in document order; set for `equation` levels.
    std::vector<std::optional<EquationElaboration>> equations;
};

struct ElaborationResult {
    std::optional<ElaboratedTower> tower;
    /// Semantic diagnostics.
    std::vector<Diagnostic> diagnostics;
};

ElaborationResult elaborate(const TowerDocument& doc);

struct LoadResult {
    std::optional<TowerDocument> document;
    std::optional<ElaboratedTower> tower;
    std::vector<Diagnostic> diagnostics;

    bool syntax_failed() const;
};

/// parse_tower followed by elaborate.
LoadResult load_tower(std::string_view text);

} // namespace protoric::frontend
