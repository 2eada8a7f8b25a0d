#pragma once

// Syntax tree of `.twr` tower documents:
//
//   document = "tower" IDENT "{" item* "}"
//   item     = level | connect | family
//   level    = "level" INT "{" ("ambient" INT ";")? spec ";" "}"
//   spec     = "generators" vec+ | "rays" vec+ | "equation" monomial "=" monomial
//   connect  = "connect" INT "->" INT "matrix" matrix ";"
//   family   = "family" ("torus" | "affine_space" | "double_cover") "depth" INT ";"
//   vec      = "(" INT ("," INT)* ")"
//   matrix   = "[" "[" INT ("," INT)* "]" ("," "[" INT ("," INT)* "]")* "]"
//   monomial = IDENT ("^" INT)? ("*" IDENT ("^" INT)?)*

#include "protoric/frontend/diagnostic.hpp"
#include "protoric/lattice.hpp"
#include "protoric/towers.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace protoric::frontend {

struct Factor {
    std::string variable;
    Integer exponent = 1;
    Span span;
};

struct Monomial {
    std::vector<Factor> factors;
    Span span;
};

enum class SpecKind { Generators, Rays, Equation };

struct LevelSpec {
    SpecKind kind = SpecKind::Generators;
    /// generators / rays
    std::vector<IntVec> vectors;
    std::vector<Span> vector_spans;
    /// equation
    Monomial lhs;
    Monomial rhs;
    Span span;
};

struct LevelDecl {
    std::size_t index = 0;
    std::optional<std::size_t> ambient;
    Span ambient_span;
    LevelSpec spec;
    Span span;
};

struct ConnectDecl {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Rows as written; raggedness is reported during elaboration.
    std::vector<std::vector<Integer>> rows;
    Span matrix_span;
    Span span;
};

struct FamilyDecl {
    TowerFamily family = TowerFamily::Torus;
    std::size_t depth = 0;
    Span depth_span;
    Span span;
};

struct TowerDocument {
    std::string name;
    Span name_span;
    std::vector<LevelDecl> levels;
    std::vector<ConnectDecl> connects;
    std::vector<FamilyDecl> families;
};

/// Equality of everything except source spans.
bool structurally_equal(const TowerDocument& a, const TowerDocument& b);

struct ParseResult {
    std::optional<TowerDocument> document;
    /// Syntax diagnostics; parsing stops at the first error.
    std::vector<Diagnostic> diagnostics;
};

ParseResult parse_tower(std::string_view text);

/// Canonical source form; parsing it yields a structurally equal document.
std::string print_document(const TowerDocument& doc);

std::string print_monomial(const Monomial& m);

} // namespace protoric::frontend
