#pragma once

// Deterministic serialization of results. JSON objects keep their keys
// sorted; integers that fit in 64 bits are numbers and larger ones strings.

#include "protoric/frontend/diagnostic.hpp"
#include "protoric/lattice.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace protoric::frontend {

using Json = nlohmann::json;

Json to_json(const Integer& x);
/// Integral values as integers, others as "p/q" strings.
Json to_json(const Rational& x);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<IntVec>& vs);

Json to_json(const Diagnostic& d);

/// {"diagnostics": [...], "result": result, "tower": name or null}, one line.
std::string render_envelope(const Json& result, const std::vector<Diagnostic>& diagnostics,
                            const std::optional<std::string>& tower);

/// Left-aligned columns separated by two spaces, header first.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// Inequalities ordered by support size, then by support, then by value.
std::vector<IntVec> display_order(std::vector<IntVec> inequalities);
/// `m1 >= 0; m1 + 2*m2 >= 0`; a pair a, -a becomes one `... = 0`.
std::string render_inequalities(const std::vector<IntVec>& inequalities);
/// Linear form a.m with variables m1, m2, ...
std::string render_linear_form(const IntVec& a);

} // namespace protoric::frontend
