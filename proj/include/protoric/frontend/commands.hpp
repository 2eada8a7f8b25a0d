#pragma once

// Command layer shared by the C API and the CLI. Every command returns the
// text for stdout, the diagnostics for stderr, and a status that maps onto
// the exit codes 0 (ok), 1 (validation or mathematical failure) and 2
// (usage or parse error).

#include "protoric/frontend/elaborate.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace protoric::frontend {

enum class OutputFormat { Text, Json };

enum class CommandStatus { Ok, Validation, Parse, Usage, Internal };

int exit_code(CommandStatus s) noexcept;

struct CommandOutput {
    CommandStatus status = CommandStatus::Ok;
    std::string out;
    std::string err;
};

/// A source text together with its name for diagnostics.
struct LoadedDocument {
    std::string filename;
    LoadResult load;
};

LoadedDocument load_document(std::string filename, std::string_view text);

/// Status and rendered diagnostics of a document that failed to load.
CommandOutput load_failure(const LoadedDocument& doc, OutputFormat fmt);

CommandOutput run_parse(const LoadedDocument& doc, OutputFormat fmt);
CommandOutput run_check(const LoadedDocument& doc, OutputFormat fmt);

inline constexpr std::size_t kDefaultIdealDegree = 4;

/// what: generators | hilbert | inequalities | ideal
CommandOutput run_level(const LoadedDocument& doc, std::size_t index, std::string_view what, std::size_t degree,
                        OutputFormat fmt);
/// depth 0 means the document's depth.
CommandOutput run_embed(const LoadedDocument& doc, std::size_t depth, OutputFormat fmt);
CommandOutput run_dualize(const LoadedDocument& doc, OutputFormat fmt);
/// Values are given per generator of the level, in generator order.
CommandOutput run_point(const LoadedDocument& doc, std::size_t level, std::string_view values,
                        std::optional<std::string_view> eval, OutputFormat fmt);
CommandOutput run_pair(std::string_view omega, std::string_view finsupp, OutputFormat fmt);
/// name: cauchy-algebra | incomplete-subsemigroup
CommandOutput run_demo(std::string_view name, OutputFormat fmt);

/// `(a,b,...)` with integer entries. Throws Parse.
IntVec parse_int_tuple(std::string_view text);
/// `(a,b/c,...)` with rational entries. Throws Parse.
std::vector<Rational> parse_rational_tuple(std::string_view text);

struct PointSpec {
    std::size_t level = 0;
    std::vector<Rational> values;
};

/// `point level=2 values=(1,1,1)`. Throws Parse.
PointSpec parse_point_spec(std::string_view text);

} // namespace protoric::frontend
