#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace protoric::frontend {

/// 1-based position of a token range in the source text. Columns count
/// code points, not bytes.
struct Span {
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t length = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { Error, Warning };

/// Syntax problems stop parsing; semantic ones come from elaborating a
/// well-formed document.
enum class DiagnosticKind { Syntax, Semantic };

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagnosticKind kind = DiagnosticKind::Syntax;
    Span span;
    std::string message;
    std::optional<std::string> witness;
};

/// `file:line:col: error: message (witness: ...)`
std::string format_diagnostic(const Diagnostic& d, const std::string& filename);

} // namespace protoric::frontend
