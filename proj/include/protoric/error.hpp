#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace protoric {

enum class ErrorKind {
    DimensionMismatch,
    InsufficientDepth,
    OutOfRange,
    NotPointed,
    BudgetExceeded,
    UnsupportedRegime,
    NotContained,
    NotSurjective,
    IncompatibleHom,
    NonCommuting,
    NotMember,
    RelationViolated,
    NoFamilyRule,
    NonToric,
    UnknownPredicate,
    ContextMismatch,
    Torsion,
    Parse,
    Internal,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Failure raised by every module. `witness()` carries the offending value
/// (a generator, a level, a vector) rendered in the output syntax, when one
/// exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string witness = {})
        : std::runtime_error(message), kind_(kind), witness_(std::move(witness))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

} // namespace protoric
