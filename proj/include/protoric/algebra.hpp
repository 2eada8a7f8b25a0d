#pragma once

// The semigroup algebra Q[S_level] of one tower level: finite sums of
// characters chi^m with exact rational coefficients, the level projections
// pi_l induced by the connects, and membership in I_l = ker pi_l.

#include "protoric/towers.hpp"

#include <map>
#include <string>
#include <string_view>

namespace protoric {

struct AlgebraElement {
    /// Level whose semigroup holds the exponents.
    std::size_t level = 0;
    /// Exponent -> nonzero coefficient.
    std::map<IntVec, Rational> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    std::size_t support_size() const noexcept { return terms.size(); }
    Rational coefficient(const IntVec& m) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement algebra_zero(std::size_t level);
/// chi^0 at the level.
AlgebraElement algebra_one(const ProAffineTower& t, std::size_t level);
/// c * chi^m; throws NotMember when m is outside S_level.
AlgebraElement monomial(const ProAffineTower& t, std::size_t level, const IntVec& m, const Rational& c = 1);

/// Throw ContextMismatch when the levels differ.
AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement subtract(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const Rational& c, const AlgebraElement& f);

/// pi_l: pushes every exponent down to level l and merges coefficients.
/// Throws OutOfRange when l is 0 or above f.level.
AlgebraElement project(const ProAffineTower& t, const AlgebraElement& f, std::size_t l);
bool in_ideal(const ProAffineTower& t, const AlgebraElement& f, std::size_t l);

/// f_1 = x_1 and f_i = x_i / 2^(i-1) + sum_{k<i} x_k / 2^k, where x_k is the
/// character of (1, ..., 1, 0, ...) with k ones, at the top level of a tower
/// whose level L is Z_{>=0}^L. Throws InsufficientDepth when i > L.
AlgebraElement exref_sequence(const ProAffineTower& t, std::size_t i);

/// `3/2*chi(1,0,1) + -1*chi(0,0,0)`, terms in exponent order; `0` when empty.
std::string to_string(const AlgebraElement& f);
/// Inverse of to_string; exponents are checked against S_level. Throws Parse.
AlgebraElement parse_algebra_element(const ProAffineTower& t, std::size_t level, std::string_view text);

} // namespace protoric
