#pragma once

// Exact integer linear algebra: vectors and matrices over Z, Smith normal
// form, integer kernels and solves, and the dot-product pairing between
// integer sequences (finite prefixes) and finitely supported sequences.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace protoric {

using Integer = mpz_class;
using Rational = mpq_class;

class IntVec {
public:
    IntVec() = default;
    IntVec(std::initializer_list<long> entries);
    explicit IntVec(std::vector<Integer> entries) : entries_(std::move(entries)) {}

    static IntVec zero(std::size_t dim);
    static IntVec unit(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    Integer& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    /// Gcd of the entries (0 for the zero vector).
    Integer content() const;
    /// Divides by the content; the zero vector is returned unchanged.
    IntVec primitive() const;
    /// Flips the sign so the first nonzero entry is positive.
    IntVec sign_normalized() const;
    /// First `n` coordinates.
    IntVec truncated(std::size_t n) const;

    IntVec operator-() const;
    IntVec& operator+=(const IntVec& other);
    IntVec& operator-=(const IntVec& other);

    std::string to_string() const;

    friend bool operator==(const IntVec& a, const IntVec& b) { return a.entries_ == b.entries_; }
    /// Lexicographic order; shorter vectors first when one is a prefix.
    friend bool operator<(const IntVec& a, const IntVec& b);

private:
    std::vector<Integer> entries_;
};

IntVec operator+(IntVec a, const IntVec& b);
IntVec operator-(IntVec a, const IntVec& b);
IntVec operator*(const Integer& s, const IntVec& v);
Integer dot(const IntVec& a, const IntVec& b);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::size_t cols, std::span<const IntVec> rows);
    static IntMatrix from_columns(std::size_t rows, std::span<const IntVec> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;
    std::vector<IntVec> columns() const;
    IntMatrix transpose() const;
    /// Rows [begin, end) as a new matrix.
    IntMatrix row_block(std::size_t begin, std::size_t end) const;
    /// Columns [begin, end) as a new matrix.
    IntMatrix column_block(std::size_t begin, std::size_t end) const;

    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& v);

/// Block matrix [I_rows | 0] of shape rows x cols (rows <= cols).
IntMatrix coordinate_projection(std::size_t rows, std::size_t cols);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws when the input is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// U * M * V = D, with U and V unimodular and D diagonal, d1 | d2 | ...,
/// nonnegative, zeros last.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Basis of {v in Z^cols : M v = 0}, each vector sign-normalized.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

/// Some x with M x = b over Z, or nothing when b is not in the column lattice.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);

/// Eventually-zero integer sequence, indices starting at 1.
class FinSuppVec {
public:
    FinSuppVec() = default;
    FinSuppVec(std::initializer_list<std::pair<const std::size_t, long>> entries);
    /// Dense prefix (a1, a2, ...) read as a finitely supported sequence.
    static FinSuppVec from_dense(const IntVec& dense);
    static FinSuppVec unit(std::size_t index);

    void set(std::size_t index, const Integer& value);
    Integer get(std::size_t index) const;
    /// Largest index with a nonzero value; 0 for the zero sequence.
    std::size_t max_index() const;
    const std::map<std::size_t, Integer>& support() const noexcept { return support_; }

    FinSuppVec operator+(const FinSuppVec& other) const;

    friend bool operator==(const FinSuppVec&, const FinSuppVec&) = default;

private:
    std::map<std::size_t, Integer> support_;
};

/// The class of all integer sequences agreeing with `prefix` on its first
/// depth() coordinates. Coordinates past the depth are undetermined.
class OmegaPrefix {
public:
    explicit OmegaPrefix(IntVec prefix);

    std::size_t depth() const noexcept { return prefix_.dim(); }
    const IntVec& prefix() const noexcept { return prefix_; }
    /// Coordinate i (1-based); throws InsufficientDepth past the prefix.
    const Integer& at(std::size_t i) const;

    /// Coordinatewise sum over the common depth.
    OmegaPrefix operator+(const OmegaPrefix& other) const;

private:
    IntVec prefix_;
};

/// Sum of m_i * p_i over the support of p.
Integer specker_pair(const OmegaPrefix& m, const FinSuppVec& p);

/// Image of m under the homomorphism whose output coordinates are given by
/// `rows` (Specker form).
IntVec apply_rows(std::span<const FinSuppVec> rows, const OmegaPrefix& m);

/// Smallest j such that every sequence vanishing on its first j coordinates
/// is sent to zero by the first i rows.
std::size_t leveling_index(std::span<const FinSuppVec> rows, std::size_t i);

/// Exact rational solve of a square nonsingular system.
std::vector<Rational> solve_rational(const IntMatrix& a, const IntVec& b);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

} // namespace protoric
