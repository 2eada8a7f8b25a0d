#include "protoric/lattice.hpp"

#include "protoric/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace protoric {

std::string_view error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InsufficientDepth: return "insufficient-depth";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotPointed: return "not-pointed";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::UnsupportedRegime: return "unsupported-regime";
    case ErrorKind::NotContained: return "image-not-contained";
    case ErrorKind::NotSurjective: return "not-surjective";
    case ErrorKind::IncompatibleHom: return "incompatible-hom";
    case ErrorKind::NonCommuting: return "non-commuting";
    case ErrorKind::NotMember: return "not-member";
    case ErrorKind::RelationViolated: return "relation-violated";
    case ErrorKind::NoFamilyRule: return "no-family-rule";
    case ErrorKind::NonToric: return "non-toric";
    case ErrorKind::UnknownPredicate: return "unknown-predicate";
    case ErrorKind::ContextMismatch: return "context-mismatch";
    case ErrorKind::Torsion: return "torsion";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

// ---------------------------------------------------------------- IntVec

IntVec::IntVec(std::initializer_list<long> entries)
{
    entries_.reserve(entries.size());
    for (long e : entries)
        entries_.emplace_back(e);
}

IntVec IntVec::zero(std::size_t dim)
{
    return IntVec(std::vector<Integer>(dim, Integer(0)));
}

IntVec IntVec::unit(std::size_t dim, std::size_t index)
{
    IntVec v = zero(dim);
    v[index] = 1;
    return v;
}

bool IntVec::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntVec::content() const
{
    Integer g = 0;
    for (const auto& x : entries_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVec IntVec::primitive() const
{
    Integer g = content();
    if (g == 0 || g == 1)
        return *this;
    IntVec out = *this;
    for (auto& x : out.entries_)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVec IntVec::sign_normalized() const
{
    for (const auto& x : entries_) {
        if (x > 0)
            return *this;
        if (x < 0)
            return -*this;
    }
    return *this;
}

IntVec IntVec::truncated(std::size_t n) const
{
    if (n > dim())
        throw Error(ErrorKind::InsufficientDepth,
                    "cannot truncate a vector of dimension " + std::to_string(dim()) + " to " +
                        std::to_string(n));
    return IntVec(std::vector<Integer>(entries_.begin(), entries_.begin() + static_cast<long>(n)));
}

IntVec IntVec::operator-() const
{
    IntVec out = *this;
    for (auto& x : out.entries_)
        x = -x;
    return out;
}

IntVec& IntVec::operator+=(const IntVec& other)
{
    if (other.dim() != dim())
        throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
    for (std::size_t i = 0; i < dim(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

IntVec& IntVec::operator-=(const IntVec& other)
{
    if (other.dim() != dim())
        throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
    for (std::size_t i = 0; i < dim(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

std::string IntVec::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ",";
        out += entries_[i].get_str();
    }
    out += ")";
    return out;
}

bool operator<(const IntVec& a, const IntVec& b)
{
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.dim() < b.dim();
}

IntVec operator+(IntVec a, const IntVec& b)
{
    a += b;
    return a;
}

IntVec operator-(IntVec a, const IntVec& b)
{
    a -= b;
    return a;
}

IntVec operator*(const Integer& s, const IntVec& v)
{
    std::vector<Integer> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out[i] = s * v[i];
    return IntVec(std::move(out));
}

Integer dot(const IntVec& a, const IntVec& b)
{
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different dimensions");
    Integer s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        for (long e : r)
            entries_.emplace_back(e);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, std::span<const IntVec> rows)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols)
            throw Error(ErrorKind::DimensionMismatch, "row " + rows[r].to_string() + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVec> columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != rows)
            throw Error(ErrorKind::DimensionMismatch,
                        "column " + columns[c].to_string() + " has wrong length");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const
{
    std::vector<Integer> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out[c] = (*this)(r, c);
    return IntVec(std::move(out));
}

IntVec IntMatrix::column(std::size_t c) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return IntVec(std::move(out));
}

std::vector<IntVec> IntMatrix::columns() const
{
    std::vector<IntVec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const
{
    IntMatrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r - begin, c) = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::column_block(std::size_t begin, std::size_t end) const
{
    IntMatrix out(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c)
            out(r, c - begin) = (*this)(r, c);
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out += ",";
        out += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ",";
            out += (*this)(r, c).get_str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(out(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        }
    return out;
}

IntVec operator*(const IntMatrix& a, const IntVec& v)
{
    if (a.cols() != v.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot apply a matrix with " + std::to_string(a.cols()) + " columns to " +
                        v.to_string());
    std::vector<Integer> out(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
    return IntVec(std::move(out));
}

IntMatrix coordinate_projection(std::size_t rows, std::size_t cols)
{
    IntMatrix p(rows, cols);
    for (std::size_t i = 0; i < rows && i < cols; ++i)
        p(i, i) = 1;
    return p;
}

namespace {

// Fraction-free (Bareiss) elimination. Returns the rank; `det` receives the
// determinant when the matrix is square.
std::size_t bareiss(IntMatrix a, Integer* det)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != r) {
            for (std::size_t k = 0; k < m; ++k)
                std::swap(a(p, k), a(r, k));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t k = c + 1; k < m; ++k) {
                Integer t = a(r, c) * a(i, k) - a(i, c) * a(r, k);
                mpz_divexact(a(i, k).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    if (det) {
        if (n != m || r < n)
            *det = 0;
        else
            *det = sign * a(n - 1, n - 1);
    }
    return r;
}

} // namespace

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    Integer d;
    bareiss(m, &d);
    return d;
}

std::size_t rank(const IntMatrix& m)
{
    return bareiss(m, nullptr);
}

bool is_unimodular(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        return false;
    Integer d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (!is_unimodular(m))
        throw Error(ErrorKind::Internal, "matrix " + m.to_string() + " is not unimodular");
    const std::size_t n = m.rows();
    // Gauss-Jordan over Q; the result is integral because det = +-1.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0)
            ++p;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                a[i][k] -= f * a[c][k];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = a[i][n + j].get_num();
    return inv;
}

// ---------------------------------------------------------------- Smith form

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0)
        ++r;
    return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        out.push_back(D(i, i));
    return out;
}

namespace {

struct SmithState {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k)
            std::swap(u(i, k), u(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a.rows(); ++k)
            std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < v.rows(); ++k)
            std::swap(v(k, i), v(k, j));
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t k = 0; k < a.cols(); ++k)
            mpz_addmul(a(i, k).get_mpz_t(), q.get_mpz_t(), a(j, k).get_mpz_t());
        for (std::size_t k = 0; k < u.cols(); ++k)
            mpz_addmul(u(i, k).get_mpz_t(), q.get_mpz_t(), u(j, k).get_mpz_t());
    }
    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t k = 0; k < a.rows(); ++k)
            mpz_addmul(a(k, i).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
        for (std::size_t k = 0; k < v.rows(); ++k)
            mpz_addmul(v(k, i).get_mpz_t(), q.get_mpz_t(), v(k, j).get_mpz_t());
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t k = 0; k < a.cols(); ++k)
            a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            u(i, k) = -u(i, k);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot: smallest nonzero |entry| in the trailing block, first in
            // row-major order.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Integer& x = s.a(i, j);
                    if (x == 0)
                        continue;
                    if (pi == rows || mpz_cmpabs(x.get_mpz_t(), s.a(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) {
                exhausted = true;
                break;
            }
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.a(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s.a(i, t).get_mpz_t(), s.a(t, t).get_mpz_t());
                s.add_row(i, t, -q);
                if (s.a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.a(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), s.a(t, j).get_mpz_t(), s.a(t, t).get_mpz_t());
                s.add_col(j, t, -q);
                if (s.a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: pull a non-multiple into the pivot row.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
                        s.add_row(t, i, Integer(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (exhausted)
            break;
        if (s.a(t, t) < 0)
            s.negate_row(t);
    }
    return SmithDecomposition{std::move(s.u), std::move(s.a), std::move(s.v)};
}

std::vector<IntVec> kernel_basis(const IntMatrix& m)
{
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<IntVec> basis;
    for (std::size_t j = snf.rank(); j < m.cols(); ++j)
        basis.push_back(snf.V.column(j).sign_normalized());
    return basis;
}

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b)
{
    if (b.dim() != m.rows())
        throw Error(ErrorKind::DimensionMismatch,
                    "right-hand side " + b.to_string() + " does not match " + std::to_string(m.rows()) +
                        " rows");
    SmithDecomposition snf = smith_normal_form(m);
    IntVec c = snf.U * b;
    const std::size_t r = snf.rank();
    IntVec y = IntVec::zero(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < r) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), snf.D(i, i).get_mpz_t()))
                return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.D(i, i).get_mpz_t());
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

std::vector<Rational> solve_rational(const IntMatrix& a, const IntVec& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.dim() != n)
        throw Error(ErrorKind::DimensionMismatch, "solve_rational expects a square system");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw Error(ErrorKind::Internal, "singular system in solve_rational");
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k)
                m[i][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ---------------------------------------------------------------- sequences

FinSuppVec::FinSuppVec(std::initializer_list<std::pair<const std::size_t, long>> entries)
{
    for (const auto& [index, value] : entries)
        set(index, Integer(value));
}

FinSuppVec FinSuppVec::from_dense(const IntVec& dense)
{
    FinSuppVec p;
    for (std::size_t i = 0; i < dense.dim(); ++i)
        p.set(i + 1, dense[i]);
    return p;
}

FinSuppVec FinSuppVec::unit(std::size_t index)
{
    FinSuppVec p;
    p.set(index, Integer(1));
    return p;
}

void FinSuppVec::set(std::size_t index, const Integer& value)
{
    if (index == 0)
        throw Error(ErrorKind::OutOfRange, "sequence indices start at 1");
    if (value == 0)
        support_.erase(index);
    else
        support_[index] = value;
}

Integer FinSuppVec::get(std::size_t index) const
{
    auto it = support_.find(index);
    return it == support_.end() ? Integer(0) : it->second;
}

std::size_t FinSuppVec::max_index() const
{
    return support_.empty() ? 0 : support_.rbegin()->first;
}

FinSuppVec FinSuppVec::operator+(const FinSuppVec& other) const
{
    FinSuppVec out = *this;
    for (const auto& [i, v] : other.support_)
        out.set(i, out.get(i) + v);
    return out;
}

OmegaPrefix::OmegaPrefix(IntVec prefix) : prefix_(std::move(prefix))
{
    if (prefix_.dim() == 0)
        throw Error(ErrorKind::InsufficientDepth, "an omega prefix needs depth at least 1");
}

const Integer& OmegaPrefix::at(std::size_t i) const
{
    if (i == 0 || i > depth())
        throw Error(ErrorKind::InsufficientDepth,
                    "coordinate " + std::to_string(i) + " is undetermined by a prefix of depth " +
                        std::to_string(depth()));
    return prefix_[i - 1];
}

OmegaPrefix OmegaPrefix::operator+(const OmegaPrefix& other) const
{
    const std::size_t d = std::min(depth(), other.depth());
    return OmegaPrefix(prefix_.truncated(d) + other.prefix_.truncated(d));
}

Integer specker_pair(const OmegaPrefix& m, const FinSuppVec& p)
{
    if (p.max_index() > m.depth())
        throw Error(ErrorKind::InsufficientDepth,
                    "pairing needs coordinate " + std::to_string(p.max_index()) +
                        " but the prefix has depth " + std::to_string(m.depth()));
    Integer s = 0;
    for (const auto& [i, v] : p.support())
        mpz_addmul(s.get_mpz_t(), m.at(i).get_mpz_t(), v.get_mpz_t());
    return s;
}

IntVec apply_rows(std::span<const FinSuppVec> rows, const OmegaPrefix& m)
{
    std::vector<Integer> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(specker_pair(m, r));
    return IntVec(std::move(out));
}

std::size_t leveling_index(std::span<const FinSuppVec> rows, std::size_t i)
{
    if (i == 0 || i > rows.size())
        throw Error(ErrorKind::OutOfRange,
                    "level " + std::to_string(i) + " exceeds the " + std::to_string(rows.size()) +
                        " available rows");
    std::size_t j = 1;
    for (std::size_t r = 0; r < i; ++r)
        j = std::max(j, rows[r].max_index());
    return j;
}

} // namespace protoric
