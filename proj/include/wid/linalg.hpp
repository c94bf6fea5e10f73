#ifndef WID_LINALG_HPP
#define WID_LINALG_HPP

#include <wid/scalars.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wid {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/*
 * Fraction-free (Bareiss) rank over an integral domain R.
 *
 * After step t the active entries are (t+1)x(t+1) minors of the input, so the
 * division by the previous pivot is exact (Sylvester's identity).  Columns
 * without a pivot are skipped, which does not break exactness.  R must
 * provide *, -, is_zero and divide_exact.
 */
template <typename R>
std::size_t bareiss_rank(Matrix<R> m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    R prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && is_zero(m[p][col]))
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        const R& piv = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const R lead = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                R v = piv * m[i][j];
                if (!is_zero(lead))
                    v = v - lead * m[rank][j];
                m[i][j] = divide_exact(v, prev);
            }
            m[i][col] = R(0);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

/// Rank over Q computed fraction-free after clearing denominators row by row.
inline std::size_t integer_rank(const Matrix<Rational>& m)
{
    Matrix<Integer> z;
    z.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& v : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        std::vector<Integer> zr;
        zr.reserve(row.size());
        for (const auto& v : row)
            zr.push_back(v.num() * (l / v.den()));
        z.push_back(std::move(zr));
    }
    return bareiss_rank(std::move(z));
}

/*
 * Incrementally maintained row-echelon basis over Q.  Rows are stored with
 * pivot entry 1 and are reduced against all earlier rows, so reducing a new
 * vector in insertion order clears every pivot position.
 */
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces v against the basis in place; returns true if v is now zero.
    bool reduce(std::vector<Rational>& v) const
    {
        check_width(v);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero())
                continue;
            const Rational f = v[p];
            const auto& row = rows_[r];
            for (std::size_t j = p; j < width_; ++j)
                if (!row[j].is_zero())
                    v[j] -= f * row[j];
        }
        for (const auto& x : v)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool contains(std::vector<Rational> v) const { return reduce(v); }

    /// Adds v to the span; returns true when the rank grew.
    bool insert(std::vector<Rational> v)
    {
        if (reduce(v))
            return false;
        std::size_t p = 0;
        while (v[p].is_zero())
            ++p;
        const Rational inv = Rational(1) / v[p];
        for (std::size_t j = p; j < width_; ++j)
            v[j] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    void check_width(const std::vector<Rational>& v) const
    {
        if (v.size() != width_)
            throw std::invalid_argument("RowEchelon: vector width mismatch");
    }

    std::size_t width_;
    Matrix<Rational> rows_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rational_rank(const Matrix<Rational>& m)
{
    if (m.empty())
        return 0;
    RowEchelon e(m[0].size());
    for (const auto& row : m)
        e.insert(row);
    return e.rank();
}

/*
 * Solves sum_j x_j * columns[j] = rhs exactly.  Returns the particular
 * solution with all free variables set to zero, or nullopt when the system
 * is inconsistent.
 */
inline std::optional<std::vector<Rational>> solve_columns(const Matrix<Rational>& columns,
                                                         const std::vector<Rational>& rhs)
{
    const std::size_t unknowns = columns.size();
    const std::size_t eqs = rhs.size();
    for (const auto& c : columns)
        if (c.size() != eqs)
            throw std::invalid_argument("solve_columns: column length mismatch");

    Matrix<Rational> aug(eqs, std::vector<Rational>(unknowns + 1));
    for (std::size_t i = 0; i < eqs; ++i) {
        for (std::size_t j = 0; j < unknowns; ++j)
            aug[i][j] = columns[j][i];
        aug[i][unknowns] = rhs[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < eqs; ++col) {
        std::size_t p = row;
        while (p < eqs && aug[p][col].is_zero())
            ++p;
        if (p == eqs)
            continue;
        std::swap(aug[p], aug[row]);
        const Rational inv = Rational(1) / aug[row][col];
        for (std::size_t j = col; j <= unknowns; ++j)
            aug[row][j] *= inv;
        for (std::size_t i = 0; i < eqs; ++i) {
            if (i == row || aug[i][col].is_zero())
                continue;
            const Rational f = aug[i][col];
            for (std::size_t j = col; j <= unknowns; ++j)
                if (!aug[row][j].is_zero())
                    aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < eqs; ++i)
        if (!aug[i][unknowns].is_zero())
            return std::nullopt;

    std::vector<Rational> x(unknowns);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = aug[r][unknowns];
    return x;
}

}  // namespace wid

#endif  // WID_LINALG_HPP
