#include "tmspline/exact_matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace tmspline {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& e = at(r, c);
            if (sgn(e) != 0) acc += e * v[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> rows; // pivot rows only, echelon order
    std::vector<std::size_t> pivot_cols;    // strictly increasing
    std::size_t cols = 0;
};

// Scale every row to coprime integers (multiply by the lcm of denominators,
// divide by the content).  Rank and kernel are unaffected.
std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale(1);
        for (std::size_t c = 0; c < m.cols(); ++c)
            scale = lcm(scale, m.at(r, c).get_den());
        std::vector<Integer> row(m.cols());
        Integer content(0);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& e = m.at(r, c);
            row[c] = e.get_num() * (scale / e.get_den());
            content = gcd(content, row[c]);
        }
        if (content > 1)
            for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        rows.push_back(std::move(row));
    }
    return rows;
}

// Fraction-free elimination.  After processing column c every entry is a
// minor of the scaled input, so the division by the previous pivot is exact.
Echelon bareiss(const ExactMatrix& m) {
    Echelon e;
    e.cols = m.cols();
    auto rows = integer_rows(m);
    const std::size_t nrows = rows.size();
    const std::size_t ncols = m.cols();
    Integer prev(1), t1, t2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(rows[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(rows[r], rows[p]);
        const Integer& pivot = rows[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Integer mult = rows[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                // rows[i][j] = (rows[i][j]*pivot - mult*rows[r][j]) / prev
                mpz_mul(t1.get_mpz_t(), rows[i][j].get_mpz_t(), pivot.get_mpz_t());
                if (sgn(mult) != 0 && sgn(rows[r][j]) != 0) {
                    mpz_mul(t2.get_mpz_t(), mult.get_mpz_t(), rows[r][j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_divexact(rows[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    return bareiss(m).pivot_cols.size();
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
    const Echelon e = bareiss(m);
    const std::size_t ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    basis.reserve(ncols - e.pivot_cols.size());
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        // Echelon rows have strictly increasing pivots; solve bottom-up.
        for (std::size_t k = e.rows.size(); k-- > 0;) {
            const auto& row = e.rows[k];
            const std::size_t p = e.pivot_cols[k];
            Rational acc(0);
            for (std::size_t c = p + 1; c < ncols; ++c)
                if (sgn(row[c]) != 0 && sgn(v[c]) != 0) acc += Rational(row[c]) * v[c];
            if (sgn(acc) != 0) v[p] = -acc / Rational(row[p]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IncrementalSpan::insert(const std::vector<Rational>& v) {
    assert(v.size() == dim_);
    std::vector<Rational> w = v;
    std::vector<Rational> combo(rows_.size(), Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto& row = rows_[k];
        if (sgn(w[row.pivot]) == 0) continue;
        Rational f = w[row.pivot] / row.vec[row.pivot];
        for (std::size_t c = 0; c < dim_; ++c)
            if (sgn(row.vec[c]) != 0) w[c] -= f * row.vec[c];
        for (std::size_t b = 0; b < row.combo.size(); ++b)
            combo[b] -= f * row.combo[b];
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && sgn(w[pivot]) == 0) ++pivot;
    if (pivot == dim_) return false; // dependent, not kept
    combo.push_back(Rational(1));    // w = v - sum f_i e_i, with v the new basis vector
    rows_.push_back(EchelonRow{std::move(w), std::move(combo), pivot});
    return true;
}

std::optional<std::vector<Rational>> IncrementalSpan::coordinates(const std::vector<Rational>& v) const {
    assert(v.size() == dim_);
    std::vector<Rational> w = v;
    std::vector<Rational> coords(rows_.size(), Rational(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto& row = rows_[k];
        if (sgn(w[row.pivot]) == 0) continue;
        Rational f = w[row.pivot] / row.vec[row.pivot];
        for (std::size_t c = 0; c < dim_; ++c)
            if (sgn(row.vec[c]) != 0) w[c] -= f * row.vec[c];
        for (std::size_t b = 0; b < row.combo.size(); ++b)
            coords[b] += f * row.combo[b];
    }
    for (const auto& x : w)
        if (sgn(x) != 0) return std::nullopt;
    return coords;
}

bool IncrementalSpan::contains(const std::vector<Rational>& v) const {
    return coordinates(v).has_value();
}

} // namespace tmspline
