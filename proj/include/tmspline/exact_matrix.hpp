#ifndef TMSPLINE_EXACT_MATRIX_HPP
#define TMSPLINE_EXACT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tmspline/rational.hpp"

namespace tmspline {

// Dense row-major matrix over the rationals.  Sized at construction; entries
// start at zero.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transposed() const;

    // M * v; v.size() must equal cols().
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination over scaled integer rows, so no
// rounding can occur and intermediate entries stay minors of the input.
// Pivots are chosen as the first nonzero entry scanning columns left to right.
std::size_t rank(const ExactMatrix& m);

// Basis of { v : M v = 0 }, one vector per non-pivot column, produced by back
// substitution over the integer echelon form.  kernel size + rank == cols.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

// Grows a subspace one vector at a time and answers membership questions with
// coordinates in the kept (inserted-and-independent) vectors.  Used to pick
// working bases for ideal summands and to express vectors in them exactly.
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

    // True when v was independent of the span so far (v becomes basis vector
    // number rank()-1); false when v was already representable.
    bool insert(const std::vector<Rational>& v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return dim_; }

    bool contains(const std::vector<Rational>& v) const;

    // Coordinates of v in the kept basis, or nullopt when v lies outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

private:
    struct EchelonRow {
        std::vector<Rational> vec;   // reduced vector, leading entry at pivot
        std::vector<Rational> combo; // vec expressed in kept basis vectors
        std::size_t pivot;
    };
    std::size_t dim_;
    std::vector<EchelonRow> rows_;
};

} // namespace tmspline

#endif
