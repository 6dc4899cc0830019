#pragma once

#include <cstddef>
#include <vector>

#include "lval/rational.hpp"

namespace lval {

/// Dense matrix over the rationals, row-major, 0-based accessors.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    RatMatrix operator*(const RatMatrix& rhs) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const RatMatrix& rhs) const;

    RatMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solution set of a linear system M x = b: either empty or an affine
/// subspace given by one particular solution (free variables set to 0)
/// plus a basis of the nullspace of M.
struct AffineSolutionSet {
    bool empty = true;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace_basis;

    bool is_unique_point() const { return !empty && nullspace_basis.empty(); }
};

/// Gauss-Jordan over Q. Pivot selection: first row with a nonzero entry
/// in the current column (no magnitude heuristics; all arithmetic exact).
AffineSolutionSet solve_affine(const RatMatrix& m, const std::vector<Rational>& b);

/// Exact determinant via fraction elimination with row swaps. Square only.
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Inverse of a square nonsingular matrix; throws std::invalid_argument
/// if singular.
RatMatrix inverse(const RatMatrix& m);

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row in order.
std::vector<std::size_t> reduced_row_echelon(RatMatrix& m);

}  // namespace lval
