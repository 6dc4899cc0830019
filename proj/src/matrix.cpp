#include "lval/matrix.hpp"

#include <stdexcept>

namespace lval {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Rational& RatMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

const Rational& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<Rational> RatMatrix::operator*(const std::vector<Rational>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

std::vector<std::size_t> reduced_row_echelon(RatMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.at(r, col) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
        }
        const Rational inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) -= factor * m.at(pivot_row, j);
            }
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

AffineSolutionSet solve_affine(const RatMatrix& m, const std::vector<Rational>& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("rhs size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = reduced_row_echelon(aug);

    AffineSolutionSet sol;
    if (!pivots.empty() && pivots.back() == m.cols()) return sol;  // row 0 = 1: inconsistent

    sol.empty = false;
    sol.particular.assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        sol.particular[pivots[r]] = aug.at(r, m.cols());
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -aug.at(r, free_col);
        }
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix w = m;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && w.at(r, col) == 0) ++r;
        if (r == n) return Rational(0);
        if (r != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(r, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        const Rational inv = 1 / w.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rational factor = w.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= factor * w.at(col, j);
        }
    }
    return det;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix w = m;
    return reduced_row_echelon(w).size();
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = reduced_row_echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) {
        throw std::invalid_argument("matrix is singular");
    }
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    }
    return inv;
}

}  // namespace lval
