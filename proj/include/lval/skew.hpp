#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lval/matrix.hpp"
#include "lval/rational.hpp"

namespace lval {

/// Antisymmetric rational matrix. Only the strict upper triangle is stored;
/// accessors are 1-based to match the usual index conventions for supports,
/// minors and permutations throughout this library.
class SkewMatrix {
public:
    explicit SkewMatrix(int n = 0);

    /// Builds from a full square grid of entries (0-based vector-of-rows);
    /// throws if the grid is not antisymmetric with zero diagonal.
    static SkewMatrix from_grid(const std::vector<std::vector<Rational>>& grid);

    /// Convenience for n=3: entries (a12, a13, a23).
    static SkewMatrix from_triple(const Rational& a12, const Rational& a13, const Rational& a23);

    int n() const { return n_; }

    /// 1-based; i == j yields 0, i > j yields the negated stored entry.
    Rational at(int i, int j) const;
    void set(int i, int j, const Rational& value);

    bool operator==(const SkewMatrix& rhs) const;

    RatMatrix to_matrix() const;

private:
    void check_index(int i, int j) const;

    int n_;
    std::vector<Rational> upper_;  // row-major strict upper triangle
};

/// Principal submatrix on a sorted set of 1-based indices.
SkewMatrix support_minor(const SkewMatrix& a, const std::vector<int>& support);

/// Deletes row i and column j (1-based); the result is square but in
/// general no longer antisymmetric.
RatMatrix delete_row_col(const SkewMatrix& a, int i, int j);

/// Deletes index i from both rows and columns.
SkewMatrix delete_index(const SkewMatrix& a, int i);

/// Deletes indices i and j (i != j) from both rows and columns.
SkewMatrix delete_both(const SkewMatrix& a, int i, int j);

/// Step function: 1 for positive arguments, else 0.
int heaviside(long x);

/// Pfaffian by recursive expansion, memoized on index subsets.
/// pf of the empty matrix is 1; odd dimension gives 0.
Rational pfaffian(const SkewMatrix& a);

/// Memo table shared across the pfaffians of all principal minors of one
/// matrix; subsets are bitmasks over 0-based indices. Requires n <= 25.
class PfaffianCache {
public:
    explicit PfaffianCache(const SkewMatrix& a);
    Rational of_subset(std::uint32_t mask);
    Rational full();
    /// pf of the principal minor with 1-based indices i (and j) removed.
    Rational without(int i);
    Rational without(int i, int j);

private:
    const SkewMatrix& a_;
    std::uint32_t full_mask_;
    std::unordered_map<std::uint32_t, Rational> memo_;
};

/// Pfaffian expanded along the given 1-based row at the top level only,
/// with the sign (-1)^(i+j+heaviside(j-i)); sub-pfaffians use the default
/// expansion. Used to exercise row-independence of the recursion.
Rational pfaffian_along_row(const SkewMatrix& a, int row);

/// Both sides of det(A_ij) = (-1)^heaviside(j-i) pf(A) pf(A_ij^) for even
/// n > 2 and i != j: returns {determinant side, pfaffian side}.
std::pair<Rational, Rational> lemma3_sides(const SkewMatrix& a, int i, int j);

/// Both sides of det(A_ij) = pf(A_i) pf(A_j) for odd n.
std::pair<Rational, Rational> lemma4_sides(const SkewMatrix& a, int i, int j);

/// Relabelled matrix (a_{tau(i),tau(j)}): tau given as images of 1..n.
/// Satisfies apply_permutation(a, sigma_of_tau) =
/// apply_permutation(apply_permutation(a, sigma), tau) with
/// (sigma_of_tau)(i) = sigma(tau(i)).
SkewMatrix apply_permutation(const SkewMatrix& a, const std::vector<int>& tau);

}  // namespace lval
