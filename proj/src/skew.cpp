#include "lval/skew.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lval {

SkewMatrix::SkewMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative dimension");
    upper_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Rational(0));
}

void SkewMatrix::check_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("skew matrix index");
}

Rational SkewMatrix::at(int i, int j) const {
    check_index(i, j);
    if (i == j) return Rational(0);
    if (i > j) return -at(j, i);
    // strict upper triangle, row-major: row i (1-based) starts after
    // (i-1) rows of lengths n-1, n-2, ...
    const std::size_t row_start = static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2;
    return upper_[row_start + static_cast<std::size_t>(j - i - 1)];
}

void SkewMatrix::set(int i, int j, const Rational& value) {
    check_index(i, j);
    if (i == j) {
        if (value != 0) throw std::invalid_argument("nonzero diagonal entry");
        return;
    }
    if (i > j) {
        set(j, i, -value);
        return;
    }
    const std::size_t row_start = static_cast<std::size_t>(i - 1) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2;
    upper_[row_start + static_cast<std::size_t>(j - i - 1)] = value;
}

SkewMatrix SkewMatrix::from_grid(const std::vector<std::vector<Rational>>& grid) {
    const int n = static_cast<int>(grid.size());
    SkewMatrix a(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(grid[i].size()) != n) throw std::invalid_argument("grid is not square");
        if (grid[i][i] != 0) throw std::invalid_argument("grid has nonzero diagonal");
        for (int j = i + 1; j < n; ++j) {
            if (grid[i][j] != -grid[j][i]) throw std::invalid_argument("grid is not antisymmetric");
            a.set(i + 1, j + 1, grid[i][j]);
        }
    }
    return a;
}

SkewMatrix SkewMatrix::from_triple(const Rational& a12, const Rational& a13, const Rational& a23) {
    SkewMatrix a(3);
    a.set(1, 2, a12);
    a.set(1, 3, a13);
    a.set(2, 3, a23);
    return a;
}

bool SkewMatrix::operator==(const SkewMatrix& rhs) const {
    return n_ == rhs.n_ && upper_ == rhs.upper_;
}

RatMatrix SkewMatrix::to_matrix() const {
    RatMatrix m(n_, n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) m.at(i - 1, j - 1) = at(i, j);
    }
    return m;
}

SkewMatrix support_minor(const SkewMatrix& a, const std::vector<int>& support) {
    const int k = static_cast<int>(support.size());
    for (int t = 0; t < k; ++t) {
        if (support[t] < 1 || support[t] > a.n()) throw std::out_of_range("support index");
        if (t > 0 && support[t] <= support[t - 1]) throw std::invalid_argument("support not strictly increasing");
    }
    SkewMatrix out(k);
    for (int u = 1; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) out.set(u, v, a.at(support[u - 1], support[v - 1]));
    }
    return out;
}

RatMatrix delete_row_col(const SkewMatrix& a, int i, int j) {
    if (i < 1 || i > a.n() || j < 1 || j > a.n()) throw std::out_of_range("minor index");
    RatMatrix out(a.n() - 1, a.n() - 1);
    for (int r = 1, ro = 0; r <= a.n(); ++r) {
        if (r == i) continue;
        for (int c = 1, co = 0; c <= a.n(); ++c) {
            if (c == j) continue;
            out.at(ro, co) = a.at(r, c);
            ++co;
        }
        ++ro;
    }
    return out;
}

SkewMatrix delete_index(const SkewMatrix& a, int i) {
    if (i < 1 || i > a.n()) throw std::out_of_range("minor index");
    std::vector<int> keep;
    for (int t = 1; t <= a.n(); ++t) {
        if (t != i) keep.push_back(t);
    }
    return support_minor(a, keep);
}

SkewMatrix delete_both(const SkewMatrix& a, int i, int j) {
    if (i == j) throw std::invalid_argument("indices must differ");
    if (i < 1 || i > a.n() || j < 1 || j > a.n()) throw std::out_of_range("minor index");
    std::vector<int> keep;
    for (int t = 1; t <= a.n(); ++t) {
        if (t != i && t != j) keep.push_back(t);
    }
    return support_minor(a, keep);
}

int heaviside(long x) {
    return x > 0 ? 1 : 0;
}

PfaffianCache::PfaffianCache(const SkewMatrix& a) : a_(a) {
    if (a.n() > 25) throw std::invalid_argument("pfaffian cache limited to n <= 25");
    full_mask_ = a.n() == 0 ? 0u : ((std::uint32_t{1} << a.n()) - 1);
}

Rational PfaffianCache::of_subset(std::uint32_t mask) {
    const int size = std::popcount(mask);
    if (size == 0) return Rational(1);
    if (size % 2 != 0) return Rational(0);
    auto hit = memo_.find(mask);
    if (hit != memo_.end()) return hit->second;

    // Expand along the smallest index in the subset; the residual sign of
    // pairing position 1 with position j is (-1)^j.
    const int first = std::countr_zero(mask);
    Rational sum(0);
    int pos = 1;
    for (int other = first + 1; other < a_.n(); ++other) {
        if (!(mask & (std::uint32_t{1} << other))) continue;
        ++pos;
        const Rational entry = a_.at(first + 1, other + 1);
        if (entry != 0) {
            const std::uint32_t rest = mask & ~(std::uint32_t{1} << first) & ~(std::uint32_t{1} << other);
            const Rational sub = of_subset(rest);
            if (pos % 2 == 0) {
                sum += entry * sub;
            } else {
                sum -= entry * sub;
            }
        }
    }
    memo_.emplace(mask, sum);
    return sum;
}

Rational PfaffianCache::full() {
    return of_subset(full_mask_);
}

Rational PfaffianCache::without(int i) {
    if (i < 1 || i > a_.n()) throw std::out_of_range("pfaffian minor index");
    return of_subset(full_mask_ & ~(std::uint32_t{1} << (i - 1)));
}

Rational PfaffianCache::without(int i, int j) {
    if (i == j) throw std::invalid_argument("indices must differ");
    if (i < 1 || i > a_.n() || j < 1 || j > a_.n()) throw std::out_of_range("pfaffian minor index");
    return of_subset(full_mask_ & ~(std::uint32_t{1} << (i - 1)) & ~(std::uint32_t{1} << (j - 1)));
}

Rational pfaffian(const SkewMatrix& a) {
    PfaffianCache cache(a);
    return cache.full();
}

Rational pfaffian_along_row(const SkewMatrix& a, int row) {
    if (a.n() == 0) return Rational(1);
    if (a.n() % 2 != 0) return Rational(0);
    if (row < 1 || row > a.n()) throw std::out_of_range("expansion row");
    PfaffianCache cache(a);
    Rational sum(0);
    for (int j = 1; j <= a.n(); ++j) {
        if (j == row) continue;
        const Rational entry = a.at(row, j);
        if (entry == 0) continue;
        const Rational sub = cache.without(row, j);
        const int exponent = row + j + heaviside(j - row);
        if (exponent % 2 == 0) {
            sum += entry * sub;
        } else {
            sum -= entry * sub;
        }
    }
    return sum;
}

std::pair<Rational, Rational> lemma3_sides(const SkewMatrix& a, int i, int j) {
    if (a.n() % 2 != 0 || a.n() <= 2) throw std::invalid_argument("even dimension > 2 required");
    if (i == j) throw std::invalid_argument("indices must differ");
    const Rational det_side = determinant(delete_row_col(a, i, j));
    PfaffianCache cache(a);
    Rational pf_side = cache.full() * cache.without(i, j);
    if (heaviside(j - i) % 2 != 0) pf_side = -pf_side;
    return {det_side, pf_side};
}

std::pair<Rational, Rational> lemma4_sides(const SkewMatrix& a, int i, int j) {
    if (a.n() % 2 == 0) throw std::invalid_argument("odd dimension required");
    const Rational det_side = determinant(delete_row_col(a, i, j));
    PfaffianCache cache(a);
    const Rational pf_side = cache.without(i) * cache.without(j);
    return {det_side, pf_side};
}

SkewMatrix apply_permutation(const SkewMatrix& a, const std::vector<int>& tau) {
    const int n = a.n();
    if (static_cast<int>(tau.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n + 1, false);
    for (int image : tau) {
        if (image < 1 || image > n || seen[image]) throw std::invalid_argument("not a permutation of 1..n");
        seen[image] = true;
    }
    SkewMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out.set(i, j, a.at(tau[i - 1], tau[j - 1]));
    }
    return out;
}

}  // namespace lval
