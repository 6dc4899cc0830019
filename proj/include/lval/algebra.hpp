#pragma once

#include <string>
#include <vector>

#include "lval/skew.hpp"

namespace lval {

/// Element of an n-dimensional algebra in basis coordinates.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static Element zero(int n) { return Element(std::vector<Rational>(n, Rational(0))); }
    static Element basis(int n, int i);  // e_i, 1-based

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[i - 1]; }  // 1-based
    Rational& operator[](int i) { return coords_[i - 1]; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// Sum of coordinates (the weight homomorphism applied to this element).
    Rational weight() const;

    /// 1-based indices of nonzero coordinates, ascending.
    std::vector<int> support() const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Rational& s) const;
    bool operator==(const Element& rhs) const { return coords_ == rhs.coords_; }
    bool is_zero() const;

    /// Text form "(3/2, -1, 0)".
    std::string to_text() const;
    static Element from_text(const std::string& text);

private:
    std::vector<Rational> coords_;
};

/// Commutative algebra attached to an antisymmetric matrix A: basis
/// products e_i e_j = (1/2 + a_ij) e_i + (1/2 + a_ji) e_j. Weight-1
/// elements form a hyperplane closed under multiplication.
class LVAlgebra {
public:
    explicit LVAlgebra(SkewMatrix a) : a_(std::move(a)) {}

    int dim() const { return a_.n(); }
    const SkewMatrix& matrix() const { return a_; }

    /// The linear form x ->  sum_j a_ij x_j (i is 1-based).
    Rational omega_i(int i, const Element& x) const;

    Element multiply(const Element& x, const Element& y) const;

    /// Independent squaring path: x^2 = w(x) x + 2 sum_i x_i omega_i(x) e_i.
    Element square(const Element& x) const;

private:
    SkewMatrix a_;
};

/// Outcome of the weight-uniqueness decision. When not unique, (I, J) is a
/// nontrivial bipartition with e_i e_j = e_i for every i in I, j in J, and
/// the 0/1 character it induces is an independent weight homomorphism.
struct WeightUniqueness {
    enum class Status { Unique, NotUnique, Undecided };
    Status status = Status::Unique;
    std::vector<int> I;
    std::vector<int> J;
};

/// Decides whether the weight homomorphism is the only one sending every
/// basis vector to 1. Pairs with a_ij outside {1/2,-1/2} are forced into
/// the same block, so the search runs over connected components; it gives
/// up (Undecided) only past `component_bound` components.
WeightUniqueness is_weight_unique(const LVAlgebra& alg, int component_bound = 20);

}  // namespace lval
