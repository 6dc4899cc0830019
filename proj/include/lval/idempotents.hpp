#pragma once

#include <optional>
#include <vector>

#include "lval/algebra.hpp"
#include "lval/errors.hpp"

namespace lval {

/// Affine condition on family parameters: constant + coeffs . c != 0.
struct AffineCondition {
    Rational constant;
    std::vector<Rational> coeffs;
    bool operator==(const AffineCondition&) const = default;
};

/// Nonempty affine family of idempotents, canonicalized: basis rows are in
/// reduced echelon form, the particular solution vanishes on the pivot
/// coordinates, and the parameters are exactly the pivot coordinates of a
/// member. Exclusions carve out the members whose support would shrink.
struct AffineFamily {
    std::vector<Rational> particular;           // full-dimension coordinates
    std::vector<std::vector<Rational>> basis;   // echelon rows, full dimension
    std::vector<int> pivots;                    // 1-based coordinate indices
    std::vector<AffineCondition> exclusions;

    int param_count() const { return static_cast<int>(basis.size()); }
    Element member(const std::vector<Rational>& params) const;
    bool params_allowed(const std::vector<Rational>& params) const;
    /// Deterministic member satisfying every exclusion.
    Element sample_member() const;

    bool operator==(const AffineFamily&) const = default;
};

/// Idempotents with a prescribed support and weight class.
struct SupportSolution {
    enum class Status { Empty, Point, Family };

    std::vector<int> support;
    int weight_class = 0;  // 0 or 1
    Status status = Status::Empty;
    Element point;         // valid when status == Point
    AffineFamily family;   // valid when status == Family

    bool nonempty() const { return status != Status::Empty; }
    bool operator==(const SupportSolution&) const = default;
};

/// Both weight classes for one support.
struct SupportPair {
    SupportSolution weight0;
    SupportSolution weight1;
    bool operator==(const SupportPair&) const = default;
};

/// Reference route: solves the bordered linear system (weight row plus the
/// support rows of A) exactly, then applies the open all-coordinates-nonzero
/// condition. This is the oracle every closed form is checked against.
SupportSolution idempotents_with_support(const LVAlgebra& alg, const std::vector<int>& support,
                                         int weight_class);
SupportPair idempotents_with_support(const LVAlgebra& alg, const std::vector<int>& support);

/// Dimension-3 closed form on a 3x3 block with entries a=at(1,2), b=at(1,3),
/// c=at(2,3). Requires a != 0 (renumber first; see closed_form_with_support).
/// Weight 1: the single point (c, -b, a)/(a+c-b) iff b != a+c and abc != 0.
/// Weight 0: a one-parameter family iff b = a+c.
SupportPair dim3_closed_form(const SkewMatrix& block);

/// The six independent entries of a 4x4 block and the derived quantities
/// steering the dimension-4 case split.
struct Dim4Invariants {
    Rational a1, b1, c1, a2, b2, a3;
    Rational delta;                      // = pfaffian of the block
    Rational delta1, delta2, delta3, delta4;
};

Dim4Invariants dim4_invariants(const SkewMatrix& block);

/// Dimension-4 closed form; requires at(1,2) != 0. Case split on
/// (delta, delta4, delta3): point, two flavors of weight-1 line, or a
/// weight-0 plane.
SupportPair dim4_closed_form(const SkewMatrix& block);

/// Closed form for an arbitrary support of size <= 4 (or a zero block of
/// any size): picks a renumbering putting a nonzero entry in slot (1,2),
/// computes in the relabelled basis and pulls the answer back. Returns
/// nullopt when no closed form covers the support (size >= 5, nonzero).
std::optional<SupportPair> closed_form_with_support(const LVAlgebra& alg,
                                                    const std::vector<int>& support);

/// Full-support candidate from the pfaffian formulas.
/// Even dimension: applicable iff pf(A) != 0; candidate weight 0 with
///   lambda_j = (1/2pf(A)) sum_i (-1)^(i+j+theta(j-i)) pf(A without i,j).
/// Odd dimension: applicable iff d = sum_i (-1)^i pf(A without i) != 0;
///   candidate weight 1 with lambda_j = (-1)^j pf(A without j) / d.
/// The candidate becomes Empty when some coordinate vanishes.
struct Theorem1Result {
    bool applicable = false;
    std::string reason;        // set when not applicable
    SupportSolution solution;  // set when applicable
};

Theorem1Result theorem1_full_support(const LVAlgebra& alg);

/// Everything per support, plus both census conventions (the zero element
/// is idempotent and counted separately).
struct EnumerationReport {
    std::vector<SupportPair> supports;  // ascending bitmask order
    long point_count_nonzero = 0;
    long point_count_with_zero = 1;
    bool has_family = false;
    std::vector<std::vector<int>> family_supports;
};

EnumerationReport enumerate_all(const LVAlgebra& alg, int max_dim = 12);

/// Looks for a support carrying idempotents of both weights.
struct Question1Report {
    long supports_checked = 0;
    std::vector<std::vector<int>> counterexamples;
    bool weight_determined_by_support() const { return counterexamples.empty(); }
};

Question1Report question1_check(const LVAlgebra& alg, int max_support_size);

}  // namespace lval
