#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lval/algebra.hpp"
#include "lval/errors.hpp"
#include "lval/idempotents.hpp"
#include "lval/matrix.hpp"

namespace lval {

/// Linear map on the algebra as an n x n matrix: column j holds the
/// coordinates of the image of e_j. Composition is the matrix product,
/// so (f * g) applies g first.
using LinearMap = RatMatrix;

LinearMap identity_map(int n);
Element apply_map(const LinearMap& f, const Element& x);

/// True iff f is invertible and f(e_i) f(e_j) = f(e_i e_j) for all pairs
/// i <= j, exactly. Bilinearity makes the basis check sufficient.
bool is_automorphism(const LVAlgebra& alg, const LinearMap& f);

/// The involution that rewrites e_k as e_{k-1} - e_k + e_{k+1} and fixes
/// the rest of the basis. Defined for 2 <= k <= n-1 on algebras whose
/// matrix is constant above the diagonal; rejects other inputs.
LinearMap elementary_sigma(const LVAlgebra& alg, int k);

/// True iff the weight form is preserved, i.e. every column of f sums
/// to 1 (so f maps the weight-1 hyperplane onto itself). Requires f to
/// be an automorphism.
bool check_H_preservation(const LVAlgebra& alg, const LinearMap& f);

/// Infinite parameterized piece of an automorphism group.
struct FamilyDescriptor {
    std::string tag;  // "g", "f", "weight_preserving", "block"
    int arity = 0;    // number of free rational parameters
    bool operator==(const FamilyDescriptor&) const = default;
};

/// Description of an automorphism group: a finite, verified element list
/// (sorted, closed under composition) and/or parameterized families.
struct AutDescription {
    enum class Kind { Trivial, FiniteList, ParamFamily, Mixed };

    Kind kind = Kind::Trivial;
    std::vector<LinearMap> elements;          // finite part, sorted
    std::vector<FamilyDescriptor> families;   // infinite part
    long order = 1;                           // -1 means infinite
    std::string iso_tag;                      // "C1".."C7","C2xC2","S3",... or ""
    // table[i][j] = index of elements[i] composed-with elements[j];
    // empty when the group is infinite.
    std::vector<std::vector<int>> table;
};

/// Identifies small groups by order, abelianness and element orders
/// (unambiguous through order 8). Empty string when unrecognized.
std::string small_group_tag(const std::vector<LinearMap>& elements,
                            const std::vector<std::vector<int>>& table);

/// Exhaustive search through the finite idempotent set: picks a spanning
/// basis B of point idempotents (weight-1 points first), tries every
/// injective assignment B -> Id, keeps the linear extensions that verify
/// as automorphisms, and returns the resulting group with its table.
struct BruteForceResult {
    enum class Status { Ok, NotApplicable, CapExceeded };
    Status status = Status::Ok;
    std::string reason;            // set when status != Ok
    AutDescription description;    // valid when status == Ok
    std::vector<Element> idempotent_points;  // nonzero points found
};

BruteForceResult brute_force_automorphisms(const LVAlgebra& alg, int idempotent_cap = 16);

/// g_{a,b}: e_1 -> e_1, e_2 -> u_a, e_3 -> u_b with u_t = t e_2 + (1-t) e_3.
/// Requires a 3x3 matrix of the shape Skew(r,r,0), r != 0, and a != b.
/// The result is verified with is_automorphism before it is returned.
LinearMap family_g(const LVAlgebra& alg, const Rational& a, const Rational& b);

/// f^(eps)_{a,b}: e_1 -> e_1, e_k -> eps(-e_1 + g_{a,b}(e_k)) for k = 2,3.
/// Requires the matrix Skew(eps/2, eps/2, 0) with eps = +-1 and a != b.
/// Verified with is_automorphism before returning; for eps = +1 the
/// formula fails that check (see family_f_defect) and this throws
/// oracle_mismatch_error, deliberately: the check is the authority.
LinearMap family_f(const LVAlgebra& alg, int eps, const Rational& a, const Rational& b);

/// Builds the f^(eps)_{a,b} matrix without verifying it. Exposed so the
/// eps = +1 defect can be pinned down in tests.
LinearMap family_f_unchecked(int eps, const Rational& a, const Rational& b);

/// For the zero-matrix algebra: any invertible candidate whose columns all
/// sum to 1 is an automorphism. Hypotheses checked, result verified.
LinearMap family_weight_preserving(const LVAlgebra& alg, const RatMatrix& candidate);

/// Maximal index classes I (size >= 2) with a_ij = 0 inside I and
/// a_ik = a_jk for all i,j in I and k outside: the relation is an
/// equivalence, classes are listed ascending by smallest member.
std::vector<std::vector<int>> find_uniform_blocks(const SkewMatrix& a);

/// For a uniform block I: the map fixing e_k outside I and sending the
/// block basis through `inner` (|I| x |I|, column t = coordinates of the
/// image of e_{I[t]} inside the block). Columns must sum to 1 and the
/// block must be invertible. Verified before returning.
LinearMap family_block(const LVAlgebra& alg, const std::vector<int>& block,
                       const RatMatrix& inner);

/// Single dispatcher over the parameterized families, for the CLI and the
/// uniform verification tests. Layout of params per tag:
///   "g":                  {a, b}
///   "f":                  {eps, a, b}
///   "weight_preserving":  {n*n entries, row-major}
///   "block":              {k, i_1..i_k, then k*k inner entries row-major}
LinearMap family_verifier(const LVAlgebra& alg, const std::string& tag,
                          const std::vector<Rational>& params);

/// The witnesses of the eps = +1 defect: in Skew(1/2,1/2,0) the product
/// e_1 e_2 equals e_1, so any map with f(e_1) = e_1 must send it to e_1
/// again, yet the image product f(e_1) f(e_2) comes out zero. Returns
/// {f(e_1 e_2), f(e_1) f(e_2)} for the unchecked formula.
std::pair<Element, Element> family_f_defect(const LVAlgebra& alg, int eps,
                                            const Rational& a, const Rational& b);

/// Recognizes a map of g/f shape on a Skew(r,r,0)-type algebra and
/// recovers its parameters; nullopt when the map has neither shape.
struct GFParams {
    bool is_f = false;
    int eps = 1;       // meaningful when is_f
    Rational a, b;
    bool operator==(const GFParams&) const = default;
};
std::optional<GFParams> match_gf(const LinearMap& m);

/// Permutation conjugation: expresses a map given in the relabelled basis
/// {e_{tau(1)},..,e_{tau(n)}} in the original basis (P m P^T with
/// P[tau(v)][v] = 1). Inverse direction of apply_permutation on matrices.
LinearMap conjugate_map(const LinearMap& m, const std::vector<int>& tau);

/// Complete description of a 3-dimensional algebra's automorphisms.
/// `tau` witnesses the normalization: apply_permutation(input, tau) is the
/// canonical matrix, and the generators in `aut` are already expressed in
/// the *input* basis. Family tags, in dispatch order:
///   zero_matrix     Skew(0,0,0)        all weight-preserving maps
///   single_entry    Skew(r,0,0)        {Id, rho}, the involution
///                                      e_1 -> -e_2 + 2 e_3, e_2 -> -e_1 + 2 e_3
///   repeated_pair   Skew(r,r,0)        {g_{a,b}}, r not in {0,+-1/2}
///   half_pair       Skew(eps/2,eps/2,0) {f^(eps)_{a,b}, g_{a,b}}
///   minus_half_pair Skew(-1/2,-1/2,c)  {Id, eta}, c not in {0,+-1/2}
///   half_constant   Skew(-1/2,-1/2,-1/2) the order-6 group
///   constant        Skew(r,r,r)        {Id, sigma_2}, r not in {0,+-1/2}
///   alternating     Skew(r,-r,r)       {Id, rho3, rho3^2}, r != 0
///   generic         anything else      {Id}
struct Dim3Classification {
    std::string family;
    std::vector<int> tau;      // images of 1..3
    SkewMatrix canonical;      // = apply_permutation(input, tau)
    Rational r;                // canonical parameter, when the family has one
    Rational c;
    int eps = 0;               // +-1 for half_pair, else 0
    AutDescription aut;        // generators in the input basis
};

Dim3Classification classify_dim3(const LVAlgebra& alg);

}  // namespace lval
