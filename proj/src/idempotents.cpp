#include "lval/idempotents.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace lval {

namespace {

std::string describe_support(const std::vector<int>& support) {
    std::ostringstream out;
    out << '{';
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (t) out << ',';
        out << support[t];
    }
    out << '}';
    return out.str();
}

void verify_idempotent(const LVAlgebra& alg, const Element& e, const std::vector<int>& support,
                       int weight_class) {
    if (alg.square(e) != e || e.weight() != weight_class || e.support() != support) {
        throw std::logic_error("constructed element is not a weight-" + std::to_string(weight_class) +
                               " idempotent with support " + describe_support(support));
    }
}

bool condition_less(const AffineCondition& lhs, const AffineCondition& rhs) {
    if (lhs.coeffs != rhs.coeffs) {
        return std::lexicographical_compare(lhs.coeffs.begin(), lhs.coeffs.end(),
                                            rhs.coeffs.begin(), rhs.coeffs.end());
    }
    return lhs.constant < rhs.constant;
}

/// Classifies the affine set {particular + span(basis)} intersected with
/// the all-support-coordinates-nonzero condition. Canonicalizes so equal
/// solution sets compare equal member-wise.
SupportSolution build_solution(const LVAlgebra& alg, const std::vector<int>& support, int weight_class,
                               std::vector<Rational> particular,
                               const std::vector<std::vector<Rational>>& basis_rows) {
    const int n = alg.dim();
    SupportSolution sol;
    sol.support = support;
    sol.weight_class = weight_class;

    RatMatrix rows(basis_rows.size(), n);
    for (std::size_t r = 0; r < basis_rows.size(); ++r) {
        for (int j = 0; j < n; ++j) rows.at(r, j) = basis_rows[r][j];
    }
    const std::vector<std::size_t> pivot_cols = reduced_row_echelon(rows);

    std::vector<std::vector<Rational>> basis;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        std::vector<Rational> row(n);
        for (int j = 0; j < n; ++j) row[j] = rows.at(r, j);
        basis.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        const Rational coef = particular[pivot_cols[r]];
        if (coef == 0) continue;
        for (int j = 0; j < n; ++j) particular[j] -= coef * basis[r][j];
    }

    if (basis.empty()) {
        Element candidate{particular};
        for (int i : support) {
            if (candidate[i] == 0) return sol;  // support shrank: Empty
        }
        verify_idempotent(alg, candidate, support, weight_class);
        sol.status = SupportSolution::Status::Point;
        sol.point = std::move(candidate);
        return sol;
    }

    AffineFamily fam;
    fam.particular = std::move(particular);
    fam.basis = std::move(basis);
    for (std::size_t c : pivot_cols) fam.pivots.push_back(static_cast<int>(c) + 1);

    for (int i : support) {
        AffineCondition cond;
        cond.constant = fam.particular[i - 1];
        bool any_coeff = false;
        for (const auto& row : fam.basis) {
            cond.coeffs.push_back(row[i - 1]);
            if (row[i - 1] != 0) any_coeff = true;
        }
        if (!any_coeff) {
            if (cond.constant == 0) return sol;  // coordinate vanishes identically: Empty
            continue;                            // constant nonzero: vacuous
        }
        // Nonvanishing survives scaling; normalize the leading coefficient.
        Rational lead;
        for (const Rational& c : cond.coeffs) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        cond.constant /= lead;
        for (Rational& c : cond.coeffs) c /= lead;
        fam.exclusions.push_back(std::move(cond));
    }
    std::sort(fam.exclusions.begin(), fam.exclusions.end(), condition_less);
    fam.exclusions.erase(std::unique(fam.exclusions.begin(), fam.exclusions.end()), fam.exclusions.end());

    sol.status = SupportSolution::Status::Family;
    sol.family = std::move(fam);
    verify_idempotent(alg, sol.family.sample_member(), support, weight_class);
    return sol;
}

std::vector<int> full_support(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

bool is_zero_block(const SkewMatrix& b) {
    for (int i = 1; i <= b.n(); ++i) {
        for (int j = i + 1; j <= b.n(); ++j) {
            if (b.at(i, j) != 0) return false;
        }
    }
    return true;
}

/// Weight-1 solutions of a zero block: the whole weight hyperplane.
SupportPair zero_block_pair(const LVAlgebra& local) {
    const int k = local.dim();
    SupportPair pair;
    pair.weight0.support = full_support(k);
    pair.weight0.weight_class = 0;
    std::vector<Rational> particular(k, Rational(0));
    particular[0] = 1;
    std::vector<std::vector<Rational>> basis;
    for (int v = 2; v <= k; ++v) {
        std::vector<Rational> row(k, Rational(0));
        row[0] = -1;
        row[v - 1] = 1;
        basis.push_back(std::move(row));
    }
    pair.weight1 = build_solution(local, full_support(k), 1, std::move(particular), basis);
    return pair;
}

}  // namespace

Element AffineFamily::member(const std::vector<Rational>& params) const {
    std::vector<Rational> coords = particular;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (params.at(t) == 0) continue;
        for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += params[t] * basis[t][j];
    }
    return Element(std::move(coords));
}

bool AffineFamily::params_allowed(const std::vector<Rational>& params) const {
    for (const AffineCondition& cond : exclusions) {
        Rational value = cond.constant;
        for (std::size_t t = 0; t < cond.coeffs.size(); ++t) value += cond.coeffs[t] * params.at(t);
        if (value == 0) return false;
    }
    return true;
}

Element AffineFamily::sample_member() const {
    // params (m, m^2, ...): each exclusion is a nonzero polynomial in m of
    // degree <= param_count, so small m always escapes every root.
    for (long m = 1;; ++m) {
        std::vector<Rational> params;
        Rational p(1);
        for (int t = 0; t < param_count(); ++t) {
            p *= m;
            params.push_back(p);
        }
        if (params_allowed(params)) return member(params);
    }
}

SupportSolution idempotents_with_support(const LVAlgebra& alg, const std::vector<int>& support,
                                         int weight_class) {
    if (weight_class != 0 && weight_class != 1) throw std::invalid_argument("weight class must be 0 or 1");
    if (support.empty()) throw std::invalid_argument("support must be nonempty");
    const SkewMatrix block = support_minor(alg.matrix(), support);  // validates the indices
    const int k = block.n();

    RatMatrix system(k + 1, k);
    std::vector<Rational> rhs(k + 1);
    for (int v = 0; v < k; ++v) system.at(0, v) = 1;
    rhs[0] = weight_class;
    const Rational row_target = weight_class == 0 ? rat(1, 2) : Rational(0);
    for (int u = 1; u <= k; ++u) {
        for (int v = 1; v <= k; ++v) system.at(u, v - 1) = block.at(u, v);
        rhs[u] = row_target;
    }

    const AffineSolutionSet raw = solve_affine(system, rhs);
    SupportSolution sol;
    sol.support = support;
    sol.weight_class = weight_class;
    if (raw.empty) return sol;

    const int n = alg.dim();
    std::vector<Rational> particular(n, Rational(0));
    for (int v = 0; v < k; ++v) particular[support[v] - 1] = raw.particular[v];
    std::vector<std::vector<Rational>> basis;
    for (const auto& vec : raw.nullspace_basis) {
        std::vector<Rational> row(n, Rational(0));
        for (int v = 0; v < k; ++v) row[support[v] - 1] = vec[v];
        basis.push_back(std::move(row));
    }
    return build_solution(alg, support, weight_class, std::move(particular), basis);
}

SupportPair idempotents_with_support(const LVAlgebra& alg, const std::vector<int>& support) {
    return {idempotents_with_support(alg, support, 0), idempotents_with_support(alg, support, 1)};
}

SupportPair dim3_closed_form(const SkewMatrix& block) {
    if (block.n() != 3) throw std::invalid_argument("3x3 block required");
    const Rational a = block.at(1, 2);
    const Rational b = block.at(1, 3);
    const Rational c = block.at(2, 3);
    if (a == 0) throw inapplicable_error("entry (1,2) is zero; renumber the support first");
    const LVAlgebra local{block};
    const std::vector<int> supp = full_support(3);

    SupportPair pair;
    pair.weight0.support = supp;
    pair.weight1.support = supp;
    pair.weight1.weight_class = 1;

    if (b != a + c && a * b * c != 0) {
        const Rational denom = a + c - b;
        pair.weight1 = build_solution(local, supp, 1, {c / denom, -b / denom, a / denom}, {});
    }
    if (b == a + c) {
        const Rational inv2a = 1 / (2 * a);
        std::vector<Rational> particular{-inv2a, inv2a, Rational(0)};
        std::vector<std::vector<Rational>> basis{{c / a, -b / a, Rational(1)}};
        pair.weight0 = build_solution(local, supp, 0, std::move(particular), basis);
    }
    return pair;
}

Dim4Invariants dim4_invariants(const SkewMatrix& block) {
    if (block.n() != 4) throw std::invalid_argument("4x4 block required");
    Dim4Invariants inv;
    inv.a1 = block.at(1, 2);
    inv.b1 = block.at(1, 3);
    inv.c1 = block.at(1, 4);
    inv.a2 = block.at(2, 3);
    inv.b2 = block.at(2, 4);
    inv.a3 = block.at(3, 4);
    inv.delta = inv.a1 * inv.a3 + inv.a2 * inv.c1 - inv.b1 * inv.b2;
    inv.delta1 = inv.a2 + inv.a3 - inv.b2;
    inv.delta2 = inv.a3 + inv.b1 - inv.c1;
    inv.delta3 = inv.a1 + inv.b2 - inv.c1;
    inv.delta4 = inv.a1 + inv.a2 - inv.b1;
    return inv;
}

SupportPair dim4_closed_form(const SkewMatrix& block) {
    const Dim4Invariants inv = dim4_invariants(block);
    if (inv.a1 == 0) throw inapplicable_error("entry (1,2) is zero; renumber the support first");
    const LVAlgebra local{block};
    const std::vector<int> supp = full_support(4);

    SupportPair pair;
    pair.weight0.support = supp;
    pair.weight1.support = supp;
    pair.weight1.weight_class = 1;

    if (inv.delta != 0) {
        // Invertible block: the weight-0 system has exactly one solution.
        const Rational scale = 1 / (2 * inv.delta);
        pair.weight0 = build_solution(
            local, supp, 0,
            {-inv.delta1 * scale, inv.delta2 * scale, -inv.delta3 * scale, inv.delta4 * scale}, {});
        return pair;
    }
    if (inv.delta4 != 0) {
        // Weight-1 line parameterized by the last coordinate.
        const Rational l3 = inv.a1 / inv.delta4;
        const Rational l2 = -(inv.b1 * l3) / inv.a1;
        std::vector<Rational> particular{1 - l2 - l3, l2, l3, Rational(0)};
        const Rational d3 = -inv.delta3 / inv.delta4;
        const Rational d2 = -(inv.b1 * d3 + inv.c1) / inv.a1;
        std::vector<std::vector<Rational>> basis{{-d2 - d3 - 1, d2, d3, Rational(1)}};
        pair.weight1 = build_solution(local, supp, 1, std::move(particular), basis);
        return pair;
    }
    if (inv.delta3 != 0) {
        // Weight-1 line parameterized by the third coordinate.
        const Rational l4 = inv.a1 / inv.delta3;
        const Rational l2 = -(inv.c1 * l4) / inv.a1;
        std::vector<Rational> particular{1 - l2 - l4, l2, Rational(0), l4};
        const Rational d2 = -inv.b1 / inv.a1;
        std::vector<std::vector<Rational>> basis{{-d2 - 1, d2, Rational(1), Rational(0)}};
        pair.weight1 = build_solution(local, supp, 1, std::move(particular), basis);
        return pair;
    }
    // Fully degenerate case: a weight-0 plane in the last two coordinates.
    const Rational l2 = rat(1, 2) / inv.a1;
    std::vector<Rational> particular{-l2, l2, Rational(0), Rational(0)};
    const Rational s2 = -inv.b1 / inv.a1;
    const Rational t2 = -inv.c1 / inv.a1;
    std::vector<std::vector<Rational>> basis{
        {-s2 - 1, s2, Rational(1), Rational(0)},
        {-t2 - 1, t2, Rational(0), Rational(1)},
    };
    pair.weight0 = build_solution(local, supp, 0, std::move(particular), basis);
    return pair;
}

std::optional<SupportPair> closed_form_with_support(const LVAlgebra& alg, const std::vector<int>& support) {
    const SkewMatrix block = support_minor(alg.matrix(), support);
    const int k = block.n();
    const int n = alg.dim();
    const LVAlgebra local{block};

    SupportPair local_pair;
    std::vector<int> tau(k);
    std::iota(tau.begin(), tau.end(), 1);

    if (k == 1) {
        local_pair.weight0.support = {1};
        local_pair.weight1.support = {1};
        local_pair.weight1.weight_class = 1;
        local_pair.weight1 = build_solution(local, {1}, 1, {Rational(1)}, {});
    } else if (is_zero_block(block)) {
        local_pair = zero_block_pair(local);
    } else if (k == 2) {
        const Rational a = block.at(1, 2);
        local_pair.weight0.support = full_support(2);
        local_pair.weight1.support = full_support(2);
        local_pair.weight1.weight_class = 1;
        const Rational inv2a = 1 / (2 * a);
        local_pair.weight0 = build_solution(local, full_support(2), 0, {-inv2a, inv2a}, {});
    } else if (k == 3 || k == 4) {
        // First relabelling (in lexicographic order) with a nonzero (1,2) slot.
        do {
            if (block.at(tau[0], tau[1]) != 0) break;
        } while (std::next_permutation(tau.begin(), tau.end()));
        const SkewMatrix relabelled = apply_permutation(block, tau);
        local_pair = k == 3 ? dim3_closed_form(relabelled) : dim4_closed_form(relabelled);
    } else {
        return std::nullopt;
    }

    // Pull back: local slot u of the relabelled block is global index
    // support[tau[u]-1].
    auto embed = [&](const std::vector<Rational>& local_vec) {
        std::vector<Rational> global_vec(n, Rational(0));
        for (int u = 0; u < k; ++u) global_vec[support[tau[u] - 1] - 1] = local_vec[u];
        return global_vec;
    };
    auto pull_back = [&](const SupportSolution& ls, int weight_class) {
        SupportSolution out;
        out.support = support;
        out.weight_class = weight_class;
        if (ls.status == SupportSolution::Status::Empty) return out;
        if (ls.status == SupportSolution::Status::Point) {
            return build_solution(alg, support, weight_class, embed(ls.point.coords()), {});
        }
        std::vector<std::vector<Rational>> basis;
        for (const auto& row : ls.family.basis) basis.push_back(embed(row));
        return build_solution(alg, support, weight_class, embed(ls.family.particular), basis);
    };

    SupportPair out;
    out.weight0 = pull_back(local_pair.weight0, 0);
    out.weight1 = pull_back(local_pair.weight1, 1);
    return out;
}

Theorem1Result theorem1_full_support(const LVAlgebra& alg) {
    const int n = alg.dim();
    Theorem1Result result;
    if (n == 0) {
        result.reason = "empty algebra";
        return result;
    }
    PfaffianCache cache(alg.matrix());
    const std::vector<int> supp = full_support(n);

    if (n % 2 == 0) {
        const Rational pf = cache.full();
        if (pf == 0) {
            result.reason = "pfaffian (hence determinant) vanishes";
            return result;
        }
        const Rational scale = 1 / (2 * pf);
        std::vector<Rational> lambda(n);
        for (int j = 1; j <= n; ++j) {
            Rational sum(0);
            for (int i = 1; i <= n; ++i) {
                if (i == j) continue;
                const Rational sub = cache.without(i, j);
                if (sub == 0) continue;
                const int exponent = i + j + heaviside(j - i);
                if (exponent % 2 == 0) {
                    sum += sub;
                } else {
                    sum -= sub;
                }
            }
            lambda[j - 1] = sum * scale;
        }
        result.applicable = true;
        result.solution = build_solution(alg, supp, 0, std::move(lambda), {});
        return result;
    }

    Rational d(0);
    std::vector<Rational> minor_pf(n);
    for (int i = 1; i <= n; ++i) {
        minor_pf[i - 1] = cache.without(i);
        if (i % 2 == 0) {
            d += minor_pf[i - 1];
        } else {
            d -= minor_pf[i - 1];
        }
    }
    if (d == 0) {
        result.reason = "alternating sum of principal pfaffians vanishes";
        return result;
    }
    std::vector<Rational> lambda(n);
    for (int j = 1; j <= n; ++j) {
        lambda[j - 1] = (j % 2 == 0 ? minor_pf[j - 1] : -minor_pf[j - 1]) / d;
    }
    result.applicable = true;
    result.solution = build_solution(alg, supp, 1, std::move(lambda), {});
    return result;
}

EnumerationReport enumerate_all(const LVAlgebra& alg, int max_dim) {
    const int n = alg.dim();
    if (n > max_dim) {
        throw inapplicable_error("dimension " + std::to_string(n) + " exceeds enumeration bound " +
                                 std::to_string(max_dim));
    }
    EnumerationReport report;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> support;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) support.push_back(v + 1);
        }
        SupportPair pair = idempotents_with_support(alg, support);
        for (const SupportSolution* sol : {&pair.weight0, &pair.weight1}) {
            if (sol->status == SupportSolution::Status::Point) ++report.point_count_nonzero;
            if (sol->status == SupportSolution::Status::Family) {
                report.has_family = true;
                report.family_supports.push_back(support);
            }
        }
        report.supports.push_back(std::move(pair));
    }
    report.point_count_with_zero = report.point_count_nonzero + 1;
    std::sort(report.family_supports.begin(), report.family_supports.end());
    report.family_supports.erase(std::unique(report.family_supports.begin(), report.family_supports.end()),
                                 report.family_supports.end());
    return report;
}

Question1Report question1_check(const LVAlgebra& alg, int max_support_size) {
    const int n = alg.dim();
    if (n > 25) throw inapplicable_error("dimension too large for support sweep");
    Question1Report report;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > max_support_size) continue;
        std::vector<int> support;
        for (int v = 0; v < n; ++v) {
            if (mask & (std::uint32_t{1} << v)) support.push_back(v + 1);
        }
        const SupportPair pair = idempotents_with_support(alg, support);
        ++report.supports_checked;
        if (pair.weight0.nonempty() && pair.weight1.nonempty()) {
            report.counterexamples.push_back(support);
        }
    }
    return report;
}

}  // namespace lval
