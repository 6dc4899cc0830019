// Acceptance gate: one line per criterion, exit code = number of failures.
// Every numeric claim is checked against the independent linear-algebra
// oracle or against exact rational arithmetic; nothing here is mocked.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lval/autgroup.hpp"
#include "lval/dynamics.hpp"
#include "lval/idempotents.hpp"

using namespace lval;

namespace {

SkewMatrix constant_skew(int n, const Rational& a) {
    SkewMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) m.set(i, j, a);
    return m;
}

SkewMatrix random_skew(int n, std::mt19937& eng) {
    SkewMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            m.set(i, j, rat(static_cast<long>(eng() % 19) - 9, 1 + (eng() % 4)));
    return m;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Criterion {
    bool pass = true;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
    std::string detail(std::size_t keep = 3) const {
        std::ostringstream out;
        for (std::size_t k = 0; k < problems.size() && k < keep; ++k) {
            if (k) out << "; ";
            out << problems[k];
        }
        if (problems.size() > keep) out << "; and " << problems.size() - keep << " more";
        return out.str();
    }
};

// ---------------------------------------------------------------- criterion 1

Criterion criterion1() {
    Criterion c;
    std::mt19937 eng(1001);
    for (int n : {2, 4, 6, 8}) {
        for (int rep = 0; rep < 200 && c.pass; ++rep) {
            const SkewMatrix a = random_skew(n, eng);
            const Rational pf = pfaffian(a);
            c.require(Rational(pf * pf) == determinant(a.to_matrix()),
                      "pf^2 != det at n=" + std::to_string(n));
        }
    }
    for (int n : {4, 6}) {
        for (int rep = 0; rep < 200 && c.pass; ++rep) {
            const SkewMatrix a = random_skew(n, eng);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    const auto sides = lemma3_sides(a, i, j);
                    c.require(sides.first == sides.second,
                              "even minor identity failed at n=" + std::to_string(n));
                }
        }
    }
    for (int n : {3, 5, 7}) {
        for (int rep = 0; rep < 200 && c.pass; ++rep) {
            const SkewMatrix a = random_skew(n, eng);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const auto sides = lemma4_sides(a, i, j);
                    c.require(sides.first == sides.second,
                              "odd minor identity failed at n=" + std::to_string(n));
                }
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion criterion2() {
    Criterion c;
    const std::vector<Rational> values{rat(1), rat(-3), rat(1, 2), rat(7, 3)};
    for (const Rational& a : values) {
        for (int n = 2; n <= 8 && c.pass; ++n) {
            const LVAlgebra alg(constant_skew(n, a));
            const EnumerationReport report = enumerate_all(alg);
            const std::string where =
                " (a=" + to_string(a) + ", n=" + std::to_string(n) + ")";
            c.require(report.point_count_with_zero == (1L << n),
                      "census size != 2^n" + where);
            c.require(!report.has_family, "unexpected family" + where);
            for (const SupportPair& pair : report.supports) {
                const std::vector<int>& s = pair.weight1.support;
                const int k = static_cast<int>(s.size());
                std::vector<Rational> expected(alg.dim(), rat(0));
                if (k % 2 == 0) {
                    for (int t = 0; t < k; ++t)
                        expected[s[t] - 1] = Rational((t % 2 ? rat(1) : rat(-1)) /
                                                      Rational(rat(2) * a));
                    c.require(pair.weight0.status == SupportSolution::Status::Point &&
                                  pair.weight0.point == Element(expected),
                              "even-support point mismatch" + where);
                    c.require(pair.weight1.status == SupportSolution::Status::Empty,
                              "even support should have no weight-1 idempotent" + where);
                } else {
                    for (int t = 0; t < k; ++t)
                        expected[s[t] - 1] = t % 2 ? rat(-1) : rat(1);
                    c.require(pair.weight1.status == SupportSolution::Status::Point &&
                                  pair.weight1.point == Element(expected),
                              "odd-support point mismatch" + where);
                    c.require(pair.weight0.status == SupportSolution::Status::Empty,
                              "odd support should have no weight-0 idempotent" + where);
                }
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion3() {
    Criterion c;
    std::mt19937 eng(3003);
    for (int n : {3, 4}) {
        for (int rep = 0; rep < 500 && c.pass; ++rep) {
            const SkewMatrix m = random_skew(n, eng);
            const LVAlgebra alg(m);
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> support;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) support.push_back(i + 1);
                const auto closed = closed_form_with_support(alg, support);
                c.require(closed.has_value() &&
                              *closed == idempotents_with_support(alg, support),
                          "closed form disagrees with the oracle at n=" +
                              std::to_string(n) + " rep=" + std::to_string(rep));
                if (!c.pass) return c;
            }
            if (!(m.at(1, 2) == 0)) {
                const std::vector<int> full = [&] {
                    std::vector<int> v;
                    for (int i = 1; i <= n; ++i) v.push_back(i);
                    return v;
                }();
                const SupportPair direct =
                    n == 3 ? dim3_closed_form(m) : dim4_closed_form(m);
                c.require(direct == idempotents_with_support(alg, full),
                          "direct full-support closed form disagrees at n=" +
                              std::to_string(n));
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion4() {
    Criterion c;
    std::mt19937 eng(4004);
    for (int n : {4, 5, 6, 7}) {
        int done = 0;
        while (done < 300 && c.pass) {
            const SkewMatrix m = random_skew(n, eng);
            if (n % 2 == 0) {
                if (pfaffian(m) == 0) continue;
            } else {
                PfaffianCache cache(m);
                Rational d = rat(0);
                for (int i = 1; i <= n; ++i)
                    d += (i % 2 ? rat(-1) : rat(1)) * cache.without(i);
                if (Rational(d) == 0) continue;
            }
            ++done;
            const LVAlgebra alg(m);
            const Theorem1Result res = theorem1_full_support(alg);
            c.require(res.applicable, "formula unexpectedly inapplicable at n=" +
                                          std::to_string(n));
            if (!res.applicable) continue;
            std::vector<int> full;
            for (int i = 1; i <= n; ++i) full.push_back(i);
            const SupportSolution oracle =
                idempotents_with_support(alg, full, n % 2 == 0 ? 0 : 1);
            c.require(res.solution == oracle,
                      "full-support candidate disagrees with the oracle at n=" +
                          std::to_string(n));
        }
    }
    // The worked dimension-3 example: a12 = 1, all else 0.
    const SkewMatrix ex = SkewMatrix::from_triple(rat(1), rat(0), rat(0));
    PfaffianCache cache(ex);
    const Rational d = Rational(Rational(-cache.without(1)) + cache.without(2)) -
                       cache.without(3);
    c.require(d == rat(-1), "worked example: expected denominator -1, got " + to_string(d));
    const Theorem1Result res = theorem1_full_support(LVAlgebra(ex));
    c.require(res.applicable && res.solution.status == SupportSolution::Status::Empty,
              "worked example should be applicable with an empty cell");
    return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion5() {
    Criterion c;
    std::mt19937 eng(5005);
    long checked = 0;
    for (int rep = 0; rep < 1000 && c.pass; ++rep) {
        const int n = 2 + rep % 5;  // dimensions 2..6, 200 each
        const LVAlgebra alg(random_skew(n, eng));
        const Question1Report q = question1_check(alg, 4);
        checked += q.supports_checked;
        c.require(q.weight_determined_by_support(),
                  "support with idempotents of both weights at n=" + std::to_string(n));
    }
    c.require(checked > 0, "no supports checked");
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion6() {
    Criterion c;
    const std::vector<Rational> r_samples{rat(1), rat(2), rat(-1, 3), rat(5), rat(-2)};
    const std::vector<Rational> c_samples{rat(1), rat(3), rat(-1, 4), rat(2), rat(1, 5)};

    auto match_brute = [&](const SkewMatrix& m, long order, const std::string& label,
                           const std::string& iso = "") {
        const LVAlgebra alg(m);
        const Dim3Classification cls = classify_dim3(alg);
        c.require(cls.aut.order == order,
                  label + ": classified order " + std::to_string(cls.aut.order) +
                      ", expected " + std::to_string(order));
        if (!iso.empty())
            c.require(cls.aut.iso_tag == iso, label + ": tag '" + cls.aut.iso_tag +
                                                  "' != '" + iso + "'");
        const BruteForceResult bf = brute_force_automorphisms(alg);
        c.require(bf.status == BruteForceResult::Status::Ok,
                  label + ": exhaustive search not applicable");
        if (bf.status == BruteForceResult::Status::Ok) {
            c.require(bf.description.order == order,
                      label + ": exhaustive order " + std::to_string(bf.description.order));
            c.require(bf.description.elements == cls.aut.elements,
                      label + ": generator sets differ from the exhaustive search");
        }
    };

    for (const Rational& r : r_samples) {
        match_brute(SkewMatrix::from_triple(r, r, r), 2,
                    "repeated-entry matrix r=" + to_string(r));
        match_brute(SkewMatrix::from_triple(r, Rational(-r), r), 3,
                    "alternating matrix r=" + to_string(r), "C3");
    }
    for (const Rational& cc : c_samples) {
        match_brute(SkewMatrix::from_triple(rat(-1, 2), rat(-1, 2), cc), 2,
                    "minus-half pair c=" + to_string(cc));
        match_brute(SkewMatrix::from_triple(rat(1, 2), rat(1, 2), cc), 1,
                    "plus-half pair c=" + to_string(cc), "C1");
    }
    match_brute(constant_skew(3, rat(-1, 2)), 6, "all entries -1/2", "S3");
    {
        const BruteForceResult bf =
            brute_force_automorphisms(LVAlgebra(constant_skew(3, rat(-1, 2))));
        bool noncommuting = false;
        const auto& t = bf.description.table;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                if (t[i][j] != t[j][i]) noncommuting = true;
        c.require(noncommuting, "all entries -1/2: group should be nonabelian");
    }

    // Single nonzero entry: the idempotent set is infinite, so the order-2
    // group is certified by direct verification of the classified generators.
    for (const Rational& r : r_samples) {
        const LVAlgebra alg(SkewMatrix::from_triple(r, rat(0), rat(0)));
        const Dim3Classification cls = classify_dim3(alg);
        c.require(cls.aut.order == 2, "single entry r=" + to_string(r) +
                                          ": classified order != 2");
        for (const LinearMap& g : cls.aut.elements)
            c.require(is_automorphism(alg, g),
                      "single entry r=" + to_string(r) + ": generator fails verification");
    }

    // Zero matrix: sampled members of the weight-preserving family, plus
    // sampled compositions, all verified.
    {
        const LVAlgebra zero(SkewMatrix(3));
        std::mt19937 eng(6006);
        auto sample = [&]() -> LinearMap {
            while (true) {
                RatMatrix cand(3, 3);
                for (int j = 0; j < 3; ++j) {
                    Rational sum = rat(0);
                    for (int i = 0; i < 2; ++i) {
                        cand.at(i, j) = rat(static_cast<long>(eng() % 7) - 3);
                        sum += cand.at(i, j);
                    }
                    cand.at(2, j) = Rational(rat(1) - sum);
                }
                if (rank(cand) == 3) return family_weight_preserving(zero, cand);
            }
        };
        try {
            std::vector<LinearMap> members;
            for (int k = 0; k < 20; ++k) members.push_back(sample());
            for (int k = 0; k < 20; ++k) {
                const LinearMap prod = members[k] * members[(k + 7) % 20];
                family_weight_preserving(zero, prod);  // throws if it left the family
            }
        } catch (const std::exception& e) {
            c.require(false, std::string("zero matrix family: ") + e.what());
        }
    }

    // Skew(r,r,0): sampled g members and compositions stay in the family.
    {
        std::mt19937 eng(6007);
        for (const Rational& r : {rat(2), rat(-1, 3)}) {
            const LVAlgebra alg(SkewMatrix::from_triple(r, r, rat(0)));
            try {
                std::vector<LinearMap> members;
                while (members.size() < 20) {
                    const Rational a = rat(static_cast<long>(eng() % 9) - 4);
                    const Rational b = rat(static_cast<long>(eng() % 9) - 4, 2);
                    if (a == b) continue;
                    members.push_back(family_g(alg, a, b));
                }
                for (int k = 0; k < 20; ++k) {
                    const LinearMap prod = members[k] * members[(k + 3) % 20];
                    const auto back = match_gf(prod);
                    c.require(back.has_value() && !back->is_f &&
                                  family_g(alg, back->a, back->b) == prod,
                              "composition left the g family at r=" + to_string(r));
                }
            } catch (const std::exception& e) {
                c.require(false, std::string("g family sampling: ") + e.what());
            }
        }
    }

    // Skew(eps/2, eps/2, 0): f and g members and their compositions. The
    // plus-sign f formula fails its verification; that failure is reported
    // here rather than patched over.
    for (int eps : {-1, 1}) {
        const LVAlgebra alg(
            SkewMatrix::from_triple(rat(eps, 2), rat(eps, 2), rat(0)));
        std::mt19937 eng(6008);
        try {
            std::vector<LinearMap> members;
            while (members.size() < 20) {
                const Rational a = rat(static_cast<long>(eng() % 9) - 4);
                const Rational b = rat(static_cast<long>(eng() % 9) - 4, 2);
                if (a == b) continue;
                if (members.size() % 2 == 0)
                    members.push_back(family_f(alg, eps, a, b));
                else
                    members.push_back(family_g(alg, a, b));
            }
            for (int k = 0; k < 20; ++k) {
                const LinearMap prod = members[k] * members[(k + 5) % 20];
                const auto back = match_gf(prod);
                bool ok = back.has_value();
                if (ok)
                    ok = back->is_f
                             ? family_f(alg, back->eps, back->a, back->b) == prod
                             : family_g(alg, back->a, back->b) == prod;
                c.require(ok, "composition left the f/g family at eps=" +
                                  std::to_string(eps));
            }
        } catch (const oracle_mismatch_error& e) {
            const auto defect = family_f_defect(alg, eps, rat(3), rat(0));
            c.require(false,
                      "f family at eps=" + std::to_string(eps) +
                          " fails verification: the image of e1*e2 is " +
                          defect.first.to_text() + " but the images multiply to " +
                          defect.second.to_text());
        } catch (const std::exception& e) {
            c.require(false, std::string("f/g family sampling: ") + e.what());
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion7() {
    Criterion c;
    std::mt19937 eng(7007);
    const std::vector<std::vector<int>> perms{{1, 2, 3}, {2, 1, 3}, {3, 2, 1},
                                              {1, 3, 2}, {3, 1, 2}, {2, 3, 1}};
    const std::vector<Rational> c_samples{rat(1), rat(3), rat(-1, 4), rat(2), rat(1, 5)};
    for (const Rational& cc : c_samples) {
        for (int sign : {1, -1}) {
            const SkewMatrix base =
                SkewMatrix::from_triple(rat(sign, 2), rat(sign, 2), cc);
            const SkewMatrix m = apply_permutation(base, perms[eng() % 6]);
            const LVAlgebra alg(m);
            const WeightUniqueness w = is_weight_unique(alg);
            c.require(w.status == WeightUniqueness::Status::NotUnique,
                      "expected a second homomorphism for c=" + to_string(cc));
            if (w.status != WeightUniqueness::Status::NotUnique) continue;
            c.require(!w.I.empty() && !w.J.empty(), "witness is empty");
            for (int i : w.I)
                for (int j : w.J)
                    c.require(alg.multiply(Element::basis(3, i), Element::basis(3, j)) ==
                                  Element::basis(3, i),
                              "witness fails the literal product check");
        }
    }
    for (int rep = 0; rep < 200 && c.pass; ++rep) {
        const int n = 2 + rep % 5;
        SkewMatrix m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Rational q = rat(0);
                do {
                    q = rat(static_cast<long>(eng() % 19) - 9, 1 + (eng() % 4));
                } while (Rational(q * rat(2)) == 1 || Rational(q * rat(2)) == -1);
                m.set(i, j, q);
            }
        c.require(is_weight_unique(LVAlgebra(m)).status ==
                      WeightUniqueness::Status::Unique,
                  "entries avoid +-1/2 but a second homomorphism appeared (n=" +
                      std::to_string(n) + ")");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 8

Criterion criterion8() {
    Criterion c;
    std::mt19937 eng(8008);

    // Simplex-sum drift over the full requested horizon.
    int aborted = 0, over = 0, total = 0;
    double worst = 0.0;
    for (int n : {2, 3, 4, 5}) {
        for (int rep = 0; rep < 20; ++rep) {
            InteractionMatrix m;
            m.n = n;
            m.entries.assign(n, std::vector<double>(n, 0.5));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double off =
                        (static_cast<double>(eng() % 21) - 10.0) / 64.0;
                    m.entries[i][j] = 0.5 + off;
                    m.entries[j][i] = 0.5 - off;
                }
            m.validate();
            ++total;
            const FloatAlgebra alg(m);
            const std::vector<double> p0(n, 1.0 / n);
            try {
                const Trajectory traj = integrate(alg, p0, 100.0, 1e-3, 1000);
                worst = std::max(worst, traj.sum_drift_max);
                if (traj.sum_drift_max > 1e-9) ++over;
            } catch (const std::runtime_error&) {
                ++aborted;
            }
        }
    }
    c.require(over == 0 && aborted == 0,
              "simplex-sum drift exceeded 1e-9 on " + std::to_string(over) + " of " +
                  std::to_string(total) + " runs (worst " + fmt(worst) + ") and " +
                  std::to_string(aborted) +
                  " runs aborted on overflow: the weight direction repels at rate 1/2, "
                  "so float noise is amplified by e^(t/2) ~ 5e21 over t = 100");

    // Weight-1 point idempotents are equilibria of the float field.
    std::mt19937 eng2(8009);
    for (int n : {2, 3, 4, 5}) {
        for (int rep = 0; rep < 5; ++rep) {
            SkewMatrix a(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    a.set(i, j, rat(static_cast<long>(eng2() % 21) - 10, 64));
            const LVAlgebra alg(a);
            const FloatAlgebra falg(a);
            const EnumerationReport report = enumerate_all(alg);
            for (const SupportPair& pair : report.supports) {
                if (pair.weight1.status != SupportSolution::Status::Point) continue;
                const double resid =
                    max_abs(vector_field(falg, to_doubles(pair.weight1.point)));
                c.require(resid < 1e-12, "equilibrium residual " + fmt(resid) +
                                             " at n=" + std::to_string(n));
            }
        }
    }

    // Fourth-order convergence on the fixed two-species instance.
    SkewMatrix half(2);
    half.set(1, 2, rat(1, 2));
    const FloatAlgebra falg(half);
    const std::vector<double> p0{0.5, 0.5};
    const double ref = integrate(falg, p0, 5.0, 0.0125).terminal_state()[0];
    const double coarse = integrate(falg, p0, 5.0, 0.1).terminal_state()[0];
    const double fine = integrate(falg, p0, 5.0, 0.05).terminal_state()[0];
    const double ratio = std::abs(coarse - ref) / std::abs(fine - ref);
    c.require(ratio >= 12.0 && ratio <= 20.0,
              "step-halving error ratio " + fmt(ratio) + " outside [12, 20]");
    return c;
}

void report(int number, const std::string& label, const Criterion& c, int& failures) {
    if (c.pass) {
        std::cout << "PASS criterion " << number << ": " << label << "\n";
    } else {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << label << " — "
                  << c.detail() << "\n";
    }
    std::cout.flush();
}

}  // namespace

int main() {
    int failures = 0;
    report(1, "pfaffian identities (pf^2 = det and both minor determinant lemmas, exact)",
           criterion1(), failures);
    report(2, "constant-matrix census: 2^n idempotents with alternating closed forms",
           criterion2(), failures);
    report(3, "dimension-3/4 closed forms agree with the bordered-system oracle",
           criterion3(), failures);
    report(4, "full-support pfaffian candidate agrees with the oracle; worked example",
           criterion4(), failures);
    report(5, "no support carries idempotents of both weights (|support| <= 4)",
           criterion5(), failures);
    report(6, "dimension-3 automorphism groups match the exhaustive search and "
              "family laws",
           criterion6(), failures);
    report(7, "weight-form uniqueness with literal product witnesses",
           criterion7(), failures);
    report(8, "replicator dynamics: simplex drift, equilibria, integrator order",
           criterion8(), failures);
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures;
}
