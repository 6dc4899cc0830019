// Command-line front end: thin adapters over the library modules. No math
// lives here beyond comparing library results for the cross-checks.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lval/algebra.hpp"
#include "lval/autgroup.hpp"
#include "lval/dynamics.hpp"
#include "lval/errors.hpp"
#include "lval/idempotents.hpp"
#include "lval/json_io.hpp"
#include "lval/skew.hpp"

namespace {

using namespace lval;

std::string ints_text(const std::vector<int>& v) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "}";
    return out.str();
}

std::string row_text(const LinearMap& f, std::size_t i) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < f.cols(); ++j)
        out << (j ? ", " : "") << to_string(f.at(i, j));
    out << ")";
    return out.str();
}

void print_map(std::ostream& out, const LinearMap& f, const std::string& indent) {
    for (std::size_t i = 0; i < f.rows(); ++i) out << indent << row_text(f, i) << "\n";
}

void print_solution(std::ostream& out, const SupportSolution& sol) {
    out << "weight " << sol.weight_class << ": ";
    switch (sol.status) {
        case SupportSolution::Status::Empty: out << "empty\n"; break;
        case SupportSolution::Status::Point:
            out << "point " << sol.point.to_text() << "\n";
            break;
        case SupportSolution::Status::Family: {
            const AffineFamily& fam = sol.family;
            out << "family with " << fam.param_count() << " parameter(s)\n";
            out << "  particular " << Element(fam.particular).to_text() << "\n";
            for (int k = 0; k < fam.param_count(); ++k)
                out << "  direction t" << k + 1 << " "
                    << Element(fam.basis[static_cast<std::size_t>(k)]).to_text() << "\n";
            for (const auto& cond : fam.exclusions) {
                out << "  exclusion:";
                for (std::size_t k = 0; k < cond.coeffs.size(); ++k)
                    out << (k ? " + " : " ") << to_string(cond.coeffs[k]) << "*t" << k + 1;
                out << " != " << to_string(cond.constant) << "\n";
            }
            break;
        }
    }
}

SkewMatrix need_matrix(const std::string& path) {
    if (path.empty())
        throw std::invalid_argument("a matrix file is required (-m/--matrix FILE)");
    return load_skew_file(path);
}

int run_pfaffian(const std::string& matrix_file, bool as_json) {
    const SkewMatrix a = need_matrix(matrix_file);
    const Rational pf = pfaffian(a);
    if (as_json) {
        Json j;
        j["n"] = a.n();
        j["pfaffian"] = to_string(pf);
        std::cout << dump_json(j);
    } else {
        std::cout << to_string(pf) << "\n";
    }
    return 0;
}

int run_idempotents(const std::string& matrix_file, std::vector<int> support,
                    const std::string& weight, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    if (support.empty())
        throw std::invalid_argument("a support is required (--support i,j,...)");
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (support[t] < 1 || support[t] > alg.dim())
            throw std::invalid_argument("--support index " + std::to_string(support[t]) +
                                        " out of range 1.." + std::to_string(alg.dim()));
        if (t > 0 && support[t] <= support[t - 1])
            throw std::invalid_argument("--support indices must be strictly increasing");
    }
    const SupportPair oracle = idempotents_with_support(alg, support);
    if (auto closed = closed_form_with_support(alg, support); closed && !(*closed == oracle))
        throw oracle_mismatch_error(
            "closed form disagrees with the bordered-system solver on support " +
            ints_text(support));
    if (as_json) {
        Json j = support_pair_to_json(oracle);
        if (weight == "0") j.erase("weight1");
        if (weight == "1") j.erase("weight0");
        std::cout << dump_json(j);
        return 0;
    }
    std::cout << "support " << ints_text(support) << "\n";
    if (weight != "1") print_solution(std::cout, oracle.weight0);
    if (weight != "0") print_solution(std::cout, oracle.weight1);
    return 0;
}

int run_enumerate(const std::string& matrix_file, int max_n, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    const EnumerationReport report = enumerate_all(alg, max_n);
    if (as_json) {
        std::cout << dump_json(enumeration_to_json(report));
        return 0;
    }
    for (const auto& pair : report.supports) {
        if (!pair.weight0.nonempty() && !pair.weight1.nonempty()) continue;
        std::cout << "support " << ints_text(pair.weight0.support) << "\n";
        if (pair.weight0.nonempty()) print_solution(std::cout, pair.weight0);
        if (pair.weight1.nonempty()) print_solution(std::cout, pair.weight1);
    }
    std::cout << "nonzero point idempotents: " << report.point_count_nonzero << "\n";
    std::cout << "including zero: " << report.point_count_with_zero << "\n";
    std::cout << "has family: " << (report.has_family ? "true" : "false") << "\n";
    return 0;
}

int run_automorphisms(const std::string& matrix_file, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    const BruteForceResult result = brute_force_automorphisms(alg);
    if (result.status != BruteForceResult::Status::Ok) {
        std::cerr << "not applicable: " << result.reason << "\n";
        return 2;
    }
    if (as_json) {
        Json j = aut_description_to_json(result.description);
        Json points = Json::array();
        for (const auto& p : result.idempotent_points) points.push_back(element_to_json(p));
        j["idempotent_points"] = points;
        std::cout << dump_json(j);
        return 0;
    }
    std::cout << "idempotent points: " << result.idempotent_points.size() << "\n";
    std::cout << "order: " << result.description.order << "\n";
    std::cout << "iso_tag: " << result.description.iso_tag << "\n";
    for (std::size_t k = 0; k < result.description.elements.size(); ++k) {
        std::cout << "element " << k + 1 << ":\n";
        print_map(std::cout, result.description.elements[k], "  ");
    }
    return 0;
}

int run_classify3(const std::string& matrix_file, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    const Dim3Classification c = classify_dim3(alg);
    if (as_json) {
        std::cout << dump_json(dim3_classification_to_json(c));
        return 0;
    }
    std::cout << "family: " << c.family << "\n";
    std::cout << "tau: " << ints_text(c.tau) << "\n";
    std::cout << "canonical: a12=" << to_string(c.canonical.at(1, 2))
              << " a13=" << to_string(c.canonical.at(1, 3))
              << " a23=" << to_string(c.canonical.at(2, 3)) << "\n";
    if (c.r != 0) std::cout << "r: " << to_string(c.r) << "\n";
    if (c.c != 0) std::cout << "c: " << to_string(c.c) << "\n";
    if (c.eps != 0) std::cout << "eps: " << c.eps << "\n";
    if (c.aut.order < 0)
        std::cout << "order: infinite\n";
    else
        std::cout << "order: " << c.aut.order << "\n";
    if (!c.aut.iso_tag.empty()) std::cout << "iso_tag: " << c.aut.iso_tag << "\n";
    for (const auto& fam : c.aut.families)
        std::cout << "family constructor: " << fam.tag << " (arity " << fam.arity << ")\n";
    for (std::size_t k = 0; k < c.aut.elements.size(); ++k) {
        std::cout << "element " << k + 1 << ":\n";
        print_map(std::cout, c.aut.elements[k], "  ");
    }
    return 0;
}

int run_weight_unique(const std::string& matrix_file, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    const WeightUniqueness w = is_weight_unique(alg);
    if (as_json) {
        std::cout << dump_json(weight_uniqueness_to_json(w));
        return 0;
    }
    switch (w.status) {
        case WeightUniqueness::Status::Unique: std::cout << "unique: true\n"; break;
        case WeightUniqueness::Status::NotUnique:
            std::cout << "unique: false\n";
            std::cout << "I: " << ints_text(w.I) << "\n";
            std::cout << "J: " << ints_text(w.J) << "\n";
            break;
        case WeightUniqueness::Status::Undecided: std::cout << "unique: undecided\n"; break;
    }
    return 0;
}

/// pf^2 = det, the determinant/pfaffian minor identities, and independence
/// of the expansion row, on one matrix. Returns a failure description or "".
std::string identity_failures(const SkewMatrix& a) {
    const int n = a.n();
    const Rational pf = pfaffian(a);
    if (Rational(pf * pf) != determinant(a.to_matrix())) return "pf^2 != det";
    for (int row = 1; row <= n; ++row)
        if (pfaffian_along_row(a, row) != pf)
            return "pfaffian changes when expanded along row " + std::to_string(row);
    if (n % 2 == 0 && n > 2) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const auto [lhs, rhs] = lemma3_sides(a, i, j);
                if (lhs != rhs)
                    return "even-minor identity fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
            }
    }
    if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto [lhs, rhs] = lemma4_sides(a, i, j);
                if (lhs != rhs)
                    return "odd-minor identity fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
            }
    }
    return "";
}

SkewMatrix random_skew(std::mt19937& eng, int n) {
    SkewMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long num = static_cast<long>(eng() % 19) - 9;
            const long den = 1 + static_cast<long>(eng() % 4);
            a.set(i, j, rat(num, den));
        }
    return a;
}

int run_check_identities(const std::string& matrix_file, int random_count, int dim,
                         std::uint32_t seed, bool as_json) {
    std::vector<SkewMatrix> matrices;
    if (!matrix_file.empty()) matrices.push_back(load_skew_file(matrix_file));
    std::mt19937 eng(seed);
    for (int k = 0; k < random_count; ++k) matrices.push_back(random_skew(eng, dim));
    if (matrices.empty())
        throw std::invalid_argument("provide -m FILE and/or --random N --dim D");
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const std::string failure = identity_failures(matrices[k]);
        if (!failure.empty())
            throw oracle_mismatch_error("matrix " + std::to_string(k + 1) + ": " + failure);
    }
    if (as_json) {
        Json j;
        j["matrices_checked"] = matrices.size();
        j["all_identities_hold"] = true;
        std::cout << dump_json(j);
    } else {
        std::cout << "all identities hold on " << matrices.size() << " matrices\n";
    }
    return 0;
}

int run_simulate(const std::string& matrix_file, const std::string& interaction_file,
                 std::vector<double> p0, double t_end, double dt, int stride, bool as_json) {
    std::unique_ptr<FloatAlgebra> alg;
    if (!interaction_file.empty()) {
        alg = std::make_unique<FloatAlgebra>(load_interaction_file(interaction_file));
    } else if (!matrix_file.empty()) {
        alg = std::make_unique<FloatAlgebra>(load_skew_file(matrix_file));
    } else {
        throw std::invalid_argument("provide -m FILE or --interaction FILE");
    }
    if (p0.empty())
        p0.assign(static_cast<std::size_t>(alg->dim()), 1.0 / alg->dim());
    Trajectory traj;
    try {
        traj = integrate(*alg, p0, t_end, dt, stride);
    } catch (const inapplicable_error&) {
        throw;
    } catch (const std::runtime_error& e) {
        std::cerr << "integration aborted: " << e.what() << "\n";
        return 2;
    }
    if (as_json)
        std::cout << dump_json(trajectory_summary_to_json(traj, *alg));
    else
        std::cout << trajectory_csv(traj);
    return 0;
}

int run_question1(const std::string& matrix_file, int max_n, bool as_json) {
    const LVAlgebra alg(need_matrix(matrix_file));
    const Question1Report report = question1_check(alg, max_n);
    if (as_json) {
        std::cout << dump_json(question1_to_json(report));
        return 0;
    }
    std::cout << "supports checked: " << report.supports_checked << "\n";
    std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const auto& s : report.counterexamples)
        std::cout << "  both weights on support " << ints_text(s) << "\n";
    return 0;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const oracle_mismatch_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const inapplicable_error& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis and simulation of Lotka-Volterra algebras"};
    app.require_subcommand(1);

    std::string matrix_file;
    std::string interaction_file;
    std::vector<int> support;
    std::string weight = "both";
    bool as_json = false;
    int max_n = 12;
    int q1_max_support = 4;
    int random_count = 0;
    int random_dim = 4;
    std::uint32_t seed = 1;
    std::vector<double> p0;
    double t_end = 100.0;
    double dt = 1e-3;
    int stride = 1000;

    auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("-m,--matrix", matrix_file, "antisymmetric matrix JSON file");
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine-readable JSON output");
    };

    CLI::App* pf = app.add_subcommand("pfaffian", "pfaffian of the matrix");
    add_matrix(pf);
    add_json(pf);

    CLI::App* idem = app.add_subcommand(
        "idempotents", "idempotents with a prescribed support, both weight classes");
    add_matrix(idem);
    add_json(idem);
    idem->add_option("--support", support, "1-based support indices, e.g. 1,2,3")
        ->delimiter(',');
    idem->add_option("--weight", weight, "weight class: 0, 1 or both")
        ->check(CLI::IsMember({"0", "1", "both"}));

    CLI::App* enu = app.add_subcommand("enumerate", "idempotents over every support");
    add_matrix(enu);
    add_json(enu);
    enu->add_option("--max-n", max_n, "refuse dimensions above this bound (default 12)");

    CLI::App* aut = app.add_subcommand(
        "automorphisms", "exhaustive automorphism search through idempotent images");
    add_matrix(aut);
    add_json(aut);

    CLI::App* cls = app.add_subcommand(
        "classify3", "dimension-3 automorphism-group classification");
    add_matrix(cls);
    add_json(cls);

    CLI::App* wu = app.add_subcommand(
        "weight-unique", "is the weight form the only homomorphism sending e_i to 1?");
    add_matrix(wu);
    add_json(wu);

    CLI::App* chk = app.add_subcommand(
        "check-identities", "pfaffian/determinant identity suite on given and random matrices");
    add_matrix(chk);
    add_json(chk);
    chk->add_option("--random", random_count, "number of random matrices to add");
    chk->add_option("--dim", random_dim, "dimension of the random matrices (default 4)");
    chk->add_option("--seed", seed, "random seed (default 1)");

    CLI::App* sim = app.add_subcommand("simulate", "replicator dynamics by fixed-step RK4");
    add_matrix(sim);
    add_json(sim);
    sim->add_option("--interaction", interaction_file,
                    "interaction-table JSON file instead of an antisymmetric matrix");
    sim->add_option("--p0", p0, "initial state, e.g. 0.2,0.3,0.5 (default barycenter)")
        ->delimiter(',');
    sim->add_option("--t-end", t_end, "integration horizon (default 100)");
    sim->add_option("--dt", dt, "step size (default 0.001)");
    sim->add_option("--stride", stride, "record every k-th step (default 1000)");

    CLI::App* q1 = app.add_subcommand(
        "question1", "search for a support carrying idempotents of both weights");
    add_matrix(q1);
    add_json(q1);
    q1->add_option("--max-n", q1_max_support, "largest support size to sweep (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (pf->parsed()) return guarded([&] { return run_pfaffian(matrix_file, as_json); });
    if (idem->parsed())
        return guarded([&] { return run_idempotents(matrix_file, support, weight, as_json); });
    if (enu->parsed()) return guarded([&] { return run_enumerate(matrix_file, max_n, as_json); });
    if (aut->parsed()) return guarded([&] { return run_automorphisms(matrix_file, as_json); });
    if (cls->parsed()) return guarded([&] { return run_classify3(matrix_file, as_json); });
    if (wu->parsed()) return guarded([&] { return run_weight_unique(matrix_file, as_json); });
    if (chk->parsed())
        return guarded([&] {
            return run_check_identities(matrix_file, random_count, random_dim, seed, as_json);
        });
    if (sim->parsed())
        return guarded([&] {
            return run_simulate(matrix_file, interaction_file, p0, t_end, dt, stride, as_json);
        });
    if (q1->parsed())
        return guarded([&] { return run_question1(matrix_file, q1_max_support, as_json); });
    return 1;
}
