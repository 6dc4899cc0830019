#include "lval/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

namespace lval {

namespace {

std::vector<Rational> rationals_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw std::invalid_argument(std::string(what) + ": entries must be rational strings");
        out.push_back(parse_rational(item.get<std::string>()));
    }
    return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const Rational& q : v) arr.push_back(to_string(q));
    return arr;
}

}  // namespace

Json skew_to_json(const SkewMatrix& a) {
    Json j;
    j["n"] = a.n();
    Json upper = Json::array();
    for (int i = 1; i <= a.n(); ++i)
        for (int k = i + 1; k <= a.n(); ++k)
            if (a.at(i, k) != 0) upper.push_back(Json::array({i, k, to_string(a.at(i, k))}));
    j["upper"] = upper;
    return j;
}

SkewMatrix skew_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("matrix JSON: expected an object with integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 0 || n > 25) throw std::invalid_argument("matrix JSON: n must lie in [0, 25]");
    SkewMatrix a(n);
    if (!j.contains("upper") || !j["upper"].is_array())
        throw std::invalid_argument("matrix JSON: \"upper\" must be an array of [i, j, value]");
    std::set<std::pair<int, int>> seen;
    for (const auto& item : j["upper"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_string())
            throw std::invalid_argument("matrix JSON: each entry must be [i, j, \"p/q\"]");
        int i = item[0].get<int>();
        int k = item[1].get<int>();
        Rational value = parse_rational(item[2].get<std::string>());
        if (i < 1 || i > n || k < 1 || k > n)
            throw std::invalid_argument("matrix JSON: index out of range");
        if (i == k) throw std::invalid_argument("matrix JSON: diagonal entries must be zero");
        if (i > k) {
            std::swap(i, k);
            value = -value;
        }
        if (!seen.insert({i, k}).second)
            throw std::invalid_argument("matrix JSON: duplicate entry position");
        a.set(i, k, value);
    }
    return a;
}

Json element_to_json(const Element& x) { return rationals_to_json(x.coords()); }

Element element_from_json(const Json& j) {
    return Element(rationals_from_json(j, "element JSON"));
}

Json linear_map_to_json(const LinearMap& f) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < f.cols(); ++k) row.push_back(to_string(f.at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Json affine_family_to_json(const AffineFamily& fam) {
    Json j;
    j["particular"] = rationals_to_json(fam.particular);
    Json basis = Json::array();
    for (const auto& row : fam.basis) basis.push_back(rationals_to_json(row));
    j["basis"] = basis;
    j["pivots"] = fam.pivots;
    Json excl = Json::array();
    for (const auto& cond : fam.exclusions) {
        Json c;
        c["constant"] = to_string(cond.constant);
        c["coeffs"] = rationals_to_json(cond.coeffs);
        excl.push_back(c);
    }
    j["exclusions"] = excl;
    return j;
}

Json support_solution_to_json(const SupportSolution& sol) {
    Json j;
    j["support"] = sol.support;
    j["weight_class"] = sol.weight_class;
    switch (sol.status) {
        case SupportSolution::Status::Empty: j["status"] = "empty"; break;
        case SupportSolution::Status::Point:
            j["status"] = "point";
            j["point"] = element_to_json(sol.point);
            break;
        case SupportSolution::Status::Family:
            j["status"] = "family";
            j["family"] = affine_family_to_json(sol.family);
            break;
    }
    return j;
}

Json support_pair_to_json(const SupportPair& pair) {
    Json j;
    j["support"] = pair.weight0.support;
    j["weight0"] = support_solution_to_json(pair.weight0);
    j["weight1"] = support_solution_to_json(pair.weight1);
    return j;
}

Json enumeration_to_json(const EnumerationReport& report) {
    Json j;
    Json supports = Json::array();
    for (const auto& pair : report.supports) supports.push_back(support_pair_to_json(pair));
    j["supports"] = supports;
    j["point_count_nonzero"] = report.point_count_nonzero;
    j["point_count_with_zero"] = report.point_count_with_zero;
    j["has_family"] = report.has_family;
    j["family_supports"] = report.family_supports;
    return j;
}

Json aut_description_to_json(const AutDescription& d) {
    Json j;
    switch (d.kind) {
        case AutDescription::Kind::Trivial: j["kind"] = "trivial"; break;
        case AutDescription::Kind::FiniteList: j["kind"] = "finite_list"; break;
        case AutDescription::Kind::ParamFamily: j["kind"] = "param_family"; break;
        case AutDescription::Kind::Mixed: j["kind"] = "mixed"; break;
    }
    if (d.order < 0)
        j["order"] = "infinite";
    else
        j["order"] = d.order;
    j["iso_tag"] = d.iso_tag;
    Json gens = Json::array();
    for (const auto& f : d.elements) gens.push_back(linear_map_to_json(f));
    j["generators"] = gens;
    Json fams = Json::array();
    for (const auto& fam : d.families) {
        Json f;
        f["tag"] = fam.tag;
        f["arity"] = fam.arity;
        fams.push_back(f);
    }
    j["families"] = fams;
    return j;
}

Json dim3_classification_to_json(const Dim3Classification& c) {
    Json j;
    j["family"] = c.family;
    j["tau"] = c.tau;
    j["canonical"] = skew_to_json(c.canonical);
    j["r"] = to_string(c.r);
    j["c"] = to_string(c.c);
    j["eps"] = c.eps;
    j["aut"] = aut_description_to_json(c.aut);
    return j;
}

Json weight_uniqueness_to_json(const WeightUniqueness& w) {
    Json j;
    switch (w.status) {
        case WeightUniqueness::Status::Unique: j["unique"] = true; break;
        case WeightUniqueness::Status::NotUnique:
            j["unique"] = false;
            j["I"] = w.I;
            j["J"] = w.J;
            break;
        case WeightUniqueness::Status::Undecided: j["unique"] = "undecided"; break;
    }
    return j;
}

Json question1_to_json(const Question1Report& report) {
    Json j;
    j["supports_checked"] = report.supports_checked;
    j["counterexamples"] = report.counterexamples;
    j["weight_determined_by_support"] = report.weight_determined_by_support();
    return j;
}

Json interaction_to_json(const InteractionMatrix& m) {
    Json j;
    j["n"] = m.n;
    j["entries"] = m.entries;
    return j;
}

InteractionMatrix interaction_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
        !j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument(
            "interaction JSON: expected {\"n\": int, \"entries\": [[...]]}");
    InteractionMatrix m;
    m.n = j["n"].get<int>();
    for (const auto& row : j["entries"]) {
        if (!row.is_array()) throw std::invalid_argument("interaction JSON: rows must be arrays");
        std::vector<double> r;
        for (const auto& x : row) {
            if (!x.is_number()) throw std::invalid_argument("interaction JSON: numeric entries");
            r.push_back(x.get<double>());
        }
        m.entries.push_back(std::move(r));
    }
    m.validate();
    return m;
}

Json trajectory_summary_to_json(const Trajectory& traj, const FloatAlgebra& alg) {
    Json j;
    j["terminal_state"] = traj.terminal_state();
    j["terminal_derivative_norm"] = max_abs(vector_field(alg, traj.terminal_state()));
    j["sum_drift_max"] = traj.sum_drift_max;
    j["left_unit_box"] = traj.left_unit_box;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path + ": malformed JSON (" + e.what() + ")");
    }
    return j;
}

SkewMatrix load_skew_file(const std::string& path) {
    try {
        return skew_from_json(load_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

InteractionMatrix load_interaction_file(const std::string& path) {
    try {
        return interaction_from_json(load_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lval
