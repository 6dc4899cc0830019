#include "lval/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lval {

Element Element::basis(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("basis index");
    Element e = zero(n);
    e[i] = 1;
    return e;
}

Rational Element::weight() const {
    Rational w(0);
    for (const Rational& c : coords_) w += c;
    return w;
}

std::vector<int> Element::support() const {
    std::vector<int> s;
    for (int i = 1; i <= dim(); ++i) {
        if ((*this)[i] != 0) s.push_back(i);
    }
    return s;
}

Element Element::operator+(const Element& rhs) const {
    if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
    Element out = *this;
    for (int i = 0; i < dim(); ++i) out.coords_[i] += rhs.coords_[i];
    return out;
}

Element Element::operator-(const Element& rhs) const {
    if (dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
    Element out = *this;
    for (int i = 0; i < dim(); ++i) out.coords_[i] -= rhs.coords_[i];
    return out;
}

Element Element::operator*(const Rational& s) const {
    Element out = *this;
    for (Rational& c : out.coords_) c *= s;
    return out;
}

bool Element::is_zero() const {
    for (const Rational& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

std::string Element::to_text() const {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i > 0) out << ", ";
        out << to_string(coords_[i]);
    }
    out << ')';
    return out.str();
}

Element Element::from_text(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw std::invalid_argument("element text must be parenthesized");
    }
    std::vector<Rational> coords;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string token = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        coords.push_back(parse_rational(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Element(std::move(coords));
}

Rational LVAlgebra::omega_i(int i, const Element& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    Rational s(0);
    for (int j = 1; j <= dim(); ++j) {
        if (j != i && x[j] != 0) s += a_.at(i, j) * x[j];
    }
    return s;
}

Element LVAlgebra::multiply(const Element& x, const Element& y) const {
    if (x.dim() != dim() || y.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    const Rational wx = x.weight();
    const Rational wy = y.weight();
    const Rational half = rat(1, 2);
    Element out = x * (wy * half) + y * (wx * half);
    for (int i = 1; i <= dim(); ++i) {
        out[i] += x[i] * omega_i(i, y) + y[i] * omega_i(i, x);
    }
    return out;
}

Element LVAlgebra::square(const Element& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    const Rational w = x.weight();
    Element out = x * w;
    for (int i = 1; i <= dim(); ++i) {
        out[i] += 2 * x[i] * omega_i(i, x);
    }
    return out;
}

WeightUniqueness is_weight_unique(const LVAlgebra& alg, int component_bound) {
    const SkewMatrix& a = alg.matrix();
    const int n = a.n();
    const Rational half = rat(1, 2);

    // Union pairs whose entry is outside {1/2, -1/2}: any 0/1 character
    // must agree on them, so they stay in one block.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Rational entry = a.at(i, j);
            if (entry != half && entry != -half) parent[find(i - 1)] = find(j - 1);
        }
    }
    std::vector<int> roots;
    std::vector<int> comp_of(n);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            comp_of[v] = static_cast<int>(roots.size());
            roots.push_back(r);
        } else {
            comp_of[v] = static_cast<int>(it - roots.begin());
        }
    }
    const int c = static_cast<int>(roots.size());

    WeightUniqueness result;
    if (c > component_bound) {
        result.status = WeightUniqueness::Status::Undecided;
        return result;
    }

    // I = components with the mask bit set; valid iff a_ij = 1/2 for every
    // i in I, j in J (that is exactly e_i e_j = e_i).
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << c); ++mask) {
        bool ok = true;
        for (int i = 1; ok && i <= n; ++i) {
            if (!(mask & (std::uint64_t{1} << comp_of[i - 1]))) continue;
            for (int j = 1; ok && j <= n; ++j) {
                if (mask & (std::uint64_t{1} << comp_of[j - 1])) continue;
                if (a.at(i, j) != half) ok = false;
            }
        }
        if (ok) {
            result.status = WeightUniqueness::Status::NotUnique;
            for (int v = 1; v <= n; ++v) {
                if (mask & (std::uint64_t{1} << comp_of[v - 1])) {
                    result.I.push_back(v);
                } else {
                    result.J.push_back(v);
                }
            }
            return result;
        }
    }
    result.status = WeightUniqueness::Status::Unique;
    return result;
}

}  // namespace lval
