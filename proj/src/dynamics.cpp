#include "lval/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lval {

void InteractionMatrix::validate(double tol) const {
    if (n <= 0) throw std::invalid_argument("interaction matrix: dimension must be positive");
    if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("interaction matrix: wrong number of rows");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("interaction matrix: wrong row length");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(entries[i][j]))
                throw std::invalid_argument("interaction matrix: entries must be finite");
        }
        if (std::fabs(entries[i][i] - 0.5) > tol)
            throw std::invalid_argument("interaction matrix: diagonal entries must be 1/2");
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(entries[i][j] + entries[j][i] - 1.0) > tol)
                throw std::invalid_argument(
                    "interaction matrix: entries (i,j) and (j,i) must sum to 1");
    }
}

SkewMatrix to_skew(const InteractionMatrix& m) {
    m.validate();
    SkewMatrix a(m.n);
    for (int i = 1; i <= m.n; ++i) {
        for (int j = i + 1; j <= m.n; ++j) {
            // mpq_class(double) is exact, so b_ij = M_ij - 1/2 without rounding.
            Rational b = Rational(m.entries[i - 1][j - 1]) - rat(1, 2);
            b.canonicalize();
            a.set(i, j, b);
        }
    }
    return a;
}

LVAlgebra to_algebra(const InteractionMatrix& m) { return LVAlgebra(to_skew(m)); }

FloatAlgebra::FloatAlgebra(const SkewMatrix& a) : n_(a.n()) {
    b_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            b_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = a.at(i, j).get_d();
}

FloatAlgebra::FloatAlgebra(const InteractionMatrix& m) : n_(m.n) {
    m.validate();
    b_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j)
                b_[static_cast<std::size_t>(i * n_ + j)] = m.entries[i][j] - 0.5;
}

std::vector<double> FloatAlgebra::square(const std::vector<double>& p) const {
    const auto un = static_cast<std::size_t>(n_);
    if (p.size() != un) throw std::invalid_argument("square: wrong vector length");
    double s = 0.0;
    for (double x : p) s += x;
    std::vector<double> out(un);
    for (std::size_t i = 0; i < un; ++i) {
        double w = 0.0;
        for (std::size_t j = 0; j < un; ++j) w += b_[i * un + j] * p[j];
        out[i] = s * p[i] + 2.0 * p[i] * w;
    }
    return out;
}

std::vector<double> vector_field(const FloatAlgebra& alg, const std::vector<double>& p) {
    std::vector<double> out = alg.square(p);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (out[i] - p[i]);
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

Trajectory integrate(const FloatAlgebra& alg, const std::vector<double>& p0, double t_end,
                     double dt, int stride) {
    const auto un = static_cast<std::size_t>(alg.dim());
    if (p0.size() != un) throw std::invalid_argument("integrate: wrong initial vector length");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("integrate: t_end must be nonnegative");
    if (stride < 1) throw std::invalid_argument("integrate: stride must be at least 1");
    double s0 = 0.0;
    for (double x : p0) {
        if (!(x > 0.0)) throw std::invalid_argument("integrate: p0 must be strictly positive");
        s0 += x;
    }
    if (std::fabs(s0 - 1.0) > 1e-9)
        throw std::invalid_argument("integrate: p0 must sum to 1 within 1e-9");

    const long steps = std::lround(t_end / dt);
    Trajectory traj;
    std::vector<double> p = p0;

    auto record_diagnostics = [&](const std::vector<double>& state, long step) {
        double s = 0.0;
        for (double x : state) {
            if (!std::isfinite(x)) {
                std::ostringstream msg;
                msg << "integration produced a non-finite coordinate near t = "
                    << static_cast<double>(step) * dt
                    << " (the weight direction is repelling; shorten t_end or reduce dt)";
                throw std::runtime_error(msg.str());
            }
            s += x;
            if (x < -1e-9 || x > 1.0 + 1e-9) traj.left_unit_box = true;
        }
        traj.sum_drift_max = std::max(traj.sum_drift_max, std::fabs(s - 1.0));
    };

    record_diagnostics(p, 0);
    traj.times.push_back(0.0);
    traj.states.push_back(p);

    std::vector<double> k1, k2, k3, k4, tmp(un);
    for (long step = 1; step <= steps; ++step) {
        k1 = vector_field(alg, p);
        for (std::size_t i = 0; i < un; ++i) tmp[i] = p[i] + 0.5 * dt * k1[i];
        k2 = vector_field(alg, tmp);
        for (std::size_t i = 0; i < un; ++i) tmp[i] = p[i] + 0.5 * dt * k2[i];
        k3 = vector_field(alg, tmp);
        for (std::size_t i = 0; i < un; ++i) tmp[i] = p[i] + dt * k3[i];
        k4 = vector_field(alg, tmp);
        for (std::size_t i = 0; i < un; ++i)
            p[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        record_diagnostics(p, step);
        if (step % stride == 0 || step == steps) {
            traj.times.push_back(static_cast<double>(step) * dt);
            traj.states.push_back(p);
        }
    }
    return traj;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",p" << i;
    out << "\n";
    char buf[40];
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        std::snprintf(buf, sizeof buf, "%.17g", traj.times[row]);
        out << buf;
        for (double x : traj.states[row]) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<double> to_doubles(const Element& x) {
    std::vector<double> out;
    out.reserve(x.coords().size());
    for (const Rational& q : x.coords()) out.push_back(q.get_d());
    return out;
}

}  // namespace lval
