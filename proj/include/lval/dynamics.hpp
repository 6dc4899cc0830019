#pragma once

#include <string>
#include <vector>

#include "lval/algebra.hpp"

namespace lval {

/// Pairwise interaction table M for a population game: M[i][j] is the share
/// of the encounter (i, j) credited to strategy i, so M[i][j] + M[j][i] = 1
/// off the diagonal and the diagonal is 1/2 by convention.
struct InteractionMatrix {
    int n = 0;
    std::vector<std::vector<double>> entries;

    /// Throws std::invalid_argument when the shape is wrong, an entry is not
    /// finite, a pair sum differs from 1 by more than `tol`, or a diagonal
    /// entry differs from 1/2 by more than `tol`.
    void validate(double tol = 1e-12) const;
};

/// Exact antisymmetric matrix b with b_ij = M[i][j] - 1/2. Every float64 is
/// exactly representable as a rational, so no information is lost.
SkewMatrix to_skew(const InteractionMatrix& m);

/// Exact algebra attached to to_skew(m).
LVAlgebra to_algebra(const InteractionMatrix& m);

/// Double-precision image of an antisymmetric matrix: the evaluation handle
/// used by the integrator. This is the only part of the library that
/// computes with floats; the conversion is one-directional (exact to float).
class FloatAlgebra {
public:
    explicit FloatAlgebra(const SkewMatrix& a);
    explicit FloatAlgebra(const InteractionMatrix& m);

    int dim() const { return n_; }
    double b(int i, int j) const { return b_[static_cast<std::size_t>(i * n_ + j)]; }  // 0-based

    /// Algebra square p * p evaluated in floats:
    /// (p*p)_i = (sum_j p_j) p_i + 2 p_i sum_j b_ij p_j.
    std::vector<double> square(const std::vector<double>& p) const;

private:
    int n_ = 0;
    std::vector<double> b_;  // row-major, antisymmetric
};

/// Replicator right-hand side (1/2)(p*p - p) with the float product. When
/// sum p = 1 this agrees componentwise with p_i sum_j b_ij p_j.
std::vector<double> vector_field(const FloatAlgebra& alg, const std::vector<double>& p);

double max_abs(const std::vector<double>& v);

/// Fixed-step trajectory samples plus the conservation diagnostics gathered
/// over every step (not only the recorded ones).
struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    double sum_drift_max = 0.0;       // max |sum p - 1| seen at any step
    bool left_unit_box = false;       // some coordinate left [-1e-9, 1 + 1e-9]

    const std::vector<double>& terminal_state() const { return states.back(); }
};

/// Classical fixed-step fourth-order Runge-Kutta integration of
/// dp/dt = (1/2)(p*p - p) from t = 0 to t_end in steps of dt, recording
/// every `stride`-th state (the initial and final states always included).
/// The sum of coordinates is never renormalized; its drift is reported, not
/// corrected. Requires p0 strictly positive with |sum - 1| <= 1e-9 and
/// dt > 0. Throws std::runtime_error when a state stops being finite.
Trajectory integrate(const FloatAlgebra& alg, const std::vector<double>& p0, double t_end,
                     double dt, int stride = 1);

/// CSV rendering with header "t,p1,...,pn", one row per recorded sample.
std::string trajectory_csv(const Trajectory& traj);

/// Coordinates rounded to float64 (used to evaluate the field at exact
/// idempotents).
std::vector<double> to_doubles(const Element& x);

}  // namespace lval
