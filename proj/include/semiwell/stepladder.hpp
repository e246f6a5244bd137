#pragma once

// Piecewise-constant potential engine: transfer matrices for (psi, psi'),
// Riemann-rectangle (midpoint) discretization of the parabolic region, and
// the waveguide-analog cutoff map.  Doubles as the independent numerical
// oracle for the exact Kummer-function solution.

#include <vector>

#include "semiwell/model.hpp"

namespace semiwell::stepladder {

struct StepPotential {
    std::vector<double> edges;   // x_0 < x_1 < ... < x_n
    std::vector<double> values;  // V_i on (x_{i-1}, x_i), size n
};

// Propagates the column (psi, psi') across one constant-potential segment;
// determinant is 1 exactly in the algebra (Wronskian conservation).
struct TransferMatrix {
    double m11, m12, m21, m22;

    double det() const { return m11 * m22 - m12 * m21; }
};

// Matrix across a segment of width w at potential v for energy e:
// oscillatory for e > v, hyperbolic for e < v, free drift for |e - v| tiny.
TransferMatrix segment_matrix(model::Energy e, double v, double w);

// n equal-width midpoint-rule steps of V = x^2 on [x_min, x_match].
StepPotential discretize_harmonic(double x_min, double x_match, int n);

// (psi, psi') at the right end of the ladder, renormalized per step by
// max(|psi|, |psi'|) to survive long evanescent stretches.  The initial
// condition (1, sqrt(V_0 - e)) selects the branch decaying toward -infinity,
// so the leftmost segment must be classically forbidden.
struct LadderPair {
    double psi;
    double dpsi;
};
LadderPair ladder_pair(model::Energy e, const StepPotential& steps);

// psi'/psi at the right end of the ladder.
double ladder_log_derivative(model::Energy e, const StepPotential& steps);

// Cutoff-frequency profile of the electromagnetic analogue: omega_i =
// sqrt(V_i + e0) after shifting the energy baseline by e0.
std::vector<double> cutoff_profile(const StepPotential& steps, double e0);

}  // namespace semiwell::stepladder
