#pragma once

// Exact decaying solution of the parabolic region, psi'' = (x^2 - k^2) psi
// for x < -a, built from Kummer functions:
//
//   psi(x) = e^{-x^2/2} [ c1 1F1(alpha, 1/2; x^2)
//                         + c2 x 1F1(alpha + 1/2, 3/2; x^2) ],
//   alpha = (1 - k^2)/4,
//
// where c2/c1 = 2 Gamma((3-k^2)/4) / Gamma((1-k^2)/4) selects the branch
// that decays toward x -> -infinity.  The gamma ratio degenerates at
// k^2 = 1, 5, 9, ... (denominator pole) and k^2 = 3, 7, 11, ... (numerator
// pole); only psi'/psi matters downstream, so the pair (c1, c2) is kept
// projectively, normalized to max(|c1|, |c2|) = 1, and the poles become
// ordinary points.
//
// Exact anchors used throughout the test suite:
//   k^2 = 1: psi ~ e^{-x^2/2},      L(x) = -x
//   k^2 = 3: psi ~ x e^{-x^2/2},    L(x) = 1/x - x

#include "semiwell/model.hpp"

namespace semiwell::harmonic {

struct Coefficients {
    double c1;
    double c2;
};

struct SolutionPair {
    double psi;
    double dpsi;
    double scale_note;  // common rescaling applied; psi'/psi is invariant
};

// Projective coefficient pair for given k^2; continuous in k^2 up to an
// overall sign, never throws (gamma poles select (1,0) or (0,1)).
Coefficients coefficients(double k2);

// (psi, psi') at x with |x| <= 3 (certified series domain).
SolutionPair psi_pair(double k2, double x);

// psi'/psi from the series representation.  Throws NodeError at nodes.
double log_derivative(double k2, double x);

// (psi, psi') up to scale at any x <= 0: the exact series inside the
// certified domain |x| <= 3, the ODE integration outside it (where the
// returned pair is (1, L) up to normalization, which loses the series'
// overall sign but no downstream quantity depends on it).
SolutionPair decaying_pair(double k2, double x);

// Independent oracle: integrates the Riccati equation
//   L' = (t^2 - k2) - L^2
// from x_start (<= -6) to x with the decaying-branch asymptote as initial
// condition, switching to the linear (psi, psi') system if L approaches a
// pole (node crossing).  Local error tolerance 1e-12.
double log_derivative_ode(double k2, double x, double x_start = -8.0);

// |psi''_num - (x^2 - k2) psi| / max(|psi|, |psi'|) with a 5-point central
// second difference (step 1e-3); validates the series against the ODE.
double ode_residual(double k2, double x);

}  // namespace semiwell::harmonic
