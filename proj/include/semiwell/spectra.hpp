#pragma once

// Bound-state spectrum on E in (-v0, 0): matching-determinant root finding
// with a node-count cross-check, the equal-area counting property, and the
// delta-well reference values.

#include <vector>

#include "semiwell/model.hpp"

namespace semiwell::spectra {

struct BoundState {
    model::Energy e;  // negative
    int index;        // ordering by energy, ground state = 0
};

// Homogeneous matching mismatch, zero exactly at bound states:
//   Finite: psi'(b) + kappa psi(b), from the harmonic pair propagated
//           across the well, normalized by max(|psi(b)|, |psi'(b)|);
//   Delta:  (g - kappa) psi(0) - psi'(0-), same normalization,
// with kappa = sqrt(-e) the exterior decay constant.  The normalization
// keeps nodes of psi at the matching point from producing spurious poles.
double matching_function(const model::WellConfig& cfg, model::Energy e);

// Pure delta well without the harmonic background (reference stub):
// F(e) = g - 2 kappa, root at e = -g^2/4.
double matching_function_pure_delta(double g, model::Energy e);

// Ground-state energy of the pure delta well found by actual root
// refinement of the stub (not the closed form), |de| <= 1e-14.
model::Energy pure_delta_bound_energy(double g);

// All bound states: 2000-point scan of the energy window, sign-change
// bracketing, bisection to 1e-12, node-count cross-check (state i has
// exactly i interior sign changes of psi).
std::vector<BoundState> bound_states(const model::WellConfig& cfg);

// Bound-state counts for the family b = a, v0 = area/(2a).
std::vector<int> count_by_area(double area, const std::vector<double>& a_values);

// Stepladder-only variants for cross-oracle validation: the harmonic region
// is discretized into n midpoint rectangles on [x_min, -a].
double matching_function_ladder(const model::WellConfig& cfg, model::Energy e,
                                int n, double x_min = -8.0);
std::vector<BoundState> bound_states_ladder(const model::WellConfig& cfg, int n,
                                            double x_min = -8.0);

// Same rectangular well with a flat zero background on both sides (the
// harmonic wall replaced by a barrier of matching evanescence); reference
// for the upward-displacement property.
std::vector<BoundState> bound_states_rectangular(const model::WellConfig& cfg);

}  // namespace semiwell::spectra
