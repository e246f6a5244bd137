#pragma once

// Phase time and time delay.  The defining relation is
//
//   tau_w = tau_p - tau_e,   tau_p = 2a / v_g,   v_g = 2k,
//
// with the time delay computed from the closed-form matching phase:
//
//   tau_e = (1/v_g) d/dk [ 2 atan2(phi2, phi1) ],
//
// differentiated numerically (4-point central stencil in k plus one
// Richardson step).  tau_e is negative below the sign-change energy E_a
// (advanced reflection) and positive above, matching the published
// sign-change table; the a -> 0 limit is handled both by extrapolation in
// a and by the explicit delta variant.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "semiwell/model.hpp"

namespace semiwell::timing {

struct DelaySample {
    model::Energy e;
    double tau_p;
    double tau_e;
    double tau_w;  // always tau_p - tau_e
};

struct FeatureSet {
    std::optional<model::Energy> e_a;  // sign change of tau_e, if located
    std::vector<model::Energy> maxima;  // local maxima of tau_e, sorted
};

struct DeltaLimitResult {
    model::Energy extrapolated;   // Richardson limit of E_a(a) as a -> 0
    model::Energy delta_direct;   // sign change of the explicit delta variant
    std::array<std::pair<double, model::Energy>, 4> by_width;  // (a, E_a)
};

// v_g = 2 sqrt(e).
double group_velocity(model::Energy e);

// Classical flight time 2a / v_g; zero for the delta variant.
double tau_p(const model::WellConfig& cfg, model::Energy e);

// Time delay from the k-derivative of the matching phase.  Guarded below
// e = 1e-4 where v_g -> 0 amplifies derivative noise (DomainError).
double tau_e(const model::WellConfig& cfg, model::Energy e);

// Assembles the full sample; tau_w = tau_p - tau_e by construction.
DelaySample tau_w(const model::WellConfig& cfg, model::Energy e);

// Root of tau_e on a bracketing interval (bisection with secant
// acceleration, |dE| <= 1e-7).  BracketError if the endpoint signs agree.
model::Energy find_sign_change(const model::WellConfig& cfg, model::Energy e_lo,
                               model::Energy e_hi);

// Local maxima of tau_e on [e_min, e_max], located on the adaptive grid of
// phase_curve and refined by golden-section search to dE <= 1e-6.
FeatureSet delay_maxima(const model::WellConfig& cfg, model::Energy e_min,
                        model::Energy e_max);

// E_a of the unit-area-style family at a in {0.02, 0.01, 0.005, 0.0025},
// Richardson-extrapolated in a (leading order O(a)), next to the explicit
// delta-variant sign change for comparison.
DeltaLimitResult delta_limit_ea(double area);

}  // namespace semiwell::timing
