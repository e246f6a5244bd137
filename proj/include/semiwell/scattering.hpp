#pragma once

// Reflection problem: propagate the exact harmonic-region solution through
// the well, form the unitary reflection amplitude S = e^{i delta} for the
// incident wave e^{-ikx}, unwrap phase curves, and evaluate the closed-form
// phase functions phi_1/phi_2.
//
// Matching at the right edge x_R (= b for the finite well, 0 for the delta
// variant) with a real interior pair (psi, psi'):
//
//   S = e^{-2 i k x_R} (ik psi + psi') / (ik psi - psi'),   |S| = 1.
//
// S is always evaluated in homogeneous (psi, psi') form: the scalar
// log-derivative has poles at nodes of psi, but S is smooth there.

#include <vector>

#include "semiwell/model.hpp"

namespace semiwell::scattering {

struct ReflectionPoint {
    model::Energy e;
    double s_re;
    double s_im;
    double delta;  // radians; principal value, unwrapped by phase_curve
};

struct PhiPair {
    double phi1;
    double phi2;
};

// psi'/psi just inside the right edge, obtained by transfer-matrix
// propagation of the harmonic pair across the well; Delta variant returns
// L_h(0) - g (derivative jump psi'(0+) - psi'(0-) = -g psi(0)).
// Throws NodeError where psi(x_R) vanishes; use reflection_amplitude there.
double interior_log_derivative(const model::WellConfig& cfg, model::Energy e);

// Unitary reflection amplitude with principal-value phase.
ReflectionPoint reflection_amplitude(const model::WellConfig& cfg, model::Energy e);

// Same amplitude from the independent step-ladder oracle: the harmonic
// region [x_min, -a] discretized into n midpoint rectangles, then the well
// appended as one exact segment.  Used for cross-oracle validation.
ReflectionPoint reflection_amplitude_ladder(const model::WellConfig& cfg,
                                            model::Energy e, int n,
                                            double x_min = -8.0);

// Adaptive unwrapped phase curve on [e_min, e_max]: starts from n0 uniform
// points and bisects every gap whose wrapped phase jump exceeds pi/2, up to
// 2e5 points (GridError beyond).  delta of the first point is the principal
// value; subsequent values continue it smoothly.
std::vector<ReflectionPoint> phase_curve(const model::WellConfig& cfg,
                                         model::Energy e_min, model::Energy e_max,
                                         int n0);

// Closed-form pair, with L = psi'/psi at the left edge:
//   phi1 = -q sin 2qa + L cos 2qa
//   phi2 =  k cos 2qa + (k/q) L sin 2qa
// (for the delta variant: phi1 = L_h(0) - g, phi2 = k).  Certified only for
// a = b, the configuration the closed forms are derived for (GeometryError
// otherwise).  See the repository notes: the source display of these
// formulas does not reproduce the published sign-change energies; this
// corrected pair does, and 2 atan2(phi2, phi1) then matches the matching
// phase of reflection_amplitude up to the geometric term 2kb.
PhiPair phi_pair(const model::WellConfig& cfg, model::Energy e);

// Continuous-branch phase 2 atan2(phi2, phi1), evaluated in homogeneous
// (psi, psi') form so nodes of psi at the matching point stay regular.
// Equals arctan(2 phi1 phi2 / (phi1^2 - phi2^2)) modulo pi.
double phase_paper(const model::WellConfig& cfg, model::Energy e);

// Wrap an angle difference into (-pi, pi].
double wrap_angle(double d);

}  // namespace semiwell::scattering
