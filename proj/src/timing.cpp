#include "semiwell/timing.hpp"
#include "semiwell/errors.hpp"
#include "semiwell/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semiwell::timing {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kThresholdGuard = 1e-4;

// Unwrapped matching phase at the 6 stencil offsets around k, then the
// 4-point central derivative at steps h and h/2 combined by one Richardson
// step (both stencils are O(h^4), so the combination is (16 D_{h/2} - D_h)/15).
double phase_derivative_k(const model::WellConfig& cfg, double k, double h) {
    const double off[6] = {-2.0 * h, -h, -0.5 * h, 0.5 * h, h, 2.0 * h};
    double phi[6];
    for (int i = 0; i < 6; ++i)
        phi[i] = scattering::phase_paper(cfg, (k + off[i]) * (k + off[i]));
    // Local unwrap along the sorted stencil; the true phase moves by
    // O(tau_e * v_g * h) between neighbors, far less than pi/2.
    for (int i = 1; i < 6; ++i) {
        const double jump = scattering::wrap_angle(phi[i] - phi[i - 1]);
        if (std::abs(jump) > kPi / 2.0)
            throw DerivativeError("tau_e: stencil unwrapping failed near k = " +
                                  std::to_string(k));
        phi[i] = phi[i - 1] + jump;
    }
    const double d_h = (phi[0] - 8.0 * phi[1] + 8.0 * phi[4] - phi[5]) / (12.0 * h);
    const double d_h2 = (phi[1] - 8.0 * phi[2] + 8.0 * phi[3] - phi[4]) / (6.0 * h);
    return (16.0 * d_h2 - d_h) / 15.0;
}

}  // namespace

double group_velocity(model::Energy e) {
    if (!(e > 0.0)) throw DomainError("group_velocity: need e > 0");
    return 2.0 * std::sqrt(e);
}

double tau_p(const model::WellConfig& cfg, model::Energy e) {
    if (!(e > 0.0)) throw DomainError("tau_p: need e > 0");
    if (cfg.variant == model::Variant::Delta) return 0.0;
    return 2.0 * cfg.a / group_velocity(e);
}

double tau_e(const model::WellConfig& cfg, model::Energy e) {
    if (!(e >= kThresholdGuard))
        throw DomainError("tau_e: e below the threshold guard 1e-4 (v_g -> 0 "
                          "amplifies derivative noise)");
    const double k = std::sqrt(e);
    const double h = std::max(1e-4, 1e-3 * k);
    return phase_derivative_k(cfg, k, h) / group_velocity(e);
}

DelaySample tau_w(const model::WellConfig& cfg, model::Energy e) {
    DelaySample s;
    s.e = e;
    s.tau_p = tau_p(cfg, e);
    s.tau_e = tau_e(cfg, e);
    s.tau_w = s.tau_p - s.tau_e;
    return s;
}

model::Energy find_sign_change(const model::WellConfig& cfg, model::Energy e_lo,
                               model::Energy e_hi) {
    double lo = e_lo, hi = e_hi;
    double f_lo = tau_e(cfg, lo), f_hi = tau_e(cfg, hi);
    if (f_lo * f_hi >= 0.0)
        throw BracketError("find_sign_change: tau_e has the same sign at both "
                           "bracket endpoints");
    for (int it = 0; it < 200 && hi - lo > 1e-7; ++it) {
        // Secant candidate, accepted only if it lands safely inside.
        double mid = 0.5 * (lo + hi);
        const double denom = f_hi - f_lo;
        if (denom != 0.0) {
            const double sec = lo - f_lo * (hi - lo) / denom;
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) mid = sec;
        }
        const double f_mid = tau_e(cfg, mid);
        if (f_mid == 0.0) return mid;
        if (f_lo * f_mid < 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

FeatureSet delay_maxima(const model::WellConfig& cfg, model::Energy e_min,
                        model::Energy e_max) {
    if (!(0.0 < e_min && e_min < e_max))
        throw DomainError("delay_maxima: need 0 < e_min < e_max");
    const auto curve = scattering::phase_curve(cfg, e_min, e_max, 400);

    std::vector<double> es, taus;
    es.reserve(curve.size());
    for (const auto& pt : curve) {
        es.push_back(pt.e);
        taus.push_back(tau_e(cfg, pt.e));
    }

    FeatureSet out;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    for (size_t i = 1; i + 1 < taus.size(); ++i) {
        if (!(taus[i] > taus[i - 1] && taus[i] > taus[i + 1])) continue;
        // Golden-section refinement of the bracketed maximum.
        double a = es[i - 1], b = es[i + 1];
        double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
        double f1 = tau_e(cfg, x1), f2 = tau_e(cfg, x2);
        while (b - a > 1e-6) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + golden * (b - a);
                f2 = tau_e(cfg, x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - golden * (b - a);
                f1 = tau_e(cfg, x1);
            }
        }
        const double m = 0.5 * (a + b);
        if (out.maxima.empty() || m - out.maxima.back() > 1e-6)
            out.maxima.push_back(m);
    }
    std::sort(out.maxima.begin(), out.maxima.end());
    return out;
}

DeltaLimitResult delta_limit_ea(double area) {
    if (!(area > 0.0)) throw DomainError("delta_limit_ea: need area > 0");

    const auto locate = [](const model::WellConfig& cfg) {
        // Coarse scan for the bracket, then the refined root.
        const double lo = 0.01, hi = 2.0;
        const int n = 400;
        double prev_e = lo, prev_f = tau_e(cfg, lo);
        for (int i = 1; i <= n; ++i) {
            const double e = lo + (hi - lo) * i / n;
            const double f = tau_e(cfg, e);
            if (prev_f * f < 0.0) return find_sign_change(cfg, prev_e, e);
            prev_e = e;
            prev_f = f;
        }
        throw BracketError("delta_limit_ea: no sign change of tau_e in (0.01, 2)");
    };

    DeltaLimitResult out;
    const double widths[4] = {0.02, 0.01, 0.005, 0.0025};
    for (int i = 0; i < 4; ++i) {
        out.by_width[i] = {widths[i],
                           locate(model::unit_area_symmetric(widths[i], area))};
    }
    // One Richardson step on the two smallest widths, leading order O(a):
    // E(0) ~ 2 E(a/2) - E(a).
    out.extrapolated = 2.0 * out.by_width[3].second - out.by_width[2].second;
    out.delta_direct = locate(model::delta_config(area));
    return out;
}

}  // namespace semiwell::timing
