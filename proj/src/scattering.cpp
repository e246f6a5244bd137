#include "semiwell/scattering.hpp"
#include "semiwell/errors.hpp"
#include "semiwell/harmonic.hpp"
#include "semiwell/stepladder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace semiwell::scattering {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// (psi, psi') just left of the matching point x_R, from the exact harmonic
// solution, normalized to max magnitude 1.
struct MatchPair {
    double psi;
    double dpsi;
    double x_r;
};

MatchPair match_pair(const model::WellConfig& cfg, model::Energy e) {
    if (!(e > 0.0)) throw DomainError("scattering: need e > 0");
    if (cfg.variant == model::Variant::Delta) {
        const auto h = harmonic::psi_pair(e, 0.0);
        // Derivative jump at the delta: psi'(0+) = psi'(0-) - g psi(0).
        double p = h.psi, d = h.dpsi - cfg.g * h.psi;
        const double m = std::max(std::abs(p), std::abs(d));
        return {p / m, d / m, 0.0};
    }
    const auto h = harmonic::decaying_pair(e, -cfg.a);
    const auto m = stepladder::segment_matrix(e, -cfg.v0, cfg.a + cfg.b);
    double p = m.m11 * h.psi + m.m12 * h.dpsi;
    double d = m.m21 * h.psi + m.m22 * h.dpsi;
    const double norm = std::max(std::abs(p), std::abs(d));
    return {p / norm, d / norm, cfg.b};
}

ReflectionPoint amplitude_from_pair(model::Energy e, double psi, double dpsi,
                                    double x_r) {
    const double k = std::sqrt(e);
    const std::complex<double> ik(0.0, k);
    // Numerator and denominator are complex conjugates for real (psi, psi'),
    // so |S| = 1 up to rounding.
    std::complex<double> s = std::polar(1.0, -2.0 * k * x_r) *
                             ((ik * psi + dpsi) / (ik * psi - dpsi));
    ReflectionPoint out;
    out.e = e;
    out.s_re = s.real();
    out.s_im = s.imag();
    out.delta = std::atan2(s.imag(), s.real());
    return out;
}

}  // namespace

double wrap_angle(double d) {
    d = std::fmod(d, 2.0 * kPi);
    if (d <= -kPi) d += 2.0 * kPi;
    if (d > kPi) d -= 2.0 * kPi;
    return d;
}

double interior_log_derivative(const model::WellConfig& cfg, model::Energy e) {
    if (cfg.variant == model::Variant::Delta) {
        return harmonic::log_derivative(e, 0.0) - cfg.g;
    }
    if (!(e > 0.0)) throw DomainError("interior_log_derivative: need e > 0");
    const MatchPair p = match_pair(cfg, e);
    if (std::abs(p.psi) < 1e-12 * std::max(std::abs(p.psi), std::abs(p.dpsi)))
        throw NodeError("interior_log_derivative: psi vanishes at the right edge");
    return p.dpsi / p.psi;
}

ReflectionPoint reflection_amplitude(const model::WellConfig& cfg, model::Energy e) {
    const MatchPair p = match_pair(cfg, e);
    return amplitude_from_pair(e, p.psi, p.dpsi, p.x_r);
}

ReflectionPoint reflection_amplitude_ladder(const model::WellConfig& cfg,
                                            model::Energy e, int n, double x_min) {
    if (cfg.variant != model::Variant::Finite)
        throw VariantError("reflection_amplitude_ladder: finite wells only");
    auto steps = stepladder::discretize_harmonic(x_min, -cfg.a, n);
    steps.edges.push_back(cfg.b);
    steps.values.push_back(-cfg.v0);
    const auto pair = stepladder::ladder_pair(e, steps);
    return amplitude_from_pair(e, pair.psi, pair.dpsi, cfg.b);
}

std::vector<ReflectionPoint> phase_curve(const model::WellConfig& cfg,
                                         model::Energy e_min, model::Energy e_max,
                                         int n0) {
    if (!(0.0 < e_min && e_min < e_max))
        throw DomainError("phase_curve: need 0 < e_min < e_max");
    if (n0 < 2) throw DomainError("phase_curve: need n0 >= 2");
    constexpr size_t kBudget = 200000;

    std::vector<ReflectionPoint> pts;
    pts.reserve(n0);
    for (int i = 0; i < n0; ++i) {
        const double e = e_min + (e_max - e_min) * i / (n0 - 1);
        pts.push_back(reflection_amplitude(cfg, e));
    }

    // Bisect every gap whose wrapped jump exceeds pi/2 until quiet.
    bool refined = true;
    while (refined) {
        refined = false;
        std::vector<ReflectionPoint> next;
        next.reserve(pts.size() * 2);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            next.push_back(pts[i]);
            const double gap = wrap_angle(pts[i + 1].delta - pts[i].delta);
            if (std::abs(gap) > kPi / 2.0 && pts[i + 1].e - pts[i].e > 1e-14) {
                if (next.size() + pts.size() - i >= kBudget)
                    throw GridError("phase_curve: refinement budget of 2e5 "
                                    "points exhausted");
                next.push_back(
                    reflection_amplitude(cfg, 0.5 * (pts[i].e + pts[i + 1].e)));
                refined = true;
            }
        }
        next.push_back(pts.back());
        pts.swap(next);
    }

    // Unwrap: anchor the first point at its principal value, then continue.
    for (size_t i = 1; i < pts.size(); ++i)
        pts[i].delta = pts[i - 1].delta + wrap_angle(pts[i].delta - pts[i - 1].delta);
    return pts;
}

PhiPair phi_pair(const model::WellConfig& cfg, model::Energy e) {
    if (!(e > 0.0)) throw DomainError("phi_pair: need e > 0");
    const double k = std::sqrt(e);
    if (cfg.variant == model::Variant::Delta) {
        return {harmonic::log_derivative(e, 0.0) - cfg.g, k};
    }
    if (cfg.a != cfg.b)
        throw GeometryError("phi_pair: closed forms certified only for a = b");
    const double q = std::sqrt(cfg.v0 + e);
    const auto h = harmonic::decaying_pair(e, -cfg.a);
    if (std::abs(h.psi) < 1e-12 * std::max(std::abs(h.psi), std::abs(h.dpsi)))
        throw NodeError("phi_pair: psi has a node at the well edge");
    const double L = h.dpsi / h.psi;
    const double s = std::sin(2.0 * q * cfg.a), c = std::cos(2.0 * q * cfg.a);
    return {-q * s + L * c, k * c + (k / q) * L * s};
}

double phase_paper(const model::WellConfig& cfg, model::Energy e) {
    if (cfg.variant == model::Variant::Finite && cfg.a != cfg.b)
        throw GeometryError("phase_paper: closed forms certified only for a = b");
    const MatchPair p = match_pair(cfg, e);
    const double k = std::sqrt(e);
    // Homogeneous form of 2 atan2(phi2, phi1): (phi1, phi2) is proportional
    // to (psi', k psi) at the matching point, and the doubled angle is
    // insensitive to the joint sign.
    return 2.0 * std::atan2(k * p.psi, p.dpsi);
}

}  // namespace semiwell::scattering
