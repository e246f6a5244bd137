#include "semiwell/stepladder.hpp"
#include "semiwell/errors.hpp"

#include <cmath>
#include <string>

namespace semiwell::stepladder {

TransferMatrix segment_matrix(model::Energy e, double v, double w) {
    if (!(w > 0.0)) throw DomainError("segment_matrix: need width w > 0");
    const double d = e - v;
    if (std::abs(d) < 1e-12) return {1.0, w, 0.0, 1.0};  // free drift
    if (d > 0.0) {
        const double kappa = std::sqrt(d);
        const double c = std::cos(kappa * w), s = std::sin(kappa * w);
        return {c, s / kappa, -kappa * s, c};
    }
    const double mu = std::sqrt(-d);
    const double c = std::cosh(mu * w), s = std::sinh(mu * w);
    return {c, s / mu, mu * s, c};
}

StepPotential discretize_harmonic(double x_min, double x_match, int n) {
    if (!(x_min < x_match) || x_match > 0.0)
        throw DomainError("discretize_harmonic: need x_min < x_match <= 0");
    if (n < 1) throw DomainError("discretize_harmonic: need n >= 1");
    StepPotential steps;
    steps.edges.resize(n + 1);
    steps.values.resize(n);
    const double h = (x_match - x_min) / n;
    for (int i = 0; i <= n; ++i) steps.edges[i] = x_min + h * i;
    steps.edges[n] = x_match;  // exact right edge
    for (int i = 0; i < n; ++i) {
        const double mid = x_min + h * (i + 0.5);
        steps.values[i] = mid * mid;
    }
    return steps;
}

LadderPair ladder_pair(model::Energy e, const StepPotential& steps) {
    if (steps.values.empty())
        throw DomainError("ladder_pair: empty step potential");
    if (!(e < steps.values.front()))
        throw DomainError("ladder_pair: energy must lie below the leftmost "
                          "segment for a decaying start");
    double psi = 1.0;
    double dpsi = std::sqrt(steps.values.front() - e);
    for (size_t i = 0; i < steps.values.size(); ++i) {
        const double w = steps.edges[i + 1] - steps.edges[i];
        const TransferMatrix m = segment_matrix(e, steps.values[i], w);
        const double p = m.m11 * psi + m.m12 * dpsi;
        const double d = m.m21 * psi + m.m22 * dpsi;
        const double norm = std::max(std::abs(p), std::abs(d));
        psi = p / norm;
        dpsi = d / norm;
    }
    return {psi, dpsi};
}

double ladder_log_derivative(model::Energy e, const StepPotential& steps) {
    const LadderPair p = ladder_pair(e, steps);
    if (std::abs(p.psi) < 1e-12 * std::max(std::abs(p.psi), std::abs(p.dpsi)))
        throw NodeError("ladder_log_derivative: psi vanishes at the ladder end");
    return p.dpsi / p.psi;
}

std::vector<double> cutoff_profile(const StepPotential& steps, double e0) {
    std::vector<double> out;
    out.reserve(steps.values.size());
    for (double v : steps.values) {
        const double s = v + e0;
        if (s < 0.0)
            throw DomainError("cutoff_profile: V + e0 = " + std::to_string(s) +
                              " is negative; shift the baseline");
        out.push_back(std::sqrt(s));
    }
    return out;
}

}  // namespace semiwell::stepladder
