#include "semiwell/spectra.hpp"
#include "semiwell/errors.hpp"
#include "semiwell/harmonic.hpp"
#include "semiwell/stepladder.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace semiwell::spectra {

namespace {

// (psi, psi') at the right edge given the pair at the left edge of the well.
stepladder::LadderPair across_well(const model::WellConfig& cfg, model::Energy e,
                                   double psi_left, double dpsi_left) {
    const auto m = stepladder::segment_matrix(e, -cfg.v0, cfg.a + cfg.b);
    return {m.m11 * psi_left + m.m12 * dpsi_left,
            m.m21 * psi_left + m.m22 * dpsi_left};
}

double mismatch(double psi, double dpsi, double kappa) {
    return (dpsi + kappa * psi) / std::max(std::abs(psi), std::abs(dpsi));
}

// Interior sign changes of psi across the well, with the left pair given;
// used to label states by node count.
int interior_nodes(const model::WellConfig& cfg, model::Energy e, double psi_left,
                   double dpsi_left) {
    const int m = 2000;
    const double w = (cfg.a + cfg.b) / m;
    double p = psi_left, d = dpsi_left;
    int nodes = 0;
    double prev = p;
    for (int i = 0; i < m; ++i) {
        const auto seg = stepladder::segment_matrix(e, -cfg.v0, w);
        const double np = seg.m11 * p + seg.m12 * d;
        const double nd = seg.m21 * p + seg.m22 * d;
        p = np;
        d = nd;
        if (prev * p < 0.0) ++nodes;
        prev = p;
    }
    return nodes;
}

// Generic scan-bracket-bisect driver over a matching function on
// (e_lo, e_hi); bisection refines each bracket to 1e-12.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double e_lo, double e_hi, int n) {
    std::vector<double> roots;
    const double h = (e_hi - e_lo) / (n + 1);
    double prev_e = e_lo + h, prev_f = f(prev_e);
    for (int i = 2; i <= n; ++i) {
        const double e = e_lo + h * i;
        const double fe = f(e);
        if (prev_f == 0.0) {
            roots.push_back(prev_e);
        } else if (prev_f * fe < 0.0) {
            double lo = prev_e, hi = e, flo = prev_f;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_e = e;
        prev_f = fe;
    }
    return roots;
}

}  // namespace

double matching_function(const model::WellConfig& cfg, model::Energy e) {
    if (!(e < 0.0)) throw DomainError("matching_function: need e < 0");
    const double kappa = std::sqrt(-e);
    if (cfg.variant == model::Variant::Delta) {
        const auto h = harmonic::psi_pair(e, 0.0);
        return ((cfg.g - kappa) * h.psi - h.dpsi) /
               std::max(std::abs(h.psi), std::abs(h.dpsi));
    }
    if (!(e > -cfg.v0))
        throw DomainError("matching_function: need e in (-v0, 0)");
    const auto h = harmonic::decaying_pair(e, -cfg.a);
    const auto r = across_well(cfg, e, h.psi, h.dpsi);
    return mismatch(r.psi, r.dpsi, kappa);
}

double matching_function_pure_delta(double g, model::Energy e) {
    if (!(e < 0.0)) throw DomainError("matching_function_pure_delta: need e < 0");
    return g - 2.0 * std::sqrt(-e);
}

model::Energy pure_delta_bound_energy(double g) {
    if (!(g > 0.0)) throw DomainError("pure_delta_bound_energy: need g > 0");
    double lo = -g * g, hi = -1e-300;
    // F(lo) = -g < 0 < F(hi -> 0) = g; plain bisection to 1e-13.
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (matching_function_pure_delta(g, mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<BoundState> bound_states(const model::WellConfig& cfg) {
    const bool is_delta = cfg.variant == model::Variant::Delta;
    const double e_lo = is_delta ? -cfg.g * cfg.g : -cfg.v0;
    const auto f = [&](double e) { return matching_function(cfg, e); };

    for (int n : {2000, 20000}) {
        const auto roots = scan_roots(f, e_lo, 0.0, n);
        std::vector<BoundState> out;
        bool consistent = true;
        for (size_t i = 0; i < roots.size(); ++i) {
            out.push_back({roots[i], static_cast<int>(i)});
            if (!is_delta) {
                const auto h = harmonic::decaying_pair(roots[i], -cfg.a);
                if (interior_nodes(cfg, roots[i], h.psi, h.dpsi) !=
                    static_cast<int>(i)) {
                    consistent = false;  // scan missed a root; rescan finer
                    break;
                }
            }
        }
        if (consistent) return out;
    }
    throw Error("bound_states: node-count cross-check failed even after "
                "refined rescan");
}

std::vector<int> count_by_area(double area, const std::vector<double>& a_values) {
    std::vector<int> counts;
    counts.reserve(a_values.size());
    for (double a : a_values)
        counts.push_back(static_cast<int>(
            bound_states(model::unit_area_symmetric(a, area)).size()));
    return counts;
}

double matching_function_ladder(const model::WellConfig& cfg, model::Energy e,
                                int n, double x_min) {
    if (cfg.variant != model::Variant::Finite)
        throw VariantError("matching_function_ladder: finite wells only");
    if (!(e < 0.0 && e > -cfg.v0))
        throw DomainError("matching_function_ladder: need e in (-v0, 0)");
    auto steps = stepladder::discretize_harmonic(x_min, -cfg.a, n);
    steps.edges.push_back(cfg.b);
    steps.values.push_back(-cfg.v0);
    const auto p = stepladder::ladder_pair(e, steps);
    return mismatch(p.psi, p.dpsi, std::sqrt(-e));
}

std::vector<BoundState> bound_states_ladder(const model::WellConfig& cfg, int n,
                                            double x_min) {
    if (cfg.variant != model::Variant::Finite)
        throw VariantError("bound_states_ladder: finite wells only");
    auto steps = stepladder::discretize_harmonic(x_min, -cfg.a, n);
    steps.edges.push_back(cfg.b);
    steps.values.push_back(-cfg.v0);
    const auto f = [&](double e) {
        const auto p = stepladder::ladder_pair(e, steps);
        return mismatch(p.psi, p.dpsi, std::sqrt(-e));
    };
    const auto roots = scan_roots(f, -cfg.v0, 0.0, 2000);
    std::vector<BoundState> out;
    for (size_t i = 0; i < roots.size(); ++i)
        out.push_back({roots[i], static_cast<int>(i)});
    return out;
}

std::vector<BoundState> bound_states_rectangular(const model::WellConfig& cfg) {
    if (cfg.variant != model::Variant::Finite)
        throw VariantError("bound_states_rectangular: finite wells only");
    const auto f = [&](double e) {
        // Flat zero background on the left: the decaying branch enters the
        // well with psi'/psi = +kappa.
        const double kappa = std::sqrt(-e);
        const auto r = across_well(cfg, e, 1.0, kappa);
        return mismatch(r.psi, r.dpsi, kappa);
    };
    const auto roots = scan_roots(f, -cfg.v0, 0.0, 2000);
    std::vector<BoundState> out;
    for (size_t i = 0; i < roots.size(); ++i)
        out.push_back({roots[i], static_cast<int>(i)});
    return out;
}

}  // namespace semiwell::spectra
