#include "semiwell/harmonic.hpp"
#include "semiwell/errors.hpp"
#include "semiwell/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace semiwell::harmonic {

namespace {

// Embedded Fehlberg 4(5) pair; advances with the 5th-order solution.
// Generic over the state dimension so the same stepper serves the scalar
// Riccati equation and the linear (psi, psi') system.
template <int N, class Rhs>
struct Rkf45 {
    Rhs rhs;
    double atol = 1e-12;
    double rtol = 1e-12;

    using State = std::array<double, N>;

    // One attempted step from (t, y) with size h; returns the error estimate
    // and fills y_out (5th-order).
    double attempt(double t, const State& y, double h, State& y_out) const {
        State k1 = rhs(t, y), k2, k3, k4, k5, k6, tmp;
        auto axpy = [&](const State& base,
                        std::initializer_list<std::pair<double, const State*>> terms) {
            tmp = base;
            for (auto& [c, v] : terms)
                for (int i = 0; i < N; ++i) tmp[i] += h * c * (*v)[i];
            return tmp;
        };
        k2 = rhs(t + h / 4.0, axpy(y, {{1.0 / 4.0, &k1}}));
        k3 = rhs(t + 3.0 * h / 8.0, axpy(y, {{3.0 / 32, &k1}, {9.0 / 32, &k2}}));
        k4 = rhs(t + 12.0 * h / 13.0,
                 axpy(y, {{1932.0 / 2197, &k1}, {-7200.0 / 2197, &k2}, {7296.0 / 2197, &k3}}));
        k5 = rhs(t + h, axpy(y, {{439.0 / 216, &k1}, {-8.0, &k2},
                                 {3680.0 / 513, &k3}, {-845.0 / 4104, &k4}}));
        k6 = rhs(t + h / 2.0, axpy(y, {{-8.0 / 27, &k1}, {2.0, &k2}, {-3544.0 / 2565, &k3},
                                       {1859.0 / 4104, &k4}, {-11.0 / 40, &k5}}));
        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            const double y5 = y[i] + h * (16.0 / 135 * k1[i] + 6656.0 / 12825 * k3[i] +
                                          28561.0 / 56430 * k4[i] - 9.0 / 50 * k5[i] +
                                          2.0 / 55 * k6[i]);
            const double y4 = y[i] + h * (25.0 / 216 * k1[i] + 1408.0 / 2565 * k3[i] +
                                          2197.0 / 4104 * k4[i] - 1.0 / 5 * k5[i]);
            y_out[i] = y5;
            const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5));
            err = std::max(err, std::abs(y5 - y4) / scale);
        }
        return err;
    }

    // Integrate from t0 to t1 (t0 < t1).  on_accept may rescale the state
    // (renormalization); return false from keep_going to abort (pole escape).
    template <class Accept, class KeepGoing>
    void drive(double t0, double t1, State& y, Accept on_accept, KeepGoing keep_going) const {
        double t = t0;
        double h = (t1 - t0) / 64.0;
        State y_next;
        while (t < t1) {
            h = std::min(h, t1 - t);
            if (h < 1e-10)
                throw StiffnessError("rkf45: step collapsed below 1e-10 at t = " +
                                     std::to_string(t));
            const double err = attempt(t, y, h, y_next);
            if (err <= 1.0) {
                t += h;
                y = y_next;
                on_accept(y);
                if (!keep_going(y)) return;
            }
            const double grow = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
            h *= std::min(5.0, std::max(0.2, grow));
        }
    }
};

}  // namespace

Coefficients coefficients(double k2) {
    // c2/c1 = 2 Gamma((3-k2)/4) / Gamma((1-k2)/4), held projectively as
    // (c1, c2) = (Gamma_den, 2 Gamma_num) so either pole is a regular point.
    double num, den;
    bool num_pole = false, den_pole = false;
    try {
        num = specfun::gamma((3.0 - k2) / 4.0).value;
    } catch (const PoleError&) {
        num_pole = true;
        num = 0.0;
    }
    try {
        den = specfun::gamma((1.0 - k2) / 4.0).value;
    } catch (const PoleError&) {
        den_pole = true;
        den = 0.0;
    }
    if (num_pole) return {0.0, 1.0};  // ratio diverges: pure odd solution
    if (den_pole) return {1.0, 0.0};  // ratio vanishes: pure even solution
    double c1 = den, c2 = 2.0 * num;
    const double m = std::max(std::abs(c1), std::abs(c2));
    return {c1 / m, c2 / m};
}

SolutionPair psi_pair(double k2, double x) {
    if (std::abs(x) > 3.0)
        throw DomainError("psi_pair: |x| = " + std::to_string(std::abs(x)) +
                          " outside certified series domain |x| <= 3");
    const auto [c1, c2] = coefficients(k2);
    const double alpha = (1.0 - k2) / 4.0;
    const double z = x * x;

    const auto f1 = specfun::kummer_1f1(alpha, 0.5, z);
    const auto f2 = specfun::kummer_1f1(alpha + 0.5, 1.5, z);
    const auto f1z = specfun::kummer_1f1_dz(alpha, 0.5, z);
    const auto f2z = specfun::kummer_1f1_dz(alpha + 0.5, 1.5, z);

    const double pre = std::exp(-z / 2.0);
    const double bracket = c1 * f1.value + c2 * x * f2.value;
    const double psi = pre * bracket;
    // d/dx: chain rule through z = x^2 plus the explicit x factors.
    const double dbracket =
        2.0 * x * c1 * f1z.value + c2 * f2.value + 2.0 * c2 * z * f2z.value;
    const double dpsi = pre * (-x * bracket + dbracket);

    const double est = pre * (std::abs(c1) * (f1.est_abs_error + 2.0 * std::abs(x) * f1z.est_abs_error) +
                              std::abs(c2) * (std::abs(x) * f2.est_abs_error + f2.est_abs_error +
                                              2.0 * z * f2z.est_abs_error));
    if (est > 1e-6 * std::max(std::abs(psi), std::abs(dpsi)))
        throw PrecisionError("psi_pair: cancellation estimate " + std::to_string(est) +
                             " exceeds 1e-6 of the result at x = " + std::to_string(x));
    return {psi, dpsi, 1.0};
}

double log_derivative(double k2, double x) {
    const auto s = psi_pair(k2, x);
    if (std::abs(s.psi) < 1e-12 * std::max(std::abs(s.psi), std::abs(s.dpsi)))
        throw NodeError("log_derivative: psi has a node at x = " + std::to_string(x));
    return s.dpsi / s.psi;
}

SolutionPair decaying_pair(double k2, double x) {
    if (std::abs(x) <= 3.0) return psi_pair(k2, x);
    if (x > 0.0) throw DomainError("decaying_pair: need x <= 0");
    const double L = log_derivative_ode(k2, x, std::min(-8.0, x - 5.0));
    const double m = std::max(1.0, std::abs(L));
    return {1.0 / m, L / m, 1.0};
}

double log_derivative_ode(double k2, double x, double x_start) {
    if (x_start > -6.0)
        throw DomainError("log_derivative_ode: x_start must be <= -6");
    if (!(x_start < x && x <= 0.0))
        throw DomainError("log_derivative_ode: need x_start < x <= 0");

    // Decaying branch: psi ~ e^{-t^2/2} |t|^{(k2-1)/2}, so
    // L(t) = -t + (k2 - 1)/(2t) + O(1/t^3).
    double L = -x_start + (k2 - 1.0) / (2.0 * x_start);

    const auto riccati = [k2](double t, const std::array<double, 1>& y) {
        return std::array<double, 1>{(t * t - k2) - y[0] * y[0]};
    };
    const auto linear = [k2](double t, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], (t * t - k2) * y[0]};
    };

    Rkf45<1, decltype(riccati)> scalar{riccati};
    Rkf45<2, decltype(linear)> vec{linear};

    std::array<double, 1> yL{L};
    try {
        // Abort the scalar flow if L runs away toward a pole of psi'/psi
        // (a node of psi between x_start and x).
        scalar.drive(
            x_start, x, yL, [](const std::array<double, 1>&) {},
            [](const std::array<double, 1>& y) { return std::abs(y[0]) < 1e6; });
        if (std::abs(yL[0]) < 1e6) return yL[0];
    } catch (const StiffnessError&) {
        // fall through to the linear formulation
    }

    // The scalar path hit a pole.  Restart with the pole-free linear system
    // from x_start (cost is comparable; no abort position to track).
    std::array<double, 2> y{1.0, L};
    vec.drive(
        x_start, x, y,
        [](std::array<double, 2>& s) {
            const double m = std::max(std::abs(s[0]), std::abs(s[1]));
            if (m > 1e6) {
                s[0] /= m;
                s[1] /= m;
            }
        },
        [](const std::array<double, 2>&) { return true; });
    if (std::abs(y[0]) < 1e-300 * std::abs(y[1]))
        throw NodeError("log_derivative_ode: endpoint lies on a node of psi");
    return y[1] / y[0];
}

double ode_residual(double k2, double x) {
    if (std::abs(x) > 2.9)
        throw DomainError("ode_residual: need |x| <= 2.9 for the stencil");
    const double h = 1e-3;
    const auto at = [&](double t) { return psi_pair(k2, t); };
    const auto c = at(x);
    const double d2 = (-at(x - 2 * h).psi + 16.0 * at(x - h).psi - 30.0 * c.psi +
                       16.0 * at(x + h).psi - at(x + 2 * h).psi) /
                      (12.0 * h * h);
    return std::abs(d2 - (x * x - k2) * c.psi) /
           std::max(std::abs(c.psi), std::abs(c.dpsi));
}

}  // namespace semiwell::harmonic
