#pragma once

// Geometry and unit conventions of the semi-harmonic square well.
//
// Dimensionless units: hbar^2/(2m) = 1 and unit harmonic prefactor, so the
// stationary equation is -psi'' + V(x) psi = E psi with
//
//   V(x) = x^2        for x < -a      (harmonic background)
//        = -v0        for -a <= x <= b (rectangular well)
//        = 0          for x > b       (free region)
//
// and E = k^2, q = sqrt(v0 + k^2).  The Delta variant models
// V = -g delta(x) with the harmonic background on x < 0.

#include <cmath>

namespace semiwell::model {

using Energy = double;

enum class Variant { Finite, Delta };

struct WellConfig {
    Variant variant = Variant::Finite;
    double a = 0.0;   // left half-width (well spans (-a, b))
    double b = 0.0;   // right edge
    double v0 = 0.0;  // depth (positive number, potential is -v0)
    double g = 0.0;   // delta strength (Delta variant only)

    double area() const {
        return variant == Variant::Finite ? (a + b) * v0 : g;
    }
};

// Unit-area-style family: b = a, v0 = area/(2a); the canonical family has
// area 1 ((a+b) v0 = 1).
WellConfig unit_area_symmetric(double a, double area = 1.0);

// Raw geometry constructor with validation.
WellConfig finite_config(double a, double b, double v0);

// V(x) = -g delta(x) with strength g > 0.
WellConfig delta_config(double g);

// Pointwise potential; Finite variant only.
double potential(const WellConfig& cfg, double x);

struct Wavenumbers {
    double k;  // exterior wavenumber sqrt(E)
    double q;  // interior wavenumber sqrt(v0 + E)
};

// k = sqrt(e), q = sqrt(v0 + e); requires e > 0 (scattering regime).
Wavenumbers wavenumbers(const WellConfig& cfg, Energy e);

}  // namespace semiwell::model
