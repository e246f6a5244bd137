#include "semiwell/model.hpp"
#include "semiwell/errors.hpp"

#include <string>

namespace semiwell::model {

WellConfig unit_area_symmetric(double a, double area) {
    if (!(a > 0.0))
        throw DomainError("unit_area_symmetric: need a > 0 (use delta_config "
                          "for the zero-width limit)");
    if (!(area > 0.0))
        throw DomainError("unit_area_symmetric: need area > 0");
    WellConfig cfg;
    cfg.variant = Variant::Finite;
    cfg.a = a;
    cfg.b = a;
    cfg.v0 = area / (2.0 * a);
    return cfg;
}

WellConfig finite_config(double a, double b, double v0) {
    if (a < 0.0 || b < 0.0 || !(a + b > 0.0))
        throw DomainError("finite_config: need a, b >= 0 with a + b > 0");
    if (!(v0 > 0.0)) throw DomainError("finite_config: need v0 > 0");
    WellConfig cfg;
    cfg.variant = Variant::Finite;
    cfg.a = a;
    cfg.b = b;
    cfg.v0 = v0;
    return cfg;
}

WellConfig delta_config(double g) {
    if (!(g > 0.0)) throw DomainError("delta_config: need g > 0");
    WellConfig cfg;
    cfg.variant = Variant::Delta;
    cfg.g = g;
    return cfg;
}

double potential(const WellConfig& cfg, double x) {
    if (cfg.variant != Variant::Finite)
        throw VariantError("potential: Delta variant has no pointwise value");
    if (x < -cfg.a) return x * x;
    if (x <= cfg.b) return -cfg.v0;
    return 0.0;
}

Wavenumbers wavenumbers(const WellConfig& cfg, Energy e) {
    if (!(e > 0.0))
        throw DomainError("wavenumbers: scattering requires e > 0 (got " +
                          std::to_string(e) + ")");
    const double v0 = cfg.variant == Variant::Finite ? cfg.v0 : 0.0;
    return {std::sqrt(e), std::sqrt(v0 + e)};
}

}  // namespace semiwell::model
