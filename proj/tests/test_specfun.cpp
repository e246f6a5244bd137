#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "semiwell/errors.hpp"
#include "semiwell/specfun.hpp"

using namespace semiwell;
namespace sf = semiwell::specfun;

TEST_CASE("gamma: exact values and poles") {
    CHECK(sf::gamma(0.5).value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(sf::gamma(1.0).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sf::gamma(6.0).value == doctest::Approx(120.0).epsilon(1e-12));
    CHECK_THROWS_AS(sf::gamma(0.0), PoleError);
    CHECK_THROWS_AS(sf::gamma(-3.0), PoleError);
    CHECK_THROWS_AS(sf::gamma(-7.0 - 1e-13), PoleError);  // inside pole tolerance
}

TEST_CASE("gamma: frozen reference values") {
    // 30-digit-arithmetic references, rounded to double.
    CHECK(sf::gamma(0.3).value ==
          doctest::Approx(2.9915689876875906283).epsilon(1e-13));
    CHECK(sf::gamma(7.5).value ==
          doctest::Approx(1871.2543057977883465).epsilon(1e-13));
    CHECK(sf::gamma(-2.5).value ==
          doctest::Approx(-0.94530872048294188123).epsilon(1e-12));
    CHECK(sf::gamma(0.125).value ==
          doctest::Approx(7.5339415987976119047).epsilon(1e-13));
}

TEST_CASE("gamma: recurrence Gamma(x+1) = x Gamma(x) on [0.1, 20]") {
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.1 + (20.0 - 0.1) * i / 200.0;
        const double lhs = sf::gamma(x + 1.0).value;
        const double rhs = x * sf::gamma(x).value;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("gamma: error channel is populated and non-negative") {
    const auto v = sf::gamma(4.2);
    CHECK(v.est_abs_error >= 0.0);
    CHECK(v.est_abs_error <= 1e-10 * std::abs(v.value));
    CHECK(std::isfinite(v.value));
}

TEST_CASE("kummer_1f1: closed-form cases") {
    CHECK(sf::kummer_1f1(0.0, 0.5, 2.7).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sf::kummer_1f1(1.0, 1.0, 1.0).value ==
          doctest::Approx(2.718281828459045).epsilon(1e-14));
    // Polynomial case: 1F1(-1, c; z) = 1 - z/c.
    CHECK(sf::kummer_1f1(-1.0, 0.5, 4.0).value == doctest::Approx(-7.0).epsilon(1e-14));
}

TEST_CASE("kummer_1f1: frozen reference value") {
    const auto v = sf::kummer_1f1(0.25, 0.5, 1.5);
    CHECK(v.value == doctest::Approx(2.5301603126879894467).epsilon(1e-14));
    CHECK(v.est_abs_error >= 0.0);
}

TEST_CASE("kummer_1f1: parameter and domain errors") {
    CHECK_THROWS_AS(sf::kummer_1f1(0.5, 0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(sf::kummer_1f1(0.5, -2.0, 1.0), ParameterError);
    CHECK_THROWS_AS(sf::kummer_1f1(0.5, 0.5, 25.5), DomainError);
    CHECK_THROWS_AS(sf::kummer_1f1(0.5, 0.5, -26.0), DomainError);
    CHECK_NOTHROW(sf::kummer_1f1(0.5, 0.5, 25.0));  // boundary of the domain
}

TEST_CASE("kummer_1f1_dz: closed forms and frozen value") {
    CHECK(sf::kummer_1f1_dz(0.0, 0.5, 3.0).value == 0.0);
    CHECK(sf::kummer_1f1_dz(1.0, 1.0, 1.0).value ==
          doctest::Approx(2.718281828459045).epsilon(1e-14));
    CHECK(sf::kummer_1f1_dz(0.25, 0.5, 1.5).value ==
          doctest::Approx(1.8379602618237812235).epsilon(1e-14));
}

TEST_CASE("kummer_1f1_dz: agrees with central difference") {
    const double cases[][3] = {{0.25, 0.5, 1.5}, {1.3, 2.2, 5.0},  {-2.7, 1.5, 3.3},
                               {0.8, 0.4, 7.0},  {-0.6, 0.7, 0.9}, {2.1, 3.3, 9.0}};
    for (const auto& c : cases) {
        const double h = 1e-6 * std::max(1.0, std::abs(c[2]));
        const double num = (sf::kummer_1f1(c[0], c[1], c[2] + h).value -
                            sf::kummer_1f1(c[0], c[1], c[2] - h).value) /
                           (2.0 * h);
        const double ana = sf::kummer_1f1_dz(c[0], c[1], c[2]).value;
        CHECK(std::abs(num - ana) <= 1e-7 * std::max(1.0, std::abs(ana)));
    }
}

TEST_CASE("kummer_1f1: Kummer transformation on 500 random parameter draws") {
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> par(-5.0, 5.0);
    std::uniform_real_distribution<double> arg(0.0, 9.0);
    int checked = 0;
    while (checked < 500) {
        const double a = par(rng);
        const double c = par(rng);
        const double z = arg(rng);
        // Keep c safely away from the non-positive integers.
        if (c < 0.6 && std::abs(c - std::round(c)) < 0.1) continue;
        const double lhs = sf::kummer_1f1(a, c, z).value;
        const double rhs = std::exp(z) * sf::kummer_1f1(c - a, c, -z).value;
        // The -z side is an alternating series: its cancellation error is
        // amplified by e^z, so the achievable agreement degrades with z.
        const double tol = 1e-10 * std::exp(z) * std::max(1.0, std::abs(lhs));
        CHECK(std::abs(lhs - rhs) <= tol);
        ++checked;
    }
}
