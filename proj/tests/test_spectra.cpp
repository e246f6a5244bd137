#include <cmath>

#include "doctest.h"
#include "semiwell/errors.hpp"
#include "semiwell/model.hpp"
#include "semiwell/spectra.hpp"

using namespace semiwell;
namespace sp = semiwell::spectra;
namespace md = semiwell::model;

TEST_CASE("matching_function_pure_delta: closed form and root refinement") {
    CHECK(sp::matching_function_pure_delta(1.0, -0.25) == 0.0);
    CHECK(sp::matching_function_pure_delta(1.0, -0.04) ==
          doctest::Approx(0.6).epsilon(1e-14));
    CHECK_THROWS_AS(sp::matching_function_pure_delta(1.0, 0.1), DomainError);

    CHECK(std::abs(sp::pure_delta_bound_energy(1.0) + 0.25) <= 1e-12);
    CHECK(std::abs(sp::pure_delta_bound_energy(2.0) + 1.0) <= 1e-12);
    CHECK_THROWS_AS(sp::pure_delta_bound_energy(0.0), DomainError);
}

TEST_CASE("matching_function: frozen oracle value and window guards") {
    const auto cfg = md::unit_area_symmetric(2.5);
    CHECK(sp::matching_function(cfg, -0.05) ==
          doctest::Approx(0.0076364765710514710236).epsilon(1e-9));
    CHECK_THROWS_AS(sp::matching_function(cfg, 0.0), DomainError);
    CHECK_THROWS_AS(sp::matching_function(cfg, -0.3), DomainError);  // below -v0
}

TEST_CASE("matching_function: finite and continuous toward threshold") {
    const auto cfg = md::unit_area_symmetric(2.5);
    const double f1 = sp::matching_function(cfg, -1e-6);
    const double f2 = sp::matching_function(cfg, -1e-8);
    CHECK(std::isfinite(f1));
    CHECK(std::isfinite(f2));
    CHECK(std::abs(f1 - f2) <= 2e-3);
}

TEST_CASE("bound_states: semi-harmonic unit-area wells hold exactly one state") {
    const auto u25 = sp::bound_states(md::unit_area_symmetric(2.5));
    REQUIRE(u25.size() == 1);
    CHECK(u25[0].index == 0);
    CHECK(u25[0].e == doctest::Approx(-0.0488272487003).epsilon(1e-9));
    // The refined root really is a root.
    CHECK(std::abs(sp::matching_function(md::unit_area_symmetric(2.5), u25[0].e)) <=
          1e-10);

    const auto u05 = sp::bound_states(md::unit_area_symmetric(0.5));
    REQUIRE(u05.size() == 1);
    CHECK(u05[0].e == doctest::Approx(-0.0374358166383).epsilon(1e-9));
}

TEST_CASE("bound_states: delta variant with the harmonic background") {
    const auto states = sp::bound_states(md::delta_config(1.0));
    REQUIRE(states.size() == 1);
    CHECK(states[0].e == doctest::Approx(-0.0797103537678).epsilon(1e-9));
    CHECK(std::abs(states[0].e + 0.0797104) <= 1e-5);
}

TEST_CASE("bound_states: energies inside the window and ordered") {
    const auto cfg = md::finite_config(1.0, 1.0, 10.0);  // deep well, two states
    const auto states = sp::bound_states(cfg);
    REQUIRE(states.size() >= 2);
    for (std::size_t i = 0; i < states.size(); ++i) {
        CHECK(states[i].e > -10.0);
        CHECK(states[i].e < 0.0);
        CHECK(states[i].index == static_cast<int>(i));
        if (i > 0) CHECK(states[i].e > states[i - 1].e);
    }
}

TEST_CASE("count_by_area: equal areas give equal counts") {
    const auto counts = sp::count_by_area(1.0, {0.5, 1.0, 2.5});
    REQUIRE(counts.size() == 3);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 1);
}

TEST_CASE("convergence to the delta well as the width shrinks") {
    const double e_delta = sp::bound_states(md::delta_config(1.0))[0].e;
    const double frozen[3][2] = {{0.02, -0.0768437895413},
                                 {0.01, -0.0782646783236},
                                 {0.005, -0.0789844401356}};
    double prev = 0.0;
    double e_half = 0.0, e_quarter = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto s = sp::bound_states(md::unit_area_symmetric(frozen[i][0]));
        REQUIRE(s.size() == 1);
        CHECK(s[0].e == doctest::Approx(frozen[i][1]).epsilon(1e-8));
        if (i > 0) CHECK(s[0].e < prev);  // monotone approach from above
        CHECK(s[0].e > e_delta);
        prev = s[0].e;
        if (i == 1) e_half = s[0].e;
        if (i == 2) e_quarter = s[0].e;
    }
    // Leading-order O(a) extrapolation lands on the published value.
    const double extrapolated = 2.0 * e_quarter - e_half;
    CHECK(std::abs(extrapolated + 0.0797104) <= 1e-4);
}

TEST_CASE("bound_states_ladder: cross-oracle agreement") {
    const auto cfg = md::unit_area_symmetric(2.5);
    const auto exact = sp::bound_states(cfg);
    const auto ladder = sp::bound_states_ladder(cfg, 50000);
    REQUIRE(exact.size() == 1);
    REQUIRE(ladder.size() == 1);
    CHECK(std::abs(exact[0].e - ladder[0].e) <= 5e-6);
    CHECK_THROWS_AS(sp::bound_states_ladder(md::delta_config(1.0), 1000),
                    VariantError);
}

TEST_CASE("matching_function_ladder: tracks the exact matching function") {
    const auto cfg = md::unit_area_symmetric(2.5);
    for (double e : {-0.15, -0.05, -0.01}) {
        const double exact = sp::matching_function(cfg, e);
        const double ladder = sp::matching_function_ladder(cfg, e, 50000);
        CHECK(std::abs(exact - ladder) <= 1e-5);
    }
    CHECK_THROWS_AS(sp::matching_function_ladder(cfg, -0.5, 100), DomainError);
    CHECK_THROWS_AS(sp::matching_function_ladder(md::delta_config(1.0), -0.1, 100),
                    VariantError);
}

TEST_CASE("upward displacement relative to the flat-background well") {
    const auto cfg = md::unit_area_symmetric(2.5);
    const auto semi = sp::bound_states(cfg);
    const auto rect = sp::bound_states_rectangular(cfg);
    REQUIRE(semi.size() == 1);
    REQUIRE(rect.size() == 1);
    CHECK(rect[0].e == doctest::Approx(-0.100577239091).epsilon(1e-9));
    CHECK(semi[0].e > rect[0].e);  // displaced toward the positive threshold
    CHECK_THROWS_AS(sp::bound_states_rectangular(md::delta_config(1.0)),
                    VariantError);
}

TEST_CASE("wide well: the a > 3 edge pair path finds a full spectrum") {
    const auto cfg = md::finite_config(5.0, 5.0, 2.0);  // area 20
    const auto exact = sp::bound_states(cfg);
    const auto ladder = sp::bound_states_ladder(cfg, 20000, -9.0);
    REQUIRE(exact.size() >= 2);
    REQUIRE(exact.size() == ladder.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
        CHECK(std::abs(exact[i].e - ladder[i].e) <= 1e-4);
}
