#include <cmath>

#include <doctest.h>

#include "basiskit/market.hpp"

namespace bk = basiskit;

TEST_CASE("portfolio construction is delta neutral for any tether") {
    for (double zeta : {1.0, 0.97, 1.08}) {
        bk::TetherParams tether;
        tether.zeta = zeta;
        const auto state = bk::build_portfolio(1'000'000.0, 0.15, 43'000.0, tether);
        CAPTURE(zeta);
        CHECK(state.spot_units ==
              doctest::Approx(0.85 * 1'000'000.0 / 43'000.0).epsilon(1e-14));
        CHECK(state.margin == doctest::Approx(150'000.0).epsilon(1e-14));
        // Q + zeta H = 0: spot delta cancels the hedge delta exactly.
        CHECK(std::abs(state.spot_units + zeta * state.hedge) <= 1e-9);
        CHECK(state.f0() == doctest::Approx(zeta * 43'000.0).epsilon(1e-15));
    }
}

TEST_CASE("portfolio construction validates its inputs") {
    CHECK_THROWS_AS(bk::build_portfolio(0.0, 0.2, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(bk::build_portfolio(1.0, 0.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(bk::build_portfolio(1.0, 1.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(bk::build_portfolio(1.0, 0.2, 0.0), std::invalid_argument);
}

TEST_CASE("tether coefficient derivation") {
    const auto tether = bk::TetherParams::from_coefficients(0.8, 0.1, 0.02, 0.05);
    CHECK(tether.zeta == doctest::Approx((0.8 - 0.1) / (0.8 + 0.05 - 0.02)).epsilon(1e-15));
}

TEST_CASE("marked share and full state equation coincide without funding") {
    const auto state = bk::build_portfolio(2'500'000.0, 0.2, 3'100.0);
    for (double ratio : {0.7, 0.9, 1.0, 1.05, 1.2}) {
        const double p = state.p0 * ratio;
        const double marked = bk::alpha_marked(state.alpha0, ratio);
        const double full = bk::alpha_full(state, p, state.zeta * p, 0.0);
        CAPTURE(ratio);
        CHECK(std::abs(marked - full) <= 1e-12);
    }
}

TEST_CASE("marked share hand values") {
    // alpha_t = 1 - (1 - alpha0) * ratio.
    CHECK(bk::alpha_marked(0.2, 1.0) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(bk::alpha_marked(0.2, 1.1) == doctest::Approx(0.12).epsilon(1e-14));
    CHECK(bk::alpha_marked(0.2, 0.9) == doctest::Approx(0.28).epsilon(1e-14));
    // An adverse move can push the marked share through zero.
    CHECK(bk::alpha_marked(0.1, 1.2) < 0.0);
}

TEST_CASE("full state equation rejects degenerate equity") {
    const auto state = bk::build_portfolio(1.0, 0.1, 100.0);
    // The delta-neutral book is immune to the mark, so only a large
    // negative funding balance can push total equity to zero.
    CHECK_THROWS_AS(bk::alpha_full(state, 100.0, 100.0, -200.0),
                    bk::DegenerateEquityError);
}

TEST_CASE("leverage identities") {
    CHECK(bk::leverage(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bk::leverage(0.2) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(bk::leverage(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(bk::leverage(0.0), std::invalid_argument);
    CHECK(bk::leverage_path(0.2, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK_THROWS_AS(bk::leverage_path(0.1, 1.5), bk::LiquidatedRegionError);
}

TEST_CASE("leverage path is increasing and convex in the price ratio") {
    const double alpha0 = 0.2;
    double prev = -1.0, prev_diff = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double ratio = 0.6 + 0.015 * i;  // stays below the liquidated region
        const double lev = bk::leverage_path(alpha0, ratio);
        if (prev >= 0.0) {
            const double diff = lev - prev;
            CHECK(diff > 0.0);
            if (prev_diff >= 0.0) CHECK(diff >= prev_diff - 1e-12);
            prev_diff = diff;
        }
        prev = lev;
    }
}

TEST_CASE("leverage sensitivity matches a central finite difference") {
    const double alpha0 = 0.2, p0 = 3'000.0;
    for (double ratio : {0.8, 0.95, 1.05, 1.15}) {
        const double eps = 1e-6;
        const double numeric = (bk::leverage_path(alpha0, ratio + eps / p0) -
                                bk::leverage_path(alpha0, ratio - eps / p0)) /
                               (2.0 * eps);
        CAPTURE(ratio);
        CHECK(bk::leverage_sensitivity(alpha0, p0, ratio) ==
              doctest::Approx(numeric).epsilon(1e-6));
    }
}
