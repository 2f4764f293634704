#include <cmath>
#include <random>

#include <doctest.h>

#include "basiskit/execution.hpp"

namespace bk = basiskit;

namespace {

bk::TradeRecord trade(double notional, double target, double realized,
                      bk::TradeSide side = bk::TradeSide::BuyBasis) {
    return {0, side, notional, target, realized};
}

}  // namespace

TEST_CASE("win rate counts ties as wins and weights by notional") {
    const std::vector<bk::TradeRecord> trades = {
        trade(10'000, 20.0, 18.0),  // win
        trade(30'000, 20.0, 20.0),  // tie -> win
        trade(60'000, 20.0, 25.0),  // loss at zero buffer
    };
    const auto wr0 = bk::win_rate(trades, 0.0);
    CHECK(wr0.plain == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(wr0.weighted == doctest::Approx(0.4).epsilon(1e-12));
    // A 5 bps buffer turns the loss into a win.
    const auto wr5 = bk::win_rate(trades, 5.0);
    CHECK(wr5.plain == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wr5.weighted == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(bk::win_rate(std::vector<bk::TradeRecord>{}, 0.0),
                    bk::InsufficientDataError);
    CHECK_THROWS_AS(bk::win_rate(std::vector{trade(-1.0, 0.0, 0.0)}, 0.0), bk::SchemaError);
}

TEST_CASE("win rate is nondecreasing in the buffer") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u_cost(0.0, 60.0);
    std::vector<bk::TradeRecord> trades;
    for (int i = 0; i < 400; ++i)
        trades.push_back(trade(5'000.0 + 100.0 * i, 20.0, u_cost(gen)));
    double prev = -1.0;
    for (int b = 0; b <= 12; ++b) {
        const auto wr = bk::win_rate(trades, 4.0 * b);
        CHECK(wr.plain >= prev - 1e-15);
        CHECK(wr.weighted >= bk::win_rate(trades, b > 0 ? 4.0 * (b - 1) : 0.0).weighted -
                                 1e-15);
        prev = wr.plain;
    }
}

TEST_CASE("size filter drops dust and summarizes per side") {
    const std::vector<bk::TradeRecord> trades = {
        trade(500, 20, 30),                            // dust, dropped
        trade(15'000, 20, 18),                         // buy
        trade(25'000, 20, 22, bk::TradeSide::SellBasis),
        trade(40'000, 20, 19, bk::TradeSide::SellBasis),
    };
    const auto result = bk::size_filter(trades, 10'000.0);
    CHECK_FALSE(result.empty);
    CHECK(result.trades.size() == 3);
    REQUIRE(result.summary.size() == 3);
    CHECK(result.summary[0].label == "all");
    CHECK(result.summary[0].count == 3);
    CHECK(result.summary[0].median_cost_bps == doctest::Approx(19.0).epsilon(1e-12));
    CHECK(result.summary[1].label == "buy");
    CHECK(result.summary[1].count == 1);
    CHECK(result.summary[2].label == "sell");
    CHECK(result.summary[2].count == 2);
    // Filtering everything flags the empty result instead of throwing.
    CHECK(bk::size_filter(trades, 1e9).empty);
}

TEST_CASE("buffer curve picks the smallest sufficient grid buffer") {
    const std::vector<bk::TradeRecord> trades = {
        trade(10'000, 20, 21), trade(10'000, 20, 24), trade(10'000, 20, 31),
        trade(10'000, 20, 19)};
    const std::vector<double> levels = {0.5, 0.75, 1.0};
    const std::vector<double> grid = {0.0, 2.0, 5.0, 8.0, 12.0};
    const auto curve = bk::buffer_curve(trades, levels, grid);
    REQUIRE(curve.size() == 3);
    CHECK(*curve[0] == 2.0);   // wins at +2: {21,19} -> 0.5
    CHECK(*curve[1] == 5.0);   // wins at +5: {21,24,19} -> 0.75
    CHECK(*curve[2] == 12.0);  // the 31 bps trade needs an 11 bps buffer
    // A grid that never reaches the level reports absence.
    const auto truncated =
        bk::buffer_curve(trades, levels, std::vector<double>{0.0, 2.0, 5.0, 8.0});
    CHECK_FALSE(truncated[2].has_value());
    CHECK_THROWS_AS(bk::buffer_curve(trades, levels, std::vector<double>{3.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("median CI brackets the point estimate and is deterministic") {
    std::mt19937_64 gen(77);
    std::normal_distribution<double> normal(18.0, 6.0);
    std::vector<bk::TradeRecord> trades;
    for (int i = 0; i < 300; ++i) trades.push_back(trade(20'000, 20, normal(gen)));
    const auto ci = bk::median_ci(trades, 2'000, 9);
    CHECK(ci.lo <= ci.point);
    CHECK(ci.point <= ci.hi);
    CHECK(std::abs(ci.point - 18.0) < 2.0);
    const auto again = bk::median_ci(trades, 2'000, 9);
    CHECK(again.lo == ci.lo);
    CHECK(again.hi == ci.hi);
    // Coverage sanity: interval width shrinks with sample size.
    std::vector<bk::TradeRecord> big = trades;
    for (int i = 0; i < 2'700; ++i) big.push_back(trade(20'000, 20, normal(gen)));
    const auto tight = bk::median_ci(big, 2'000, 9);
    CHECK(tight.hi - tight.lo < ci.hi - ci.lo);
}

TEST_CASE("operational cost aggregates snapshots per notional") {
    std::vector<bk::CostCurveSample> snaps;
    for (double c : {10.0, 12.0, 14.0}) snaps.push_back({0, 50'000.0, c});
    for (double c : {20.0, 30.0}) snaps.push_back({0, 100'000.0, c});
    const auto median_curve =
        bk::operational_cost(bk::TradeSide::BuyBasis, snaps, bk::CostEstimator::Median);
    REQUIRE(median_curve.samples.size() == 2);
    CHECK(median_curve.samples[0] == std::pair{50'000.0, 12.0});
    CHECK(median_curve.samples[1] == std::pair{100'000.0, 25.0});
    const auto stressed = bk::operational_cost(bk::TradeSide::BuyBasis, snaps,
                                               bk::CostEstimator::Quantile, 0.95);
    CHECK(stressed.samples[0].second > median_curve.samples[0].second);
}

TEST_CASE("max executable size inverts the monotonized cost curve") {
    bk::CostCurve curve;
    curve.side = bk::TradeSide::BuyBasis;
    curve.samples = {{10'000.0, 5.0}, {50'000.0, 10.0}, {100'000.0, 20.0}};
    // Below the curve: nothing executable.
    CHECK_FALSE(bk::max_executable_size(curve, 4.0).has_value());
    // Above the curve: saturate at the largest sampled notional.
    CHECK(*bk::max_executable_size(curve, 25.0) == 100'000.0);
    // Interior budgets interpolate linearly.
    CHECK(*bk::max_executable_size(curve, 7.5) == doctest::Approx(30'000.0).epsilon(1e-12));
    CHECK(*bk::max_executable_size(curve, 15.0) == doctest::Approx(75'000.0).epsilon(1e-12));
    // Non-monotone observations are pooled before inversion.
    bk::CostCurve dip;
    dip.samples = {{10'000.0, 10.0}, {50'000.0, 6.0}, {100'000.0, 20.0}};
    // PAVA pools the first two to cost 8; budget 8 covers through 50k.
    CHECK(*bk::max_executable_size(dip, 8.0) == doctest::Approx(50'000.0).epsilon(1e-9));
    CHECK_THROWS_AS(bk::max_executable_size(bk::CostCurve{}, 5.0), std::invalid_argument);
}

TEST_CASE("capacity divides executable size by the required move") {
    bk::CapacityInputs inputs;
    inputs.alpha_t = 0.25;
    inputs.target = 0.15;
    const auto r = bk::capacity(inputs, 40'000.0, 20'000.0);
    CHECK_FALSE(r.unbounded);
    CHECK(r.v_buy == doctest::Approx(400'000.0).epsilon(1e-12));
    CHECK(r.v_sell == doctest::Approx(200'000.0).epsilon(1e-12));
    CHECK(r.v_max == doctest::Approx(200'000.0).epsilon(1e-12));
    // At the target no rebalance is needed: capacity is unbounded.
    inputs.alpha_t = inputs.target;
    CHECK(bk::capacity(inputs, 1.0, 1.0).unbounded);
}

TEST_CASE("safe capacity is a conservative quantile of the series") {
    const std::vector<double> series = {5.0, 1.0, 3.0, 2.0, 4.0};
    CHECK(bk::safe_capacity(series, 0.25) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bk::safe_capacity(series, 0.5) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(bk::safe_capacity(std::vector<double>{}, 0.25),
                    bk::InsufficientDataError);
    CHECK_THROWS_AS(bk::safe_capacity(series, 0.0), std::invalid_argument);
}

TEST_CASE("intervention feasibility is a closed interval test") {
    CHECK(bk::intervention_feasible(10'000.0, 10'000.0, 50'000.0));
    CHECK(bk::intervention_feasible(50'000.0, 10'000.0, 50'000.0));
    CHECK_FALSE(bk::intervention_feasible(9'999.0, 10'000.0, 50'000.0));
    CHECK_FALSE(bk::intervention_feasible(50'001.0, 10'000.0, 50'000.0));
}
