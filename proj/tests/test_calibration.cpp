#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "basiskit/calibration.hpp"

namespace bk = basiskit;

namespace {

bk::PriceSeries hourly_prices(const std::vector<double>& values, std::int64_t t0 = 0) {
    bk::PriceSeries s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s.points.push_back({t0 + static_cast<std::int64_t>(i) * 3600, values[i]});
    return s;
}

bk::FundingSeries hourly_funding(const std::vector<double>& rates, std::int64_t t0 = 0) {
    bk::FundingSeries s;
    for (std::size_t i = 0; i < rates.size(); ++i)
        s.points.push_back({t0 + static_cast<std::int64_t>(i) * 3600, rates[i]});
    return s;
}

}  // namespace

TEST_CASE("quantile uses linear interpolation between closest ranks") {
    const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
    CHECK(bk::quantile(v, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bk::quantile(v, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(bk::quantile(v, 0.5) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(bk::quantile(v, 0.25) == doctest::Approx(1.75).epsilon(1e-14));
    const std::vector<double> one = {7.0};
    CHECK(bk::quantile(one, 0.3) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("realized vol on a constant-ratio hourly series") {
    // Alternating up/down hourly returns +/- r: sample std of the
    // per-sqrt-hour series is r * sqrt(n/(n-1)) around a near-zero mean.
    const double r = 1e-3;
    std::vector<double> prices = {100.0};
    for (int i = 0; i < 400; ++i)
        prices.push_back(prices.back() * std::exp(i % 2 == 0 ? r : -r));
    const auto series = hourly_prices(prices);
    const double vol = bk::realized_vol(series, 180, 1.0);
    // Exact sample std of the +/-r pattern with even count: mean 0,
    // variance r^2 * n/(n-1).
    const double n = 400.0;
    const double expected = r * std::sqrt(n / (n - 1.0)) * std::sqrt(8760.0);
    CHECK(vol == doctest::Approx(expected).epsilon(1e-9));
    // Stress scales linearly.
    CHECK(bk::realized_vol(series, 180, 1.5) == doctest::Approx(1.5 * vol).epsilon(1e-12));
}

TEST_CASE("realized vol normalizes gapped observations by elapsed time") {
    // Same log return over 1h and over 4h: the 4h one contributes
    // r/sqrt(4) per sqrt-hour.
    bk::PriceSeries s;
    s.points.push_back({0, 100.0});
    s.points.push_back({3600, 100.0 * std::exp(0.002)});
    s.points.push_back({3600 * 5, 100.0 * std::exp(0.002) * std::exp(0.004)});
    const double vol = bk::realized_vol(s, 180, 1.0);
    // Normalized returns: 0.002 and 0.004/2 = 0.002; sample std is 0.
    CHECK(vol == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("realized vol requires at least two returns") {
    CHECK_THROWS_AS(bk::realized_vol(hourly_prices({100.0, 101.0}), 180, 1.0),
                    bk::InsufficientDataError);
}

TEST_CASE("rolling cumulative funding covers trailing windows exactly") {
    // 30 hourly prints of 1e-4 each: every fully covered 24h window
    // sums to 24e-4.
    const auto series = hourly_funding(std::vector<double>(30, 1e-4));
    const auto rolled = bk::rolling_cum_funding(series, 24);
    REQUIRE(!rolled.empty());
    for (const auto& pt : rolled) CHECK(pt.value == doctest::Approx(24e-4).epsilon(1e-12));
    // Windows ending before hour 24 are not fully covered.
    CHECK(rolled.front().timestamp >= 24 * 3600);
}

TEST_CASE("funding annualization anchor: 0.01 percent per 8h") {
    // Three prints per day at 1e-4 each -> 3e-4 per day -> 10.95 percent APY.
    std::vector<bk::TimePoint> points;
    for (int i = 0; i < 3 * 40; ++i)
        points.push_back({static_cast<std::int64_t>(i) * 8 * 3600, 1e-4});
    bk::FundingSeries series{points};
    const double kappa_1d = bk::kappa_estimate(series, 30, 24);
    CHECK(kappa_1d == doctest::Approx(3e-4).epsilon(1e-12));
    const double apy = kappa_1d * 365.0;
    CHECK(std::abs(apy - 0.1095) <= 1e-4);

    const auto stats = bk::window_stats(series, 30);
    CHECK(stats.mean == doctest::Approx(0.1095).epsilon(1e-9));
    CHECK(stats.median == doctest::Approx(0.1095).epsilon(1e-9));
    CHECK(stats.std_dev == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(stats.positive_share == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("window stats distinguish signed funding") {
    // Alternate +2e-4 / -1e-4 hourly prints.
    std::vector<double> rates;
    for (int i = 0; i < 24 * 20; ++i) rates.push_back(i % 2 == 0 ? 2e-4 : -1e-4);
    const auto stats = bk::window_stats(hourly_funding(rates), 30);
    CHECK(stats.n > 0);
    // Every full 24h window nets +12e-4, annualized positive.
    CHECK(stats.mean > 0.0);
    CHECK(stats.positive_share == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(stats.q05 <= stats.median);
    CHECK(stats.median <= stats.q95);
}

TEST_CASE("series validation rejects disorder and bad values") {
    bk::PriceSeries bad;
    bad.points = {{3600, 100.0}, {3600, 101.0}};
    CHECK_THROWS_AS(bad.validate(), bk::SchemaError);
    bk::PriceSeries neg;
    neg.points = {{0, 100.0}, {3600, -1.0}};
    CHECK_THROWS_AS(neg.validate(), bk::SchemaError);
}
