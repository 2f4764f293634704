#include "basiskit/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace basiskit {

namespace {

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kSecondsPerDay = 86400;

void check_increasing(const std::vector<TimePoint>& points, const char* what) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].timestamp <= points[i - 1].timestamp)
            throw SchemaError(std::string(what) + ": timestamps must be strictly increasing");
    }
}

double sample_std(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw InsufficientDataError("sample_std: need at least 2 observations");
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace

void PriceSeries::validate() const {
    check_increasing(points, "PriceSeries");
    for (const auto& p : points)
        if (p.value <= 0.0) throw SchemaError("PriceSeries: prices must be positive");
}

void FundingSeries::validate() const { check_increasing(points, "FundingSeries"); }

double quantile(std::span<const double> sorted_ascending, double p) {
    if (sorted_ascending.empty()) throw InsufficientDataError("quantile: empty sample");
    if (p <= 0.0) return sorted_ascending.front();
    if (p >= 1.0) return sorted_ascending.back();
    const double h = p * static_cast<double>(sorted_ascending.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted_ascending.size()) return sorted_ascending.back();
    return sorted_ascending[lo] + frac * (sorted_ascending[lo + 1] - sorted_ascending[lo]);
}

double realized_vol(const PriceSeries& series, int lookback_days, double stress) {
    series.validate();
    if (!(stress > 0.0)) throw std::invalid_argument("realized_vol: stress must be > 0");
    if (series.points.empty()) throw InsufficientDataError("realized_vol: empty series");

    const std::int64_t cutoff =
        series.points.back().timestamp - static_cast<std::int64_t>(lookback_days) * kSecondsPerDay;

    // Per-sqrt-hour normalized log returns; a gap of k hours contributes
    // one return scaled by 1/sqrt(k).
    std::vector<double> returns;
    for (std::size_t i = 1; i < series.points.size(); ++i) {
        if (series.points[i].timestamp < cutoff) continue;
        const double dt_hours =
            static_cast<double>(series.points[i].timestamp - series.points[i - 1].timestamp) /
            static_cast<double>(kSecondsPerHour);
        const double r = std::log(series.points[i].value / series.points[i - 1].value);
        returns.push_back(r / std::sqrt(dt_hours));
    }
    if (returns.size() < 2)
        throw InsufficientDataError("realized_vol: need >= 2 returns inside the window");
    return sample_std(returns) * std::sqrt(kHoursPerYear) * stress;
}

std::vector<TimePoint> rolling_cum_funding(const FundingSeries& series, int horizon_hours) {
    series.validate();
    if (series.points.empty()) throw InsufficientDataError("rolling_cum_funding: empty series");
    const std::int64_t horizon = static_cast<std::int64_t>(horizon_hours) * kSecondsPerHour;
    const std::int64_t span =
        series.points.back().timestamp - series.points.front().timestamp;
    if (span < horizon)
        throw InsufficientDataError("rolling_cum_funding: data span shorter than the horizon");

    // Trailing window (t - horizon, t]; two-pointer sweep.
    std::vector<TimePoint> out;
    std::size_t lo = 0;
    double window_sum = 0.0;
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        window_sum += series.points[i].value;
        const std::int64_t t = series.points[i].timestamp;
        while (series.points[lo].timestamp <= t - horizon) {
            window_sum -= series.points[lo].value;
            ++lo;
        }
        if (t - series.points.front().timestamp >= horizon)
            out.push_back({t, window_sum});
    }
    if (out.empty())
        throw InsufficientDataError("rolling_cum_funding: no fully covered window");
    return out;
}

double kappa_estimate(const FundingSeries& series, int lookback_days, int horizon_hours) {
    if (static_cast<std::int64_t>(lookback_days) * 24 < horizon_hours)
        throw std::invalid_argument("kappa_estimate: lookback must cover the horizon");
    const auto rolling = rolling_cum_funding(series, horizon_hours);
    const std::int64_t cutoff =
        rolling.back().timestamp - static_cast<std::int64_t>(lookback_days) * kSecondsPerDay;
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& p : rolling) {
        if (p.timestamp < cutoff) continue;
        sum += p.value;
        ++n;
    }
    if (n == 0) throw InsufficientDataError("kappa_estimate: empty lookback window");
    return sum / static_cast<double>(n);
}

FundingWindowStats window_stats(const FundingSeries& series, int lookback_days) {
    const auto rolling = rolling_cum_funding(series, 24);
    const std::int64_t cutoff =
        rolling.back().timestamp - static_cast<std::int64_t>(lookback_days) * kSecondsPerDay;

    std::vector<double> annualized;
    for (const auto& p : rolling)
        if (p.timestamp >= cutoff) annualized.push_back(p.value * kDaysPerYear);
    if (annualized.empty()) throw InsufficientDataError("window_stats: empty lookback window");

    FundingWindowStats stats;
    stats.n = annualized.size();
    stats.mean = std::accumulate(annualized.begin(), annualized.end(), 0.0) /
                 static_cast<double>(annualized.size());
    stats.std_dev = annualized.size() > 1 ? sample_std(annualized) : 0.0;
    stats.positive_share =
        static_cast<double>(std::count_if(annualized.begin(), annualized.end(),
                                          [](double x) { return x > 0.0; })) /
        static_cast<double>(annualized.size());

    std::sort(annualized.begin(), annualized.end());
    stats.median = quantile(annualized, 0.5);
    stats.q05 = quantile(annualized, 0.05);
    stats.q95 = quantile(annualized, 0.95);
    return stats;
}

}  // namespace basiskit
