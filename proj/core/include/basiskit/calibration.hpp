#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/market.hpp"

namespace basiskit {

/// One timestamped observation. Timestamps are Unix seconds, UTC.
struct TimePoint {
    std::int64_t timestamp = 0;
    double value = 0.0;
};

/// Hourly mark prices. Strictly increasing timestamps, positive prices.
struct PriceSeries {
    std::vector<TimePoint> points;
    void validate() const;
};

/// Funding prints as signed fractions per funding interval.
struct FundingSeries {
    std::vector<TimePoint> points;
    void validate() const;
};

/// Statistics on annualized one-day cumulative funding.
struct FundingWindowStats {
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
    double q05 = 0.0;
    double q95 = 0.0;
    double positive_share = 0.0;
    std::size_t n = 0;
};

/// Quantile by linear interpolation between closest ranks. Shared
/// convention for every quantile reported by the library.
double quantile(std::span<const double> sorted_ascending, double p);

/// Annualized realized volatility from log returns inside the trailing
/// lookback window. Gaps are bridged by scaling each return by its
/// actual elapsed time.
double realized_vol(const PriceSeries& series, int lookback_days, double stress);

/// Trailing-window cumulative funding at each print whose window is
/// fully covered by the data. Values are horizon-cumulative fractions.
std::vector<TimePoint> rolling_cum_funding(const FundingSeries& series,
                                           int horizon_hours = 24);

/// Rolling horizon mean: average of the trailing-window sums whose end
/// falls inside the lookback. This is the kappa_h estimate.
double kappa_estimate(const FundingSeries& series, int lookback_days,
                      int horizon_hours = 24);

/// Diagnostic statistics of the annualized one-day cumulative funding
/// over the lookback window.
FundingWindowStats window_stats(const FundingSeries& series, int lookback_days);

}  // namespace basiskit
