#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basiskit/backtest.hpp"
#include "basiskit/execution.hpp"
#include "basiskit/liquidation.hpp"

namespace basiskit::io {

// Process exit codes shared with the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInsufficientData = 4;

/// prices.csv: timestamp_utc,price
PriceSeries read_price_csv(const std::string& path);

/// funding.csv: timestamp_utc,rate_fraction
FundingSeries read_funding_csv(const std::string& path);

/// trades.csv: timestamp_utc,side,notional_usd,target_cost_bps,realized_cost_bps
/// with side in {buy,sell} (buy-basis / sell-basis).
std::vector<TradeRecord> read_trades_csv(const std::string& path);

/// cost_curve.csv: timestamp_utc,side,notional_usd,cost_bps
std::vector<std::pair<TradeSide, CostCurveSample>> read_cost_curve_csv(
    const std::string& path);

enum class TableFormat { Csv, Text };

/// String table with a header row; rendered either as RFC-style CSV or
/// as an aligned text table. All numeric formatting happens before rows
/// are added, so emission is byte-deterministic.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(TableFormat format) const;
};

/// Deterministic numeric formatting used for all emitted values.
std::string format_number(double value, int precision = 6);

struct VenueConfig {
    std::string name;
    int max_leverage = 1;
    MaintenanceRule rule = MaintenanceRule::HalfOfInitial;
    double custom_fraction = 1.0;

    VenueSpec spec() const { return {name, max_leverage, rule, custom_fraction}; }
};

/// Flat key-value run configuration. Defaults equal the benchmark
/// constants: epsilon 0.001, stress 1.5, lookback 180 d, horizon 1 d,
/// h_liq 3 h, eps_liq 1e-4, clip 0.99, q_min $10k.
struct RunConfig {
    std::vector<VenueConfig> venues;
    std::vector<std::string> assets;
    int lookback_days = 180;       // one of 30, 90, 180, 360
    double stress = 1.5;           // one of 1.0, 1.5, 2.0
    double epsilon = 0.001;
    double lgd = 0.1;
    double h_days = 1.0;
    double h_liq_hours = 3.0;
    double eps_liq = 1e-4;
    std::vector<double> k_reb_bps = {5.0, 10.0, 20.0, 30.0};
    int decision_horizon_days = 14;
    double q_min = 10000.0;
    std::uint64_t seed = 0;
    double initial_aum = 1'000'000.0;
    double mu = 0.0;

    /// Raw key-value pairs, including dataset path groups such as
    /// refreshed.prices.BTC = <path>.
    std::map<std::string, std::string> raw;

    static RunConfig load(const std::string& path);

    /// Lookup of a dataset path "<group>.<kind>.<asset>".
    std::optional<std::string> path_for(const std::string& group,
                                        const std::string& kind,
                                        const std::string& asset) const;
};

}  // namespace basiskit::io
