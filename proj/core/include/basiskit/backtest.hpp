#pragma once

#include <string>
#include <vector>

#include "basiskit/calibration.hpp"
#include "basiskit/dynamic_control.hpp"

namespace basiskit {

struct BacktestConfig {
    std::string asset;
    std::string funding_source;
    AlphaBand band{};
    PolicyConfig policy{};
    double exec_cost_bps = 0.0;  // fixed per-intervention cost, bps of notional
    double initial_aum = 1.0;
    PriceSeries prices;
    FundingSeries funding;
};

struct BacktestReport {
    double accumulated_return = 0.0;
    double apy = 0.0;
    double funding_apy = 0.0;
    double max_drawdown = 0.0;  // negative fraction, 0 when NAV never declines
    double avg_leverage = 0.0;
    std::size_t rebalance_count = 0;
    double turnover_pct_initial_aum = 0.0;
    double avg_rebalance_pct_initial_aum = 0.0;
    double avg_alpha = 0.0;
    double span_days = 0.0;

    // Exact accounting decomposition of the accumulated P&L.
    double funding_total = 0.0;
    double cost_total = 0.0;
    double mark_pnl_total = 0.0;
    bool ruined = false;
};

struct BacktestEvent {
    std::int64_t timestamp = 0;
    ActionKind kind = ActionKind::Hold;
    double notional = 0.0;
    double cost = 0.0;
    double alpha_before = 0.0;
    double alpha_after = 0.0;
};

struct BacktestResult {
    BacktestReport report;
    std::vector<TimePoint> nav;
    std::vector<BacktestEvent> events;
};

/// Hourly-loop historical engine: accrues funding on the hedge notional,
/// remarks the share through the full state equation, applies the band
/// policy with unbounded caps, and charges the fixed execution cost on
/// every intervention.
BacktestResult run_backtest(const BacktestConfig& cfg);

/// Peak-to-trough decline of the NAV series, reported as a negative
/// fraction.
double max_drawdown(std::span<const double> nav);

/// Simple scaling to an annual rate.
double annualize(double accumulated_return, double span_days);

struct FundingEnvDelta {
    std::string asset;
    double d_apy = 0.0;
    double d_funding_apy = 0.0;
    double d_avg_leverage = 0.0;
};

/// Same frozen control rule, two funding environments; reports the
/// metric deltas (b minus a).
FundingEnvDelta compare_funding_envs(const BacktestConfig& cfg_a,
                                     const BacktestConfig& cfg_b);

}  // namespace basiskit
