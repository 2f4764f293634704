#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basiskit/errors.hpp"
#include "basiskit/rng.hpp"

namespace basiskit {

enum class TradeSide { BuyBasis, SellBasis };

/// One execution-diagnostics row. Costs are signed bps, positive =
/// adverse; the target and realized legs share the convention.
struct TradeRecord {
    std::int64_t timestamp = 0;
    TradeSide side = TradeSide::BuyBasis;
    double notional = 0.0;          // USD, > 0
    double target_cost_bps = 0.0;   // contemporaneous expected cost
    double realized_cost_bps = 0.0;
};

struct WinRates {
    double plain = 0.0;
    double weighted = 0.0;  // notional-weighted
};

/// Success fractions under buffer b: a trade wins when
/// realized <= target + b (ties win).
WinRates win_rate(std::span<const TradeRecord> trades, double buffer_bps);

struct SideSummary {
    std::string label;  // "all" / "buy" / "sell"
    std::size_t count = 0;
    double median_cost_bps = 0.0;
    double win_rate = 0.0;
    double weighted_win_rate = 0.0;
};

struct SizeFilterResult {
    std::vector<TradeRecord> trades;
    std::vector<SideSummary> summary;  // all, buy, sell; empty sides omitted
    bool empty = false;
};

/// Retains trades with notional >= q_min and summarizes per side.
SizeFilterResult size_filter(std::span<const TradeRecord> trades, double q_min);

/// For each target success level, the smallest grid buffer whose
/// weighted win rate reaches the level; absent when never reached.
std::vector<std::optional<double>> buffer_curve(std::span<const TradeRecord> trades,
                                                std::span<const double> target_levels,
                                                std::span<const double> buffer_grid_bps);

struct BootstrapCi {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Percentile bootstrap 95% CI for the median realized cost.
BootstrapCi median_ci(std::span<const TradeRecord> trades, std::size_t n_resamples,
                      std::uint64_t seed);

struct CostCurveSample {
    std::int64_t timestamp = 0;
    double notional = 0.0;
    double cost_bps = 0.0;
};

/// Operational cost-in-size curve for one side: per-notional aggregate
/// over recent snapshots.
struct CostCurve {
    TradeSide side = TradeSide::BuyBasis;
    std::vector<std::pair<double, double>> samples;  // (notional, cost bps), notional increasing
};

enum class CostEstimator { Median, Quantile };

/// Pointwise aggregation of instantaneous cost snapshots at each grid
/// notional: rolling median or a stressed quantile.
CostCurve operational_cost(TradeSide side, std::span<const CostCurveSample> snapshots,
                           CostEstimator estimator, double quantile_p = 0.5);

/// Largest notional whose cost stays inside the budget. Costs are made
/// nondecreasing in size by isotonic regression before inversion; a
/// budget above the observed curve saturates at the largest sampled
/// notional, a budget below the smallest cost yields no size.
std::optional<double> max_executable_size(const CostCurve& curve, double budget_bps);

struct CapacityInputs {
    double alpha_t = 0.0;
    double target = 0.0;
    double k_buy_max_bps = 0.0;
    double k_sell_max_bps = 0.0;
    double q_min_buy = 10000.0;
    double q_min_sell = 10000.0;
    double equity = 0.0;
};

struct CapacityResult {
    double v_buy = 0.0;
    double v_sell = 0.0;
    double v_max = 0.0;
    bool unbounded = false;  // no rebalance needed at alpha_t == target
};

/// Side capacities V_s = Q_s^max / phi and their minimum, with
/// phi = |alpha_t - target|.
CapacityResult capacity(const CapacityInputs& inputs, double q_buy_max, double q_sell_max);

/// Quantile capacity over a time series of instantaneous capacities.
double safe_capacity(std::span<const double> capacity_series, double p = 0.25);

/// A control trigger is operationally valid only when the required size
/// lies inside the admissible liquidity set.
bool intervention_feasible(double q_star, double q_min, double q_max);

}  // namespace basiskit
