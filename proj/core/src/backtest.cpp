#include "basiskit/backtest.hpp"

#include <algorithm>
#include <cmath>

namespace basiskit {

double annualize(double accumulated_return, double span_days) {
    if (!(span_days > 0.0)) throw std::invalid_argument("annualize: span_days must be > 0");
    return accumulated_return * kDaysPerYear / span_days;
}

double max_drawdown(std::span<const double> nav) {
    if (nav.empty()) throw InsufficientDataError("max_drawdown: empty NAV series");
    double peak = nav.front();
    double worst = 0.0;
    for (double v : nav) {
        peak = std::max(peak, v);
        worst = std::max(worst, (peak - v) / peak);
    }
    return -worst;
}

BacktestResult run_backtest(const BacktestConfig& cfg) {
    cfg.prices.validate();
    cfg.funding.validate();
    if (cfg.prices.points.empty()) throw SchemaError("run_backtest: empty price series");
    if (!cfg.band.valid()) throw std::invalid_argument("run_backtest: invalid band");
    if (cfg.exec_cost_bps < 0.0)
        throw std::invalid_argument("run_backtest: exec_cost_bps must be >= 0");
    if (!cfg.funding.points.empty() &&
        (cfg.funding.points.front().timestamp < cfg.prices.points.front().timestamp ||
         cfg.funding.points.back().timestamp > cfg.prices.points.back().timestamp))
        throw SchemaError("run_backtest: funding series extends beyond the price series");

    BacktestResult result;
    auto& report = result.report;

    const double target = cfg.band.target;
    const double exec_cost = cfg.exec_cost_bps * 1e-4;
    const ExecutionCaps unbounded{kUnboundedCap, kUnboundedCap};

    // Leg state since the last reset; zeta = 1 so f tracks p.
    double p = cfg.prices.points.front().value;
    double spot_units = (1.0 - target) * cfg.initial_aum / p;
    double hedge = -spot_units;
    double margin0 = target * cfg.initial_aum;
    double f_reset = p;
    double funding_since_reset = 0.0;

    double funding_total = 0.0;
    double cost_total = 0.0;
    double mark_pnl_total = 0.0;
    double alpha_sum = 0.0;
    double leverage_sum = 0.0;

    std::size_t funding_idx = 0;
    std::int64_t prev_ts = cfg.prices.points.front().timestamp - 1;

    for (const auto& tick : cfg.prices.points) {
        const double p_prev = p;
        p = tick.value;
        // Delta-neutral legs: spot and hedge mark P&L cancel exactly.
        mark_pnl_total += (spot_units + hedge) * (p - p_prev);

        // Funding prints inside (prev_ts, ts] accrue on the hedge
        // notional, which equals the spot leg Q*p under delta neutrality.
        while (funding_idx < cfg.funding.points.size() &&
               cfg.funding.points[funding_idx].timestamp <= tick.timestamp) {
            if (cfg.funding.points[funding_idx].timestamp > prev_ts) {
                const double cashflow =
                    cfg.funding.points[funding_idx].value * spot_units * p;
                funding_since_reset += cashflow;
                funding_total += cashflow;
            }
            ++funding_idx;
        }
        prev_ts = tick.timestamp;

        double vf = margin0 + hedge * (p - f_reset) + funding_since_reset;
        double nav = spot_units * p + vf;
        if (nav <= 0.0) {
            report.ruined = true;
            result.events.push_back({tick.timestamp, ActionKind::Emergency, 0.0, 0.0,
                                     0.0, 0.0});
            result.nav.push_back({tick.timestamp, nav});
            break;
        }
        double alpha = vf / nav;

        const PolicyAction action = policy_step(alpha, cfg.band, nav, cfg.policy, unbounded);
        if (action.kind == ActionKind::BuyBasis || action.kind == ActionKind::SellBasis) {
            const double cost = exec_cost * action.notional;
            const double equity = nav - cost;
            cost_total += cost;

            BacktestEvent ev;
            ev.timestamp = tick.timestamp;
            ev.kind = action.kind;
            ev.notional = action.notional;
            ev.cost = cost;
            ev.alpha_before = alpha;

            spot_units = (1.0 - target) * equity / p;
            hedge = -spot_units;
            margin0 = target * equity;
            f_reset = p;
            funding_since_reset = 0.0;

            nav = equity;
            alpha = target;
            ev.alpha_after = alpha;
            result.events.push_back(ev);
        }

        alpha_sum += alpha;
        leverage_sum += (1.0 - alpha) / alpha;
        result.nav.push_back({tick.timestamp, nav});
        report.turnover_pct_initial_aum +=
            (action.kind == ActionKind::BuyBasis || action.kind == ActionKind::SellBasis)
                ? action.notional / cfg.initial_aum
                : 0.0;
    }

    const std::size_t n = result.nav.size();
    const double nav_end = result.nav.back().value;
    report.accumulated_return = nav_end / cfg.initial_aum - 1.0;
    report.span_days =
        static_cast<double>(result.nav.back().timestamp - result.nav.front().timestamp) /
        86400.0;
    if (report.span_days > 0.0) {
        report.apy = annualize(report.accumulated_return, report.span_days);
        report.funding_apy = annualize(funding_total / cfg.initial_aum, report.span_days);
    }
    std::vector<double> nav_values;
    nav_values.reserve(n);
    for (const auto& pt : result.nav) nav_values.push_back(pt.value);
    report.max_drawdown = max_drawdown(nav_values);
    report.avg_alpha = alpha_sum / static_cast<double>(n);
    report.avg_leverage = leverage_sum / static_cast<double>(n);
    report.rebalance_count = 0;
    for (const auto& ev : result.events)
        if (ev.kind == ActionKind::BuyBasis || ev.kind == ActionKind::SellBasis)
            ++report.rebalance_count;
    report.avg_rebalance_pct_initial_aum =
        report.rebalance_count > 0
            ? report.turnover_pct_initial_aum / static_cast<double>(report.rebalance_count)
            : 0.0;
    report.funding_total = funding_total;
    report.cost_total = cost_total;
    report.mark_pnl_total = mark_pnl_total;
    return result;
}

FundingEnvDelta compare_funding_envs(const BacktestConfig& cfg_a,
                                     const BacktestConfig& cfg_b) {
    const bool same_control =
        cfg_a.band.target == cfg_b.band.target && cfg_a.band.lower == cfg_b.band.lower &&
        cfg_a.band.upper == cfg_b.band.upper && cfg_a.exec_cost_bps == cfg_b.exec_cost_bps &&
        cfg_a.initial_aum == cfg_b.initial_aum && cfg_a.policy.q_min == cfg_b.policy.q_min &&
        cfg_a.policy.kappa_h == cfg_b.policy.kappa_h &&
        cfg_a.policy.k_fix == cfg_b.policy.k_fix;
    if (!same_control)
        throw std::invalid_argument("compare_funding_envs: control parameters differ");

    const BacktestReport a = run_backtest(cfg_a).report;
    const BacktestReport b = run_backtest(cfg_b).report;

    FundingEnvDelta delta;
    delta.asset = cfg_a.asset;
    delta.d_apy = b.apy - a.apy;
    delta.d_funding_apy = b.funding_apy - a.funding_apy;
    delta.d_avg_leverage = b.avg_leverage - a.avg_leverage;
    return delta;
}

}  // namespace basiskit
