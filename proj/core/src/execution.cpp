#include "basiskit/execution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "basiskit/calibration.hpp"

namespace basiskit {

namespace {

bool wins(const TradeRecord& t, double buffer_bps) {
    return t.realized_cost_bps <= t.target_cost_bps + buffer_bps;
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return quantile(xs, 0.5);
}

SideSummary summarize(const std::string& label, std::span<const TradeRecord> trades) {
    SideSummary s;
    s.label = label;
    s.count = trades.size();
    std::vector<double> costs;
    costs.reserve(trades.size());
    for (const auto& t : trades) costs.push_back(t.realized_cost_bps);
    s.median_cost_bps = median_of(std::move(costs));
    const WinRates wr = win_rate(trades, 0.0);
    s.win_rate = wr.plain;
    s.weighted_win_rate = wr.weighted;
    return s;
}

}  // namespace

WinRates win_rate(std::span<const TradeRecord> trades, double buffer_bps) {
    if (trades.empty()) throw InsufficientDataError("win_rate: empty trade list");
    if (buffer_bps < 0.0) throw std::invalid_argument("win_rate: buffer must be >= 0");
    double n_win = 0.0;
    double notional_win = 0.0;
    double notional_total = 0.0;
    for (const auto& t : trades) {
        if (t.notional <= 0.0) throw SchemaError("win_rate: notional must be > 0");
        notional_total += t.notional;
        if (wins(t, buffer_bps)) {
            n_win += 1.0;
            notional_win += t.notional;
        }
    }
    return {n_win / static_cast<double>(trades.size()), notional_win / notional_total};
}

SizeFilterResult size_filter(std::span<const TradeRecord> trades, double q_min) {
    if (q_min < 0.0) throw std::invalid_argument("size_filter: q_min must be >= 0");
    SizeFilterResult result;
    std::vector<TradeRecord> buys, sells;
    for (const auto& t : trades) {
        if (t.notional < q_min) continue;
        result.trades.push_back(t);
        (t.side == TradeSide::BuyBasis ? buys : sells).push_back(t);
    }
    if (result.trades.empty()) {
        result.empty = true;
        return result;
    }
    result.summary.push_back(summarize("all", result.trades));
    if (!buys.empty()) result.summary.push_back(summarize("buy", buys));
    if (!sells.empty()) result.summary.push_back(summarize("sell", sells));
    return result;
}

std::vector<std::optional<double>> buffer_curve(std::span<const TradeRecord> trades,
                                                std::span<const double> target_levels,
                                                std::span<const double> buffer_grid_bps) {
    for (std::size_t i = 1; i < buffer_grid_bps.size(); ++i)
        if (buffer_grid_bps[i] <= buffer_grid_bps[i - 1])
            throw std::invalid_argument("buffer_curve: buffer grid must be ascending");

    std::vector<std::optional<double>> out(target_levels.size());
    std::vector<double> wr(buffer_grid_bps.size());
    for (std::size_t j = 0; j < buffer_grid_bps.size(); ++j)
        wr[j] = win_rate(trades, buffer_grid_bps[j]).weighted;
    for (std::size_t i = 0; i < target_levels.size(); ++i) {
        for (std::size_t j = 0; j < buffer_grid_bps.size(); ++j) {
            if (wr[j] >= target_levels[i]) {
                out[i] = buffer_grid_bps[j];
                break;
            }
        }
    }
    return out;
}

BootstrapCi median_ci(std::span<const TradeRecord> trades, std::size_t n_resamples,
                      std::uint64_t seed) {
    if (trades.size() < 2) throw InsufficientDataError("median_ci: need >= 2 trades");
    std::vector<double> costs;
    costs.reserve(trades.size());
    for (const auto& t : trades) costs.push_back(t.realized_cost_bps);

    BootstrapCi ci;
    ci.point = median_of(costs);

    std::vector<double> medians(n_resamples);
    std::vector<double> sample(costs.size());
    for (std::size_t b = 0; b < n_resamples; ++b) {
        SubstreamRng rng(seed, b);
        for (auto& x : sample) x = costs[rng.next_u64() % costs.size()];
        medians[b] = median_of(sample);
    }
    std::sort(medians.begin(), medians.end());
    ci.lo = quantile(medians, 0.025);
    ci.hi = quantile(medians, 0.975);
    return ci;
}

CostCurve operational_cost(TradeSide side, std::span<const CostCurveSample> snapshots,
                           CostEstimator estimator, double quantile_p) {
    if (snapshots.empty()) throw InsufficientDataError("operational_cost: empty window");
    std::map<double, std::vector<double>> by_notional;
    for (const auto& s : snapshots) by_notional[s.notional].push_back(s.cost_bps);

    CostCurve curve;
    curve.side = side;
    for (auto& [notional, costs] : by_notional) {
        std::sort(costs.begin(), costs.end());
        const double p = estimator == CostEstimator::Median ? 0.5 : quantile_p;
        curve.samples.emplace_back(notional, quantile(costs, p));
    }
    return curve;
}

std::optional<double> max_executable_size(const CostCurve& curve, double budget_bps) {
    if (curve.samples.size() < 2)
        throw std::invalid_argument("max_executable_size: need >= 2 curve samples");
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
        if (curve.samples[i].first <= curve.samples[i - 1].first)
            throw SchemaError("max_executable_size: notionals must be strictly increasing");

    // Pool-adjacent-violators: enforce cost nondecreasing in size so the
    // sup-inversion is well defined.
    const std::size_t n = curve.samples.size();
    std::vector<double> cost(n), weight(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) cost[i] = curve.samples[i].second;
    std::vector<std::pair<double, double>> blocks;  // (mean, weight)
    for (std::size_t i = 0; i < n; ++i) {
        blocks.emplace_back(cost[i], 1.0);
        while (blocks.size() > 1 && blocks[blocks.size() - 2].first > blocks.back().first) {
            const auto [m2, w2] = blocks.back();
            blocks.pop_back();
            auto& [m1, w1] = blocks.back();
            m1 = (m1 * w1 + m2 * w2) / (w1 + w2);
            w1 += w2;
        }
    }
    std::vector<double> iso;
    iso.reserve(n);
    for (const auto& [m, w] : blocks)
        for (std::size_t k = 0; k < static_cast<std::size_t>(w + 0.5); ++k) iso.push_back(m);

    if (budget_bps < iso.front()) return std::nullopt;
    if (budget_bps >= iso.back()) return curve.samples.back().first;
    for (std::size_t i = 1; i < n; ++i) {
        if (budget_bps < iso[i]) {
            const double q0 = curve.samples[i - 1].first;
            const double q1 = curve.samples[i].first;
            const double c0 = iso[i - 1];
            const double c1 = iso[i];
            // flat segments cannot bracket the budget here since iso[i] > budget >= iso[i-1]
            return q0 + (budget_bps - c0) / (c1 - c0) * (q1 - q0);
        }
    }
    return curve.samples.back().first;
}

CapacityResult capacity(const CapacityInputs& inputs, double q_buy_max, double q_sell_max) {
    CapacityResult r;
    const double phi = std::fabs(inputs.alpha_t - inputs.target);
    if (phi == 0.0) {
        r.unbounded = true;
        return r;
    }
    r.v_buy = q_buy_max / phi;
    r.v_sell = q_sell_max / phi;
    r.v_max = std::min(r.v_buy, r.v_sell);
    return r;
}

double safe_capacity(std::span<const double> capacity_series, double p) {
    if (capacity_series.empty()) throw InsufficientDataError("safe_capacity: empty series");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("safe_capacity: p must lie in (0,1)");
    std::vector<double> sorted(capacity_series.begin(), capacity_series.end());
    std::sort(sorted.begin(), sorted.end());
    return quantile(sorted, p);
}

bool intervention_feasible(double q_star, double q_min, double q_max) {
    return q_star >= q_min && q_star <= q_max;
}

}  // namespace basiskit
