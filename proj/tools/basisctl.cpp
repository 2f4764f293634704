// basisctl: deterministic command-line front end for the collateral
// control stack. Every subcommand reads one flat key-value config file,
// accepts --seed and --format, and emits byte-reproducible tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "basiskit/backtest.hpp"
#include "basiskit/calibration.hpp"
#include "basiskit/dynamic_control.hpp"
#include "basiskit/execution.hpp"
#include "basiskit/io.hpp"
#include "basiskit/liquidation.hpp"
#include "basiskit/simulation.hpp"
#include "basiskit/static_control.hpp"

namespace bk = basiskit;
namespace io = basiskit::io;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string format = "text";
    std::string group;
    std::optional<std::uint64_t> seed;
    std::string out_path;  // empty = stdout
};

io::TableFormat table_format(const CommonOpts& opts) {
    return opts.format == "csv" ? io::TableFormat::Csv : io::TableFormat::Text;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw bk::SchemaError("cannot open output file: " + opts.out_path);
    out << text;
}

io::RunConfig load_config(const CommonOpts& opts) {
    io::RunConfig cfg = io::RunConfig::load(opts.config_path);
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

std::string data_path(const io::RunConfig& cfg, const std::string& group,
                      const std::string& kind, const std::string& venue,
                      const std::string& asset) {
    if (auto p = cfg.path_for(group, kind, venue + "." + asset)) return *p;
    if (auto p = cfg.path_for(group, kind, asset)) return *p;
    throw bk::SchemaError("config: missing path " + group + "." + kind + "." + venue +
                          "." + asset);
}

struct Calibrated {
    double sigma = 0.0;    // stressed
    double kappa_h = 0.0;  // cumulative over h_days
};

Calibrated calibrate_pair(const io::RunConfig& cfg, const std::string& group,
                          const io::VenueConfig& venue, const std::string& asset) {
    const auto prices =
        io::read_price_csv(data_path(cfg, group, "prices", venue.name, asset));
    const auto funding =
        io::read_funding_csv(data_path(cfg, group, "funding", venue.name, asset));
    Calibrated c;
    c.sigma = bk::realized_vol(prices, cfg.lookback_days, cfg.stress);
    c.kappa_h = bk::kappa_estimate(funding, cfg.lookback_days,
                                   static_cast<int>(cfg.h_days * 24.0));
    return c;
}

bk::StaticProblem static_problem(const io::RunConfig& cfg, const io::VenueConfig& venue,
                                 const Calibrated& cal) {
    bk::StaticProblem p;
    p.market.mu = cfg.mu;
    p.market.sigma = cal.sigma;
    p.theta_f = bk::maintenance_fraction(venue.spec());
    p.kappa_h = cal.kappa_h;
    p.horizon = bk::days_to_years(cfg.h_days);
    p.lgd = cfg.lgd;
    p.epsilon = cfg.epsilon;
    return p;
}

std::string fmt(double v, int precision = 6) { return io::format_number(v, precision); }

int run_calibrate(const CommonOpts& opts) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "refreshed" : opts.group;

    io::Table cal_table;
    cal_table.header = {"venue", "asset", "sigma_ann", "kappa_h_bps"};
    io::Table stats_table;
    stats_table.header = {"venue",  "asset", "mean", "median",
                          "std",    "q05",   "q95",  "positive_share"};
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto cal = calibrate_pair(cfg, group, venue, asset);
            cal_table.rows.push_back(
                {venue.name, asset, fmt(cal.sigma), fmt(cal.kappa_h * 1e4)});
            const auto funding =
                io::read_funding_csv(data_path(cfg, group, "funding", venue.name, asset));
            const auto stats = bk::window_stats(funding, cfg.lookback_days);
            stats_table.rows.push_back({venue.name, asset, fmt(stats.mean),
                                        fmt(stats.median), fmt(stats.std_dev),
                                        fmt(stats.q05), fmt(stats.q95),
                                        fmt(stats.positive_share)});
        }
    }
    emit(opts, cal_table.render(table_format(opts)) + "\n" +
                   stats_table.render(table_format(opts)));
    return io::kExitOk;
}

int run_static(const CommonOpts& opts) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "refreshed" : opts.group;

    // Benchmark slice in the comparative column order.
    io::Table slice;
    slice.header = {"venue", "asset", "alpha_star", "leverage", "kappa_h_bps", "theta_f"};
    io::Table grid;
    grid.header = {"venue", "asset", "stress", "alpha_econ", "alpha_eps"};

    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto cal = calibrate_pair(cfg, group, venue, asset);
            auto problem = static_problem(cfg, venue, cal);
            const auto sol = bk::solve_variant2(problem);
            slice.rows.push_back({venue.name, asset, fmt(sol.alpha_star, 4),
                                  fmt(bk::leverage(sol.alpha_star), 4),
                                  fmt(cal.kappa_h * 1e4, 4), fmt(problem.theta_f, 4)});

            const double sigma_base = cal.sigma / cfg.stress;
            for (double stress : {1.0, 1.5, 2.0}) {
                problem.market.sigma = sigma_base * stress;
                const auto econ = bk::solve_variant1(problem);
                const auto eps = bk::solve_variant2(problem);
                grid.rows.push_back({venue.name, asset, fmt(stress, 2),
                                     fmt(econ.alpha_star, 4), fmt(eps.alpha_star, 4)});
            }
        }
    }
    emit(opts, slice.render(table_format(opts)) + "\n" + grid.render(table_format(opts)));
    return io::kExitOk;
}

int run_band(const CommonOpts& opts) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "refreshed" : opts.group;

    io::Table table;
    table.header = {"venue",   "asset",   "k_reb_bps", "alpha_target",
                    "alpha_l", "alpha_u", "delta_u",   "clipped"};
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto cal = calibrate_pair(cfg, group, venue, asset);
            const auto problem = static_problem(cfg, venue, cal);
            const double target = bk::solve_variant2(problem).alpha_star;

            bk::PolicyConfig policy;
            policy.h_liq_hours = cfg.h_liq_hours;
            policy.eps_liq = cfg.eps_liq;
            const double alpha_l =
                bk::lower_bound(problem.market, problem.theta_f, policy);

            const auto funding =
                io::read_funding_csv(data_path(cfg, group, "funding", venue.name, asset));
            const double kappa_dec = bk::kappa_estimate(
                funding, cfg.lookback_days, cfg.decision_horizon_days * 24);

            for (double k_bps : cfg.k_reb_bps) {
                const auto ub = bk::upper_bound(target, 1.0, kappa_dec, k_bps * 1e-4);
                table.rows.push_back({venue.name, asset, fmt(k_bps, 4), fmt(target, 4),
                                      fmt(alpha_l, 4), fmt(ub.alpha, 4),
                                      fmt(ub.alpha - target, 4),
                                      ub.saturated ? "yes" : "no"});
            }
        }
    }
    emit(opts, table.render(table_format(opts)));
    return io::kExitOk;
}

int run_mc_upper(const CommonOpts& opts, std::size_t n_paths, double horizon_days) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "refreshed" : opts.group;

    io::Table table;
    table.header = {"venue",   "asset",   "alpha_target", "cost_bps",
                    "kappa_bps", "alpha_u", "hit_rate",   "median_hit_days"};
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto cal = calibrate_pair(cfg, group, venue, asset);
            const auto problem = static_problem(cfg, venue, cal);
            const double target = bk::solve_variant2(problem).alpha_star;

            const auto funding =
                io::read_funding_csv(data_path(cfg, group, "funding", venue.name, asset));
            const double kappa_dec = bk::kappa_estimate(
                funding, cfg.lookback_days, cfg.decision_horizon_days * 24);

            for (double k_bps : cfg.k_reb_bps) {
                const auto ub = bk::upper_bound(target, 1.0, kappa_dec, k_bps * 1e-4);
                bk::SimConfig sim;
                sim.n_paths = n_paths;
                sim.dt = bk::hours_to_years(1.0);
                sim.horizon = bk::days_to_years(horizon_days);
                sim.seed = cfg.seed;
                const auto study = bk::upper_hit_study(target, ub.alpha, cfg.mu,
                                                       cal.sigma, horizon_days, sim);
                table.rows.push_back(
                    {venue.name, asset, fmt(target, 4), fmt(k_bps, 4),
                     fmt(kappa_dec * 1e4, 4), fmt(ub.alpha, 4), fmt(study.hit_rate, 4),
                     study.median_hit_days ? fmt(*study.median_hit_days, 4) : "--"});
            }
        }
    }
    emit(opts, table.render(table_format(opts)));
    return io::kExitOk;
}

int run_boot_lower(const CommonOpts& opts, std::size_t n_boot) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "refreshed" : opts.group;

    io::Table table;
    table.header = {"venue", "asset", "alpha_target", "alpha_l_boot", "gap"};
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto cal = calibrate_pair(cfg, group, venue, asset);
            const auto problem = static_problem(cfg, venue, cal);
            const double target = bk::solve_variant2(problem).alpha_star;

            const auto prices =
                io::read_price_csv(data_path(cfg, group, "prices", venue.name, asset));
            std::vector<double> returns;
            const std::int64_t cutoff =
                prices.points.back().timestamp -
                static_cast<std::int64_t>(cfg.lookback_days) * 86400;
            for (std::size_t i = 1; i < prices.points.size(); ++i) {
                if (prices.points[i].timestamp < cutoff) continue;
                returns.push_back(
                    std::log(prices.points[i].value / prices.points[i - 1].value));
            }

            bk::BootstrapConfig boot;
            boot.path_hours = static_cast<int>(cfg.h_liq_hours);
            boot.stress = cfg.stress;
            boot.eps_liq = cfg.eps_liq;
            boot.n_boot = n_boot;
            boot.seed = cfg.seed;
            boot.theta_f = problem.theta_f;
            const double alpha_boot = bk::bootstrap_lower_bound(returns, boot);
            table.rows.push_back({venue.name, asset, fmt(target, 4), fmt(alpha_boot, 4),
                                  fmt(target - alpha_boot, 4)});
        }
    }
    emit(opts, table.render(table_format(opts)));
    return io::kExitOk;
}

bk::BacktestConfig make_backtest_config(const io::RunConfig& cfg, const std::string& group,
                                        const io::VenueConfig& venue,
                                        const std::string& asset,
                                        const std::string& funding_env) {
    const std::string funding_key = funding_env.empty() ? venue.name : funding_env;
    const auto prices = io::read_price_csv(data_path(cfg, group, "prices", venue.name, asset));
    const auto funding =
        io::read_funding_csv(data_path(cfg, group, "funding", funding_key, asset));

    Calibrated cal;
    cal.sigma = bk::realized_vol(prices, cfg.lookback_days, cfg.stress);
    cal.kappa_h = bk::kappa_estimate(funding, cfg.lookback_days,
                                     static_cast<int>(cfg.h_days * 24.0));
    const auto problem = static_problem(cfg, venue, cal);
    const double target = bk::solve_variant2(problem).alpha_star;

    bk::PolicyConfig policy;
    policy.h_liq_hours = cfg.h_liq_hours;
    policy.eps_liq = cfg.eps_liq;
    policy.q_min = cfg.q_min;
    policy.decision_horizon_days = cfg.decision_horizon_days;
    policy.kappa_h = bk::kappa_estimate(funding, cfg.lookback_days,
                                        cfg.decision_horizon_days * 24);
    const double k_reb =
        (cfg.k_reb_bps.empty() ? 5.0 : cfg.k_reb_bps.front()) * 1e-4;
    policy.k_fix = k_reb;

    bk::BacktestConfig bt;
    bt.asset = asset;
    bt.funding_source = funding_key;
    bt.band.target = target;
    bt.band.lower = bk::lower_bound(problem.market, problem.theta_f, policy);
    bt.band.upper = bk::upper_bound(target, 1.0, policy.kappa_h, k_reb).alpha;
    bt.policy = policy;
    const auto cost_it = cfg.raw.find("exec_cost_bps." + asset);
    bt.exec_cost_bps =
        cost_it != cfg.raw.end() ? std::stod(cost_it->second) : 20.0;
    bt.initial_aum = cfg.initial_aum;
    bt.prices = prices;
    bt.funding = funding;
    return bt;
}

void backtest_report_row(io::Table& table, const bk::BacktestConfig& bt,
                         const bk::BacktestReport& r) {
    table.rows.push_back({bt.asset, bt.funding_source,
                          fmt(r.accumulated_return * 100.0, 4), fmt(r.apy * 100.0, 4),
                          fmt(r.funding_apy * 100.0, 4), fmt(r.max_drawdown * 100.0, 4),
                          fmt(r.avg_leverage, 4),
                          std::to_string(r.rebalance_count),
                          fmt(r.turnover_pct_initial_aum * 100.0, 4),
                          fmt(r.avg_rebalance_pct_initial_aum * 100.0, 4),
                          fmt(r.avg_alpha, 4)});
}

int run_backtest_cmd(const CommonOpts& opts, const std::string& nav_out) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "historical" : opts.group;

    io::Table table;
    table.header = {"ticker",      "funding_env",  "acc_return_pct", "apy_pct",
                    "funding_apy_pct", "max_dd_pct", "avg_leverage", "rebalances",
                    "turnover_pct", "avg_rebalance_pct", "avg_alpha"};
    std::string nav_csv = "timestamp_utc,ticker,nav\n";
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto bt = make_backtest_config(cfg, group, venue, asset, "");
            const auto result = bk::run_backtest(bt);
            backtest_report_row(table, bt, result.report);
            for (const auto& pt : result.nav)
                nav_csv += std::to_string(pt.timestamp) + "," + asset + "," +
                           fmt(pt.value, 10) + "\n";
        }
    }
    emit(opts, table.render(table_format(opts)));
    if (!nav_out.empty()) {
        std::ofstream out(nav_out, std::ios::binary);
        if (!out) throw bk::SchemaError("cannot open output file: " + nav_out);
        out << nav_csv;
    }
    return io::kExitOk;
}

int run_compare_funding(const CommonOpts& opts, const std::string& env_a,
                        const std::string& env_b) {
    const auto cfg = load_config(opts);
    const std::string group = opts.group.empty() ? "historical" : opts.group;

    io::Table table;
    table.header = {"ticker", "d_apy_pct", "d_funding_apy_pct", "d_avg_leverage"};
    for (const auto& venue : cfg.venues) {
        for (const auto& asset : cfg.assets) {
            const auto bt_a = make_backtest_config(cfg, group, venue, asset, env_a);
            auto bt_b = bt_a;
            bt_b.funding_source = env_b;
            bt_b.funding =
                io::read_funding_csv(data_path(cfg, group, "funding", env_b, asset));
            const auto delta = bk::compare_funding_envs(bt_a, bt_b);
            table.rows.push_back({asset, fmt(delta.d_apy * 100.0, 4),
                                  fmt(delta.d_funding_apy * 100.0, 4),
                                  fmt(delta.d_avg_leverage, 4)});
        }
    }
    emit(opts, table.render(table_format(opts)));
    return io::kExitOk;
}

void side_summary_rows(io::Table& table, const std::string& sample,
                       const std::vector<bk::SideSummary>& summaries) {
    for (const auto& s : summaries)
        table.rows.push_back({sample, s.label, std::to_string(s.count),
                              fmt(s.median_cost_bps, 4), fmt(s.win_rate, 4),
                              fmt(s.weighted_win_rate, 4)});
}

int run_exec_diag(const CommonOpts& opts, const std::string& trades_path) {
    const auto cfg = load_config(opts);
    std::string path = trades_path;
    if (path.empty()) {
        if (auto p = cfg.path_for("live", "trades", "all"))
            path = *p;
        else
            throw bk::SchemaError("config: missing path live.trades.all");
    }
    const auto trades = io::read_trades_csv(path);
    if (trades.empty()) throw bk::InsufficientDataError("exec-diag: empty trade log");

    io::Table summary;
    summary.header = {"sample", "side", "trades", "median_bps", "win_rate", "weighted_wr"};
    side_summary_rows(summary, "raw", bk::size_filter(trades, 0.0).summary);
    const auto filtered = bk::size_filter(trades, cfg.q_min);
    if (!filtered.empty) side_summary_rows(summary, "post_filter", filtered.summary);

    io::Table buffers;
    buffers.header = {"target_level", "min_buffer_bps"};
    const std::vector<double> levels = {0.90, 0.95, 0.99};
    std::vector<double> grid;
    for (double b = 0.0; b <= 50.0; b += 1.0) grid.push_back(b);
    const auto min_buffers = bk::buffer_curve(trades, levels, grid);
    for (std::size_t i = 0; i < levels.size(); ++i)
        buffers.rows.push_back(
            {fmt(levels[i], 4), min_buffers[i] ? fmt(*min_buffers[i], 4) : "--"});

    io::Table cis;
    cis.header = {"side", "median_bps", "ci_lo", "ci_hi"};
    std::vector<bk::TradeRecord> buys, sells;
    for (const auto& t : trades)
        (t.side == bk::TradeSide::BuyBasis ? buys : sells).push_back(t);
    for (const auto& [label, sample] :
         {std::pair{std::string("buy"), &buys}, {std::string("sell"), &sells}}) {
        if (sample->size() < 2) continue;
        const auto ci = bk::median_ci(*sample, 2000, cfg.seed);
        cis.rows.push_back({label, fmt(ci.point, 4), fmt(ci.lo, 4), fmt(ci.hi, 4)});
    }

    const auto f = table_format(opts);
    emit(opts, summary.render(f) + "\n" + buffers.render(f) + "\n" + cis.render(f));
    return io::kExitOk;
}

int run_capacity(const CommonOpts& opts, const std::string& curve_path, double alpha_t,
                 double target, double k_buy_bps, double k_sell_bps, double p) {
    const auto cfg = load_config(opts);
    std::string path = curve_path;
    if (path.empty()) {
        if (auto q = cfg.path_for("live", "cost_curve", "all"))
            path = *q;
        else
            throw bk::SchemaError("config: missing path live.cost_curve.all");
    }
    const auto samples = io::read_cost_curve_csv(path);
    if (samples.empty()) throw bk::InsufficientDataError("capacity: empty cost curve");

    // Group snapshots by timestamp, then per side.
    std::map<std::int64_t, std::pair<std::vector<bk::CostCurveSample>,
                                     std::vector<bk::CostCurveSample>>>
        by_ts;
    for (const auto& [side, s] : samples)
        (side == bk::TradeSide::BuyBasis ? by_ts[s.timestamp].first
                                         : by_ts[s.timestamp].second)
            .push_back(s);

    bk::CapacityInputs inputs;
    inputs.alpha_t = alpha_t;
    inputs.target = target;
    inputs.q_min_buy = cfg.q_min;
    inputs.q_min_sell = cfg.q_min;

    io::Table table;
    table.header = {"timestamp_utc", "q_buy_max", "q_sell_max", "v_buy", "v_sell", "v_max"};
    std::vector<double> v_series;
    for (const auto& [ts, sides] : by_ts) {
        if (sides.first.empty() || sides.second.empty()) continue;
        const auto buy_curve = bk::operational_cost(bk::TradeSide::BuyBasis, sides.first,
                                                    bk::CostEstimator::Median);
        const auto sell_curve = bk::operational_cost(bk::TradeSide::SellBasis, sides.second,
                                                     bk::CostEstimator::Median);
        const auto q_buy = bk::max_executable_size(buy_curve, k_buy_bps);
        const auto q_sell = bk::max_executable_size(sell_curve, k_sell_bps);
        const double qb = q_buy.value_or(0.0);
        const double qs = q_sell.value_or(0.0);
        const auto cap = bk::capacity(inputs, qb, qs);
        table.rows.push_back({std::to_string(ts), fmt(qb, 6), fmt(qs, 6),
                              cap.unbounded ? "inf" : fmt(cap.v_buy, 6),
                              cap.unbounded ? "inf" : fmt(cap.v_sell, 6),
                              cap.unbounded ? "inf" : fmt(cap.v_max, 6)});
        if (!cap.unbounded) v_series.push_back(cap.v_max);
    }

    io::Table summary;
    summary.header = {"quantile_p", "v_safe_max"};
    if (!v_series.empty())
        summary.rows.push_back({fmt(p, 4), fmt(bk::safe_capacity(v_series, p), 6)});

    const auto f = table_format(opts);
    emit(opts, table.render(f) + "\n" + summary.render(f));
    return io::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collateral-control toolkit for spot-perpetual basis trading"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::size_t mc_paths = 20000;
    double mc_horizon_days = 60.0;
    std::size_t n_boot = 2'000'000;
    std::string nav_out, env_a, env_b, trades_path, curve_path;
    double alpha_t = 0.0, cap_target = 0.0, k_buy_bps = 20.0, k_sell_bps = 40.0,
           cap_quantile = 0.25;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "run configuration file")->required();
        sub->add_option("--seed", opts.seed, "RNG seed override");
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"csv", "text"}));
        sub->add_option("--group", opts.group, "dataset path group");
        sub->add_option("--out", opts.out_path, "output file (default stdout)");
    };

    auto* cmd_calibrate = app.add_subcommand("calibrate", "volatility, carry, window stats");
    add_common(cmd_calibrate);
    auto* cmd_static = app.add_subcommand("static", "static optima and benchmark slice");
    add_common(cmd_static);
    auto* cmd_band = app.add_subcommand("band", "alpha band tables");
    add_common(cmd_band);
    auto* cmd_mc = app.add_subcommand("mc-upper", "upper-boundary hit study");
    add_common(cmd_mc);
    cmd_mc->add_option("--paths", mc_paths, "MC paths per row");
    cmd_mc->add_option("--horizon-days", mc_horizon_days, "study horizon in days");
    auto* cmd_boot = app.add_subcommand("boot-lower", "bootstrap lower boundary");
    add_common(cmd_boot);
    cmd_boot->add_option("--n-boot", n_boot, "bootstrap paths");
    auto* cmd_bt = app.add_subcommand("backtest", "historical backtest");
    add_common(cmd_bt);
    cmd_bt->add_option("--nav-out", nav_out, "hourly NAV CSV output path");
    auto* cmd_cmp = app.add_subcommand("compare-funding", "funding environment deltas");
    add_common(cmd_cmp);
    cmd_cmp->add_option("--env-a", env_a, "baseline funding environment")->required();
    cmd_cmp->add_option("--env-b", env_b, "alternative funding environment")->required();
    auto* cmd_exec = app.add_subcommand("exec-diag", "trade-log execution diagnostics");
    add_common(cmd_exec);
    cmd_exec->add_option("--trades", trades_path, "trade log CSV override");
    auto* cmd_cap = app.add_subcommand("capacity", "executable size and capacity");
    add_common(cmd_cap);
    cmd_cap->add_option("--curve", curve_path, "cost curve CSV override");
    cmd_cap->add_option("--alpha-t", alpha_t, "current collateral share")->required();
    cmd_cap->add_option("--target", cap_target, "target collateral share")->required();
    cmd_cap->add_option("--k-buy-bps", k_buy_bps, "buy-side cost budget, bps");
    cmd_cap->add_option("--k-sell-bps", k_sell_bps, "sell-side cost budget, bps");
    cmd_cap->add_option("--quantile", cap_quantile, "safe-capacity quantile");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_calibrate->parsed()) return run_calibrate(opts);
        if (cmd_static->parsed()) return run_static(opts);
        if (cmd_band->parsed()) return run_band(opts);
        if (cmd_mc->parsed()) return run_mc_upper(opts, mc_paths, mc_horizon_days);
        if (cmd_boot->parsed()) return run_boot_lower(opts, n_boot);
        if (cmd_bt->parsed()) return run_backtest_cmd(opts, nav_out);
        if (cmd_cmp->parsed()) return run_compare_funding(opts, env_a, env_b);
        if (cmd_exec->parsed()) return run_exec_diag(opts, trades_path);
        if (cmd_cap->parsed())
            return run_capacity(opts, curve_path, alpha_t, cap_target, k_buy_bps,
                                k_sell_bps, cap_quantile);
    } catch (const bk::SchemaError& e) {
        std::cerr << "error: schema: " << e.what() << "\n";
        return io::kExitSchema;
    } catch (const bk::InfeasibleError& e) {
        std::cerr << "error: infeasible: " << e.what() << "\n";
        return io::kExitInfeasible;
    } catch (const bk::InsufficientDataError& e) {
        std::cerr << "error: insufficient-data: " << e.what() << "\n";
        return io::kExitInsufficientData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: schema: " << e.what() << "\n";
        return io::kExitSchema;
    }
    return io::kExitOk;
}
