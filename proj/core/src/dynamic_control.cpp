#include "basiskit/dynamic_control.hpp"

#include <algorithm>
#include <cmath>

namespace basiskit {

double lower_bound(const MarketParams& market, double theta_f, const PolicyConfig& cfg) {
    StaticProblem problem;
    problem.market = market;
    problem.theta_f = theta_f;
    problem.horizon = hours_to_years(cfg.h_liq_hours);
    problem.epsilon = cfg.eps_liq;
    return solve_variant2(problem).alpha_star;
}

UpperBound upper_bound(double target, double capital, double kappa_h,
                       double k_reb, double clip) {
    UpperBound ub;
    if (kappa_h <= 0.0) {
        ub.alpha = clip;
        ub.saturated = true;
        return ub;
    }
    if (k_reb <= 0.0) {
        // Intervention itself is favorable; rebalance down immediately.
        ub.alpha = target;
        return ub;
    }
    const double raw = target + k_reb / (capital * kappa_h);
    ub.saturated = raw > clip;
    ub.alpha = std::min(raw, clip);
    return ub;
}

bool carry_test(double alpha_t, double target, double capital, double kappa_h,
                double k_fix) {
    return (alpha_t - target) * capital * kappa_h >= k_fix;
}

double target_rebalance_size(double alpha_t, double target, double equity) {
    if (!(equity > 0.0))
        throw std::invalid_argument("target_rebalance_size: equity must be > 0");
    return std::fabs(alpha_t - target) * equity;
}

PolicyAction policy_step(double alpha_t, const AlphaBand& band, double equity,
                         const PolicyConfig& cfg, const ExecutionCaps& caps) {
    if (!band.valid()) throw std::invalid_argument("policy_step: band invariants violated");
    if (caps.buy < 0.0 || caps.sell < 0.0)
        throw std::invalid_argument("policy_step: caps must be >= 0");

    PolicyAction action;
    action.resulting_alpha = alpha_t;
    if (alpha_t >= band.lower && alpha_t <= band.upper) return action;

    const double full_size = target_rebalance_size(alpha_t, band.target, equity);
    auto partial_reset = [&](double executed) {
        return full_size > 0.0
                   ? alpha_t + (band.target - alpha_t) * (executed / full_size)
                   : band.target;
    };

    if (alpha_t < band.lower) {
        const double executable = std::min(full_size, caps.buy);
        if (executable < cfg.q_min) {
            action.kind = ActionKind::Emergency;
            return action;
        }
        action.kind = ActionKind::BuyBasis;
        action.notional = executable;
        action.resulting_alpha = partial_reset(executable);
        return action;
    }

    // alpha_t > band.upper: sell only when the carry recovered covers the
    // fixed cost budget and the executable size is economically meaningful.
    // Both sides of the test are fractions of capital, so D = 1 here.
    if (!carry_test(alpha_t, band.target, 1.0, cfg.kappa_h, cfg.k_fix)) return action;
    const double executable = std::min(full_size, caps.sell);
    if (executable < cfg.q_min) return action;
    action.kind = ActionKind::SellBasis;
    action.notional = executable;
    action.resulting_alpha = partial_reset(executable);
    return action;
}

}  // namespace basiskit
