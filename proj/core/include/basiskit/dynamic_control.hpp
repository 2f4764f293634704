#pragma once

#include "basiskit/static_control.hpp"

namespace basiskit {

/// No-action band for the collateral share. Closed on both ends:
/// action only on strict exit.
struct AlphaBand {
    double target = 0.0;  // alpha-dagger
    double lower = 0.0;   // alpha_L
    double upper = 0.0;   // alpha_U
    double clip = kAlphaDomainMax;

    bool valid() const { return lower < target && target < upper && upper <= clip; }
};

/// Rebalancing cost decomposition, all as fractions of capital.
struct RebalanceCost {
    double fee = 0.0;
    double impact = 0.0;
    double gas = 0.0;
    double exec = 0.0;
    double basis_credit = 0.0;  // favorable basis realized at intervention

    double total() const { return fee + impact + gas + exec - basis_credit; }
};

struct PolicyConfig {
    double h_liq_hours = 3.0;
    double eps_liq = 1e-4;
    double kappa_h = 0.0;        // expected funding over the decision horizon
    double k_fix = 0.0;          // fixed execution cost budget, fraction of capital
    double q_min = 10000.0;      // minimum executable notional, USD
    int decision_horizon_days = 14;
};

enum class ActionKind { Hold, BuyBasis, SellBasis, Emergency };

struct PolicyAction {
    ActionKind kind = ActionKind::Hold;
    double notional = 0.0;
    double resulting_alpha = 0.0;
};

/// Per-side executable notional limits supplied by the execution layer.
struct ExecutionCaps {
    double buy = 0.0;
    double sell = 0.0;
};

inline constexpr double kUnboundedCap = 1e30;

/// Solvency-driven lower boundary: minimal share meeting the
/// short-horizon liquidation budget. An adaptive variant is the same
/// call with a time-varying sigma in `market`.
double lower_bound(const MarketParams& market, double theta_f, const PolicyConfig& cfg);

struct UpperBound {
    double alpha = 0.0;
    bool saturated = false;  // clipped, or kappa_h <= 0
};

/// Economic upper boundary: target + K_reb / (D kappa_h), clipped.
/// Non-positive kappa_h saturates at the clip; non-positive cost makes
/// downward rebalancing always favorable, so the boundary sits at the
/// target.
UpperBound upper_bound(double target, double capital, double kappa_h,
                       double k_reb, double clip = kAlphaDomainMax);

/// Carry-versus-cost trigger: (alpha_t - target) D kappa_h >= K_fix.
/// Boundary equality counts as a pass.
bool carry_test(double alpha_t, double target, double capital, double kappa_h,
                double k_fix);

/// Notional that restores the share to the target:
/// |alpha_t - target| * equity.
double target_rebalance_size(double alpha_t, double target, double equity);

/// One decision of the operational policy: classify the region, size the
/// intervention, truncate by the executable cap, and gate the sell side
/// by the carry test.
PolicyAction policy_step(double alpha_t, const AlphaBand& band, double equity,
                         const PolicyConfig& cfg, const ExecutionCaps& caps);

}  // namespace basiskit
