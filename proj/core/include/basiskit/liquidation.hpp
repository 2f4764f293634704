#pragma once

#include <string>

#include "basiskit/market.hpp"

namespace basiskit {

/// How a venue's maintenance floor relates to the maximum initial margin
/// 1/L_max. HalfOfInitial and FullInitial are the two reduced-form venue
/// rules; CustomFraction covers anything in between.
enum class MaintenanceRule { HalfOfInitial, FullInitial, CustomFraction };

struct VenueSpec {
    std::string name;
    int max_leverage = 1;
    MaintenanceRule rule = MaintenanceRule::HalfOfInitial;
    double custom_fraction = 1.0;  // c in (0,1], used with CustomFraction
};

/// Maintenance fraction theta_F implied by the venue rule:
/// c / L_max with c = 1/2, 1, or a custom value.
double maintenance_fraction(const VenueSpec& venue);

/// First-passage problem for the liquidation barrier.
struct BarrierProblem {
    double alpha = 0.0;    // collateral share in (0,1)
    double theta_f = 0.0;  // maintenance fraction in (0,1)
    double sigma = 0.0;    // vol per sqrt-year, > 0
    double mu = 0.0;       // drift per year
    double horizon = 0.0;  // years, > 0
};

/// Barrier parameter z = 1 / ((1+theta_F)(1-alpha)). The spot ratio
/// p_t/p0 reaching z triggers liquidation.
double barrier_z(double alpha, double theta_f);

/// Share at which the barrier sits exactly at the current price:
/// alpha_liq = theta_F / (1 + theta_F).
double liquidation_alpha(double theta_f);

/// Complementary error function, absolute error <= 1e-12 on the whole
/// real line. Self-contained so the probability map carries no external
/// math dependency.
double erfc(double x);

/// Closed-form probability that the GBM spot ratio reaches the barrier
/// within the horizon. Returns exactly 1 when z <= 1 (barrier already
/// at or below the current price); total on (0,1).
double liq_probability(const BarrierProblem& problem);

}  // namespace basiskit
