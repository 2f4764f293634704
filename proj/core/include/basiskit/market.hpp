#pragma once

#include "basiskit/errors.hpp"

namespace basiskit {

// Time conventions used throughout: years as the base unit,
// 8760 hours per year, 365 days per year.
inline constexpr double kHoursPerYear = 8760.0;
inline constexpr double kDaysPerYear = 365.0;

inline double hours_to_years(double h) { return h / kHoursPerYear; }
inline double days_to_years(double d) { return d / kDaysPerYear; }

/// Reduced-form coefficient tethering the perpetual price to spot,
/// f = zeta * p. The liquidation math is invariant to zeta, so the
/// default of 1 is used unless a venue-specific value is supplied.
struct TetherParams {
    double kappa_prem = 0.0;  // premium sensitivity
    double iota = 0.0;        // interest component
    double r_x = 0.0;         // numeraire financing term
    double r_y = 0.0;         // asset financing term
    double zeta = 1.0;

    /// Derive zeta from the structural coefficients.
    static TetherParams from_coefficients(double kappa_prem, double iota,
                                          double r_x, double r_y);
};

/// Spot-price law: geometric Brownian motion with drift mu per year and
/// volatility sigma per sqrt-year. Stress multipliers act on sigma only.
struct MarketParams {
    double mu = 0.0;
    double sigma = 0.0;
    TetherParams tether{};
};

/// Delta-neutral spot-perpetual portfolio state.
struct PortfolioState {
    double capital = 0.0;          // D, in numeraire units
    double alpha0 = 0.0;           // initial collateral share in (0,1)
    double p0 = 0.0;               // initial spot price
    double spot_units = 0.0;       // Q = (1-alpha0) D / p0
    double hedge = 0.0;            // H = -Q / zeta (negative = short)
    double margin = 0.0;           // M_0 = alpha0 * D
    double funding_accrued = 0.0;  // cumulative funding cashflow
    double t = 0.0;                // years since inception
    double zeta = 1.0;

    double f0() const { return zeta * p0; }
};

/// Construct a delta-neutral portfolio at inception: margin alpha0*D,
/// spot leg (1-alpha0)*D, hedge sized so that Q + zeta*H = 0.
PortfolioState build_portfolio(double capital, double alpha0, double p0,
                               const TetherParams& tether = {});

/// Mark-to-market collateral share, funding suppressed:
/// alpha_t = 1 - (1-alpha0) * p_t/p0. May return values <= 0, which the
/// caller reads as post-liquidation territory.
double alpha_marked(double alpha0, double price_ratio);

/// Full state-equation share alpha_t = V^F / (Q p + V^F) with
/// V^F = M_0 + H (f - f0) - H * funding_integral.
double alpha_full(const PortfolioState& state, double p, double f,
                  double funding_integral);

/// Margin leverage L = (1-alpha)/alpha for alpha in (0,1].
double leverage(double alpha);

/// Leverage along the marked path as a function of the price ratio.
double leverage_path(double alpha0, double price_ratio);

/// Local price sensitivity dL/dp = (1-alpha0) / (p0 * alpha_t^2).
double leverage_sensitivity(double alpha0, double p0, double price_ratio);

}  // namespace basiskit
