#pragma once

#include <string>
#include <vector>

#include "basiskit/liquidation.hpp"

namespace basiskit {

// Search domain for the collateral share. The upper clip matches the
// dynamic layer's saturation convention.
inline constexpr double kAlphaDomainMin = 1e-4;
inline constexpr double kAlphaDomainMax = 0.99;

/// Inputs shared by the two static collateral problems.
struct StaticProblem {
    MarketParams market{};
    double theta_f = 0.0;
    double capital = 1.0;   // D; objectives are scale-free at D = 1
    double kappa_h = 0.0;   // expected cumulative funding over the horizon, fraction
    double horizon = 0.0;   // years
    double lgd = 0.0;       // loss-given-default as a fraction of capital
    double epsilon = 0.0;   // admissible liquidation probability
};

enum class Binding { Interior, ConstraintActive, Boundary };

struct StaticSolution {
    double alpha_star = 0.0;
    double objective_value = 0.0;
    Binding binding = Binding::Interior;
};

/// Risk-constrained optimum: the minimal share whose liquidation
/// probability meets the budget. Bisection after bracketing on
/// [1e-4, 0.99]; at an interior solution the probability equals the
/// budget to within 1e-9.
StaticSolution solve_variant2(const StaticProblem& problem);

/// Economic optimum: maximizes (1-alpha) D kappa_h - LGD * Pi(alpha; h)
/// by dense grid (step 1e-4) plus local refinement (step 1e-6).
StaticSolution solve_variant1(const StaticProblem& problem);

/// One (venue, asset) input for the comparative slice.
struct SliceEntry {
    VenueSpec venue;
    std::string asset;
    double sigma = 0.0;    // calibrated, already stressed
    double kappa_h = 0.0;  // horizon-cumulative funding fraction
};

struct SliceConfig {
    double epsilon = 0.001;
    double horizon = 1.0 / kDaysPerYear;
    double mu = 0.0;
    double capital = 1.0;
};

/// Row layout follows the comparative-slice column order:
/// venue, asset, alpha, leverage, kappa in bps, theta_F.
struct SliceRow {
    std::string venue;
    std::string asset;
    double alpha_star = 0.0;
    double leverage = 0.0;
    double kappa_bps = 0.0;
    double theta_f = 0.0;
};

std::vector<SliceRow> benchmark_slice(const std::vector<SliceEntry>& entries,
                                      const SliceConfig& config);

}  // namespace basiskit
