#include "basiskit/liquidation.hpp"

#include <cmath>
#include <limits>

namespace basiskit {

double maintenance_fraction(const VenueSpec& venue) {
    if (venue.max_leverage < 1)
        throw std::invalid_argument("maintenance_fraction: max_leverage must be >= 1");
    double c = 1.0;
    switch (venue.rule) {
        case MaintenanceRule::HalfOfInitial: c = 0.5; break;
        case MaintenanceRule::FullInitial: c = 1.0; break;
        case MaintenanceRule::CustomFraction:
            c = venue.custom_fraction;
            if (!(c > 0.0 && c <= 1.0))
                throw std::invalid_argument("maintenance_fraction: custom fraction outside (0,1]");
            break;
    }
    return c / static_cast<double>(venue.max_leverage);
}

double barrier_z(double alpha, double theta_f) {
    if (alpha >= 1.0) throw std::invalid_argument("barrier_z: alpha must be < 1");
    if (alpha < 0.0) throw std::invalid_argument("barrier_z: alpha must be >= 0");
    if (theta_f < 0.0) throw std::invalid_argument("barrier_z: theta_F must be >= 0");
    return 1.0 / ((1.0 + theta_f) * (1.0 - alpha));
}

double liquidation_alpha(double theta_f) {
    if (theta_f < 0.0) throw std::invalid_argument("liquidation_alpha: theta_F must be >= 0");
    return theta_f / (1.0 + theta_f);
}

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869;  // 1/sqrt(pi)

// erf by its Maclaurin series; adequate to full double precision for
// |x| <= 2 where cancellation is mild.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 80; ++n) {
        term *= -x2 / n;
        const double contrib = term / (2 * n + 1);
        sum += contrib;
        if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
    }
    return 2.0 * kInvSqrtPi * sum;
}

// Continued fraction for erfc, x >= 2, evaluated by the modified Lentz
// algorithm: erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + ...))).
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 300; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return kInvSqrtPi * std::exp(-x * x) / f;
}

}  // namespace

double erfc(double x) {
    if (std::isnan(x)) throw std::invalid_argument("erfc: x must be finite");
    if (x >= 27.0) return 0.0;  // underflows double
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x <= 2.0) return 1.0 - erf_series(x);
    return erfc_cf(x);
}

double liq_probability(const BarrierProblem& problem) {
    if (!(problem.sigma > 0.0)) throw std::invalid_argument("liq_probability: sigma must be > 0");
    if (!(problem.horizon > 0.0)) throw std::invalid_argument("liq_probability: horizon must be > 0");
    if (!(problem.alpha > 0.0 && problem.alpha < 1.0))
        throw std::invalid_argument("liq_probability: alpha must lie in (0,1)");
    if (!(problem.theta_f >= 0.0 && problem.theta_f < 1.0))
        throw std::invalid_argument("liq_probability: theta_F must lie in [0,1)");

    const double z = barrier_z(problem.alpha, problem.theta_f);
    if (z <= 1.0) return 1.0;

    const double nu = problem.mu / (problem.sigma * problem.sigma) - 0.5;
    const double log_z = std::log(z);
    const double sig_sqrt_h = problem.sigma * std::sqrt(problem.horizon);
    const double a = log_z / (sig_sqrt_h * std::sqrt(2.0));
    const double b = nu * sig_sqrt_h / std::sqrt(2.0);

    const double p = 0.5 * erfc(a - b) + 0.5 * std::exp(2.0 * nu * log_z) * erfc(a + b);
    return std::fmin(std::fmax(p, 0.0), 1.0);
}

}  // namespace basiskit
