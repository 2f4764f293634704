#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "basiskit/market.hpp"
#include "basiskit/rng.hpp"

namespace basiskit {

struct SimConfig {
    std::size_t n_paths = 1;
    double dt = 0.0;       // step in years
    double horizon = 0.0;  // years
    std::uint64_t seed = 0;

    void validate() const;
    std::size_t n_steps() const;
};

/// Lazy GBM path ensemble under the exact log-Euler scheme. Each path is
/// a pure function of (parameters, seed, index), so identical seeds give
/// bit-identical ensembles regardless of evaluation order.
class GbmEnsemble {
public:
    GbmEnsemble(double mu, double sigma, double p0, const SimConfig& cfg);

    std::size_t n_paths() const { return cfg_.n_paths; }
    std::size_t n_steps() const { return cfg_.n_steps(); }

    /// Path values including the initial price, length n_steps() + 1.
    std::vector<double> path(std::size_t index) const;

    double terminal(std::size_t index) const;

private:
    double mu_;
    double sigma_;
    double p0_;
    SimConfig cfg_;
};

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo first-passage estimate: fraction of paths whose running
/// maximum of p/p0 reaches the liquidation barrier within the horizon.
/// Serves as the independent oracle for the closed-form probability.
McEstimate mc_first_passage(double alpha, double theta_f, double mu, double sigma,
                            double horizon, const SimConfig& cfg);

struct HitStudyResult {
    double hit_rate = 0.0;
    std::optional<double> median_hit_days;
    std::size_t n_paths = 0;
};

/// Time-to-hit study for a candidate upper boundary: per path, track the
/// marked share and record the first crossing alpha_t >= alpha_upper.
HitStudyResult upper_hit_study(double alpha0, double alpha_upper, double mu,
                               double sigma, double horizon_days, const SimConfig& cfg);

struct BootstrapConfig {
    int block_hours = 1;
    int path_hours = 3;        // operational liquidation horizon
    double stress = 1.5;
    double eps_liq = 1e-4;
    std::size_t n_boot = 2'000'000;
    std::uint64_t seed = 0;
    double theta_f = 0.0;

    void validate() const;
};

/// Bootstrap lower boundary: resample historical short-horizon returns
/// with replacement into synthetic paths, estimate the empirical breach
/// probability per candidate share on a 1e-3 grid, and return the
/// infimum share meeting the budget.
double bootstrap_lower_bound(std::span<const double> hourly_log_returns,
                             const BootstrapConfig& cfg);

}  // namespace basiskit
