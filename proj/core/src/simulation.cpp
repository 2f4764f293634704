#include "basiskit/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "basiskit/liquidation.hpp"

namespace basiskit {

double SubstreamRng::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

void SimConfig::validate() const {
    if (n_paths < 1) throw std::invalid_argument("SimConfig: n_paths must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
    if (!(horizon >= dt)) throw std::invalid_argument("SimConfig: horizon must be >= dt");
}

std::size_t SimConfig::n_steps() const {
    return static_cast<std::size_t>(std::llround(horizon / dt));
}

GbmEnsemble::GbmEnsemble(double mu, double sigma, double p0, const SimConfig& cfg)
    : mu_(mu), sigma_(sigma), p0_(p0), cfg_(cfg) {
    cfg_.validate();
    if (!(sigma >= 0.0)) throw std::invalid_argument("GbmEnsemble: sigma must be >= 0");
    if (!(p0 > 0.0)) throw std::invalid_argument("GbmEnsemble: p0 must be > 0");
}

std::vector<double> GbmEnsemble::path(std::size_t index) const {
    SubstreamRng rng(cfg_.seed, index);
    const std::size_t steps = cfg_.n_steps();
    const double drift = (mu_ - 0.5 * sigma_ * sigma_) * cfg_.dt;
    const double diffusion = sigma_ * std::sqrt(cfg_.dt);

    std::vector<double> out;
    out.reserve(steps + 1);
    out.push_back(p0_);
    double log_p = std::log(p0_);
    for (std::size_t k = 0; k < steps; ++k) {
        log_p += drift + diffusion * rng.next_normal();
        out.push_back(std::exp(log_p));
    }
    return out;
}

double GbmEnsemble::terminal(std::size_t index) const {
    SubstreamRng rng(cfg_.seed, index);
    const std::size_t steps = cfg_.n_steps();
    const double drift = (mu_ - 0.5 * sigma_ * sigma_) * cfg_.dt;
    const double diffusion = sigma_ * std::sqrt(cfg_.dt);
    double log_p = std::log(p0_);
    for (std::size_t k = 0; k < steps; ++k)
        log_p += drift + diffusion * rng.next_normal();
    return std::exp(log_p);
}

McEstimate mc_first_passage(double alpha, double theta_f, double mu, double sigma,
                            double horizon, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.dt > horizon / 100.0)
        throw std::invalid_argument("mc_first_passage: dt must be <= horizon/100");

    const double z = barrier_z(alpha, theta_f);
    if (z <= 1.0) return {1.0, 0.0};

    const double log_z = std::log(z);
    const std::size_t steps =
        static_cast<std::size_t>(std::llround(horizon / cfg.dt));
    const double drift = (mu - 0.5 * sigma * sigma) * cfg.dt;
    const double diffusion = sigma * std::sqrt(cfg.dt);

    // Discretely monitored paths understate continuous first passage, so
    // each step also samples the Brownian-bridge crossing probability
    // exp(-2 (z - s_k)(z - s_{k+1}) / (sigma^2 dt)) between the endpoints.
    const double bridge_scale = 2.0 / (sigma * sigma * cfg.dt);

    std::size_t hits = 0;
    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
        SubstreamRng rng(cfg.seed, i);
        double s = 0.0;  // log of the price ratio
        for (std::size_t k = 0; k < steps; ++k) {
            const double s_next = s + drift + diffusion * rng.next_normal();
            if (s_next >= log_z) {
                ++hits;
                break;
            }
            const double exponent = -bridge_scale * (log_z - s) * (log_z - s_next);
            if (exponent > -40.0 && rng.next_uniform() < std::exp(exponent)) {
                ++hits;
                break;
            }
            s = s_next;
        }
    }
    const double n = static_cast<double>(cfg.n_paths);
    const double p = static_cast<double>(hits) / n;
    return {p, std::sqrt(p * (1.0 - p) / n)};
}

HitStudyResult upper_hit_study(double alpha0, double alpha_upper, double mu,
                               double sigma, double horizon_days, const SimConfig& cfg) {
    cfg.validate();
    if (alpha_upper < alpha0)
        throw std::invalid_argument("upper_hit_study: alpha_upper must be >= alpha0");

    HitStudyResult result;
    result.n_paths = cfg.n_paths;

    // alpha_marked(alpha0, r) >= alpha_U is the down-barrier
    // r <= (1 - alpha_U) / (1 - alpha0) in the price ratio.
    const double barrier = (1.0 - alpha_upper) / (1.0 - alpha0);
    if (barrier >= 1.0) {
        result.hit_rate = 1.0;
        result.median_hit_days = 0.0;
        return result;
    }

    const double log_b = std::log(barrier);
    const double horizon = days_to_years(horizon_days);
    const std::size_t steps =
        static_cast<std::size_t>(std::llround(horizon / cfg.dt));
    const double drift = (mu - 0.5 * sigma * sigma) * cfg.dt;
    const double diffusion = sigma * std::sqrt(cfg.dt);

    std::vector<double> hit_days;
    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
        SubstreamRng rng(cfg.seed, i);
        double s = 0.0;
        for (std::size_t k = 0; k < steps; ++k) {
            s += drift + diffusion * rng.next_normal();
            if (s <= log_b) {
                hit_days.push_back(static_cast<double>(k + 1) * cfg.dt * kDaysPerYear);
                break;
            }
        }
    }

    result.hit_rate = static_cast<double>(hit_days.size()) / static_cast<double>(cfg.n_paths);
    if (!hit_days.empty()) {
        std::sort(hit_days.begin(), hit_days.end());
        const std::size_t n = hit_days.size();
        result.median_hit_days = (n % 2 == 1)
                                     ? hit_days[n / 2]
                                     : 0.5 * (hit_days[n / 2 - 1] + hit_days[n / 2]);
    }
    return result;
}

void BootstrapConfig::validate() const {
    if (block_hours < 1) throw std::invalid_argument("BootstrapConfig: block_hours must be >= 1");
    if (path_hours % block_hours != 0)
        throw std::invalid_argument("BootstrapConfig: path_hours must be divisible by block_hours");
    if (!(stress > 0.0)) throw std::invalid_argument("BootstrapConfig: stress must be > 0");
    if (!(eps_liq > 0.0 && eps_liq < 1.0))
        throw std::invalid_argument("BootstrapConfig: eps_liq must lie in (0,1)");
    if (static_cast<double>(n_boot) < 10.0 / eps_liq)
        throw InsufficientDataError("BootstrapConfig: n_boot too small to resolve eps_liq");
}

double bootstrap_lower_bound(std::span<const double> hourly_log_returns,
                             const BootstrapConfig& cfg) {
    cfg.validate();
    if (hourly_log_returns.size() < 100)
        throw InsufficientDataError("bootstrap_lower_bound: need >= 100 source returns");

    const std::size_t blocks_per_path =
        static_cast<std::size_t>(cfg.path_hours / cfg.block_hours);
    const std::uint64_t n_src = hourly_log_returns.size();

    // Running maximum of the cumulative stressed log return per path.
    std::vector<double> maxima;
    maxima.reserve(cfg.n_boot);
    for (std::size_t i = 0; i < cfg.n_boot; ++i) {
        SubstreamRng rng(cfg.seed, i);
        double cum = 0.0;
        double running_max = -1e300;
        for (std::size_t k = 0; k < blocks_per_path; ++k) {
            const std::uint64_t j = rng.next_u64() % n_src;
            cum += cfg.stress * hourly_log_returns[j];
            running_max = std::max(running_max, cum);
        }
        maxima.push_back(running_max);
    }
    std::sort(maxima.begin(), maxima.end());

    const double budget = cfg.eps_liq * static_cast<double>(cfg.n_boot);
    auto breach_count = [&](double alpha) {
        const double log_z = std::log(barrier_z(alpha, cfg.theta_f));
        // paths with running max >= log_z
        return static_cast<double>(
            maxima.end() - std::lower_bound(maxima.begin(), maxima.end(), log_z));
    };

    constexpr double kGridStep = 1e-3;
    if (breach_count(1e-4) <= budget) return 1e-4;  // domain minimum
    for (double alpha = kGridStep; alpha < 0.99; alpha += kGridStep) {
        if (breach_count(alpha) <= budget) return alpha;
    }
    throw InfeasibleError("bootstrap_lower_bound: budget unattainable on the grid");
}

}  // namespace basiskit
