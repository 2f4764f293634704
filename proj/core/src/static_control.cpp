#include "basiskit/static_control.hpp"

#include <algorithm>
#include <cmath>

namespace basiskit {

namespace {

double liq_prob_at(const StaticProblem& problem, double alpha) {
    BarrierProblem bp;
    bp.alpha = alpha;
    bp.theta_f = problem.theta_f;
    bp.sigma = problem.market.sigma;
    bp.mu = problem.market.mu;
    bp.horizon = problem.horizon;
    return liq_probability(bp);
}

double carry_objective(const StaticProblem& problem, double alpha) {
    return (1.0 - alpha) * problem.capital * problem.kappa_h;
}

double econ_objective(const StaticProblem& problem, double alpha) {
    return carry_objective(problem, alpha) - problem.lgd * liq_prob_at(problem, alpha);
}

void validate(const StaticProblem& problem) {
    if (!(problem.horizon > 0.0)) throw std::invalid_argument("static problem: horizon must be > 0");
    if (!(problem.epsilon > 0.0 && problem.epsilon <= 1.0))
        throw std::invalid_argument("static problem: epsilon must lie in (0,1]");
    if (problem.lgd < 0.0) throw std::invalid_argument("static problem: lgd must be >= 0");
}

}  // namespace

StaticSolution solve_variant2(const StaticProblem& problem) {
    validate(problem);

    StaticSolution sol;
    if (liq_prob_at(problem, kAlphaDomainMin) <= problem.epsilon) {
        sol.alpha_star = kAlphaDomainMin;
        sol.binding = Binding::Boundary;
        sol.objective_value = carry_objective(problem, sol.alpha_star);
        return sol;
    }
    if (liq_prob_at(problem, kAlphaDomainMax) > problem.epsilon)
        throw InfeasibleError("solve_variant2: budget unattainable at alpha = 0.99");

    // Pi is decreasing in alpha on the bracketed region, so bisect until
    // the probability gap at the feasible endpoint is inside tolerance.
    double lo = kAlphaDomainMin;  // infeasible side
    double hi = kAlphaDomainMax;  // feasible side
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (liq_prob_at(problem, mid) <= problem.epsilon)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 1e-15 && problem.epsilon - liq_prob_at(problem, hi) < 1e-9) break;
    }
    sol.alpha_star = hi;
    sol.binding = Binding::ConstraintActive;
    sol.objective_value = carry_objective(problem, sol.alpha_star);
    return sol;
}

StaticSolution solve_variant1(const StaticProblem& problem) {
    validate(problem);

    auto scan = [&](double lo, double hi, double step) {
        double best_alpha = lo;
        double best_value = econ_objective(problem, lo);
        const long n = std::lround((hi - lo) / step);
        for (long i = 1; i <= n; ++i) {
            const double alpha = std::min(lo + step * static_cast<double>(i), hi);
            const double value = econ_objective(problem, alpha);
            if (value > best_value) {
                best_value = value;
                best_alpha = alpha;
            }
        }
        return std::pair{best_alpha, best_value};
    };

    auto [coarse_alpha, coarse_value] = scan(kAlphaDomainMin, kAlphaDomainMax, 1e-4);
    const double lo = std::max(kAlphaDomainMin, coarse_alpha - 2e-4);
    const double hi = std::min(kAlphaDomainMax, coarse_alpha + 2e-4);
    auto [alpha, value] = scan(lo, hi, 1e-6);

    StaticSolution sol;
    sol.alpha_star = alpha;
    sol.objective_value = value;
    sol.binding = (alpha <= kAlphaDomainMin + 1e-12 || alpha >= kAlphaDomainMax - 1e-12)
                      ? Binding::Boundary
                      : Binding::Interior;
    return sol;
}

std::vector<SliceRow> benchmark_slice(const std::vector<SliceEntry>& entries,
                                      const SliceConfig& config) {
    std::vector<SliceRow> rows;
    rows.reserve(entries.size());
    for (const auto& entry : entries) {
        StaticProblem problem;
        problem.market.mu = config.mu;
        problem.market.sigma = entry.sigma;
        problem.theta_f = maintenance_fraction(entry.venue);
        problem.capital = config.capital;
        problem.kappa_h = entry.kappa_h;
        problem.horizon = config.horizon;
        problem.epsilon = config.epsilon;

        const StaticSolution sol = solve_variant2(problem);

        SliceRow row;
        row.venue = entry.venue.name;
        row.asset = entry.asset;
        row.alpha_star = sol.alpha_star;
        row.leverage = leverage(sol.alpha_star);
        row.kappa_bps = entry.kappa_h * 1e4;
        row.theta_f = problem.theta_f;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace basiskit
