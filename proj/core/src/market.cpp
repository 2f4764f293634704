#include "basiskit/market.hpp"

#include <cmath>

namespace basiskit {

TetherParams TetherParams::from_coefficients(double kappa_prem, double iota,
                                             double r_x, double r_y) {
    TetherParams t;
    t.kappa_prem = kappa_prem;
    t.iota = iota;
    t.r_x = r_x;
    t.r_y = r_y;
    const double denom = kappa_prem + r_y - r_x;
    t.zeta = (denom != 0.0) ? (kappa_prem - iota) / denom : 1.0;
    return t;
}

PortfolioState build_portfolio(double capital, double alpha0, double p0,
                               const TetherParams& tether) {
    if (capital <= 0.0) throw std::invalid_argument("build_portfolio: capital must be > 0");
    if (p0 <= 0.0) throw std::invalid_argument("build_portfolio: p0 must be > 0");
    if (!(alpha0 > 0.0 && alpha0 < 1.0))
        throw std::invalid_argument("build_portfolio: alpha0 must lie in (0,1)");
    if (tether.zeta == 0.0) throw std::invalid_argument("build_portfolio: zeta must be nonzero");

    PortfolioState s;
    s.capital = capital;
    s.alpha0 = alpha0;
    s.p0 = p0;
    s.zeta = tether.zeta;
    s.spot_units = (1.0 - alpha0) * capital / p0;
    s.hedge = -s.spot_units / tether.zeta;
    s.margin = alpha0 * capital;
    return s;
}

double alpha_marked(double alpha0, double price_ratio) {
    if (price_ratio <= 0.0)
        throw std::invalid_argument("alpha_marked: price_ratio must be > 0");
    return 1.0 - (1.0 - alpha0) * price_ratio;
}

double alpha_full(const PortfolioState& state, double p, double f,
                  double funding_integral) {
    const double vf = state.margin + state.hedge * (f - state.f0()) -
                      state.hedge * funding_integral;
    const double denom = state.spot_units * p + vf;
    if (denom <= 0.0)
        throw DegenerateEquityError("alpha_full: portfolio equity is non-positive");
    return vf / denom;
}

double leverage(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("leverage: alpha must be > 0");
    return (1.0 - alpha) / alpha;
}

double leverage_path(double alpha0, double price_ratio) {
    const double a = alpha_marked(alpha0, price_ratio);
    if (a <= 0.0)
        throw LiquidatedRegionError("leverage_path: price ratio beyond liquidation point");
    return (1.0 - alpha0) * price_ratio / a;
}

double leverage_sensitivity(double alpha0, double p0, double price_ratio) {
    const double a = alpha_marked(alpha0, price_ratio);
    if (a <= 0.0)
        throw LiquidatedRegionError("leverage_sensitivity: price ratio beyond liquidation point");
    return (1.0 - alpha0) / (p0 * a * a);
}

}  // namespace basiskit
