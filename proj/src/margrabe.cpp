#include "flmm/margrabe.hpp"

#include <cmath>

#include "flmm/normal.hpp"

namespace flmm {

void ModelParams::validate() const {
    if (!(sigma1 > 0.0) || !std::isfinite(sigma1))
        throw ValidationError("sigma1 must be > 0, got " + std::to_string(sigma1));
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
        throw ValidationError("sigma2 must be >= 0, got " + std::to_string(sigma2));
    if (!(rho >= -1.0 && rho <= 1.0))
        throw ValidationError("rho must be in [-1, 1], got " + std::to_string(rho));
    if (!(r >= 0.0) || !std::isfinite(r))
        throw ValidationError("r must be >= 0, got " + std::to_string(r));
}

void MarketState::validate() const {
    if (!(s1 > 0.0) || !std::isfinite(s1))
        throw ValidationError("s1 must be > 0, got " + std::to_string(s1));
    if (!(s2 > 0.0) || !std::isfinite(s2))
        throw ValidationError("s2 must be > 0, got " + std::to_string(s2));
}

double effective_vol(const ModelParams& params) {
    params.validate();
    double rad = params.sigma1 * params.sigma1 + params.sigma2 * params.sigma2 -
                 2.0 * params.sigma1 * params.sigma2 * params.rho;
    if (rad < 0.0) {
        // |rho| <= 1 makes the radicand >= (sigma1-sigma2)^2; anything below is rounding.
        if (rad < -1e-12) throw ValidationError("negative effective variance " + std::to_string(rad));
        rad = 0.0;
    }
    return std::sqrt(rad);
}

double margrabe_price(const MarketState& state, double tau, const ModelParams& params) {
    state.validate();
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw ValidationError("tau must be >= 0");
    const double sigma = effective_vol(params);
    if (tau == 0.0 || sigma == 0.0) return std::max(state.s1 - state.s2, 0.0);
    const double v = sigma * std::sqrt(tau);
    const double dp = std::log(state.s1 / state.s2) / v + 0.5 * v;
    return state.s1 * norm_cdf(dp) - state.s2 * norm_cdf(dp - v);
}

GreeksBundle margrabe_greeks(const MarketState& state, double tau, const ModelParams& params) {
    state.validate();
    const double sigma = effective_vol(params);
    if (!(tau > 0.0) || sigma == 0.0)
        throw DegenerateExpiryError("greeks need tau > 0 and sigma > 0 (tau=" + std::to_string(tau) +
                                    ", sigma=" + std::to_string(sigma) + ")");

    const double s1 = state.s1, s2 = state.s2;
    const double v = sigma * std::sqrt(tau);
    const double dp = std::log(s1 / s2) / v + 0.5 * v;
    const double dm = dp - v;
    const double pdf_p = norm_pdf(dp);
    const double pdf_m = pdf_p * (s1 / s2);  // s1 N'(d+) = s2 N'(d-)

    GreeksBundle g{};
    g.delta1 = norm_cdf(dp);
    g.delta2 = -norm_cdf(dm);
    g.theta = sigma * s1 * pdf_p / (2.0 * std::sqrt(tau));  // dV/dtau, positive convention

    g.gamma11 = pdf_p / (s1 * v);
    g.gamma22 = pdf_m / (s2 * v);
    g.gamma12 = -pdf_p / (s2 * v);  // == -N'(d-)/(sigma s1 sqrt(tau))

    g.charm1 = -pdf_p * dm / (2.0 * tau);
    g.charm2 = pdf_m * dp / (2.0 * tau);

    g.speed111 = -(g.gamma11 / s1) * (1.0 + dp / v);
    g.speed222 = (g.gamma22 / s2) * (dm / v - 1.0);
    g.speed112 = dp * g.gamma11 / (s2 * v);
    g.speed221 = -dm * g.gamma22 / (s1 * v);
    g.speed122 = (g.gamma12 / s2) * (dp / v - 1.0);  // dGamma12/ds2, equals speed221

    const double bracket = dp * dm - 1.0;
    g.colour11 = g.gamma11 * bracket / (2.0 * tau);
    g.colour22 = g.gamma22 * bracket / (2.0 * tau);
    g.colour12 = g.gamma12 * bracket / (2.0 * tau);

    const double dp2 = dp * dp, dm2 = dm * dm;
    g.acc1111 = (g.gamma11 / (s1 * s1)) * (2.0 + 3.0 * dp / v + (dp2 - 1.0) / (v * v));
    g.acc1112 = -(g.gamma11 / (s1 * s2 * v)) * (dp + (dp2 - 1.0) / v);
    g.acc1122 = (g.gamma12 / (s1 * s2 * v)) * ((1.0 - dp2) / v + dp);
    g.acc1222 = (g.gamma22 / (s1 * s2 * v)) * (dm + (1.0 - dm2) / v);
    g.acc2222 = (g.gamma22 / (s2 * s2)) * (2.0 - 3.0 * dm / v + (dm2 - 1.0) / (v * v));
    return g;
}

}  // namespace flmm
