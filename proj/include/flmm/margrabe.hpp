#pragma once

#include <string>

#include "flmm/errors.hpp"

namespace flmm {

struct ModelParams {
    double sigma1 = 0.4;  // vol of asset 1, per sqrt(year)
    double sigma2 = 0.2;  // vol of asset 2
    double rho = 0.5;     // correlation of the driving Brownians
    double r = 0.05;      // risk-free rate, per year

    void validate() const;
};

struct MarketState {
    double s1 = 0.0;  // illiquid asset
    double s2 = 0.0;  // liquid asset

    void validate() const;
};

// Every Margrabe sensitivity used by the impact model's effective coefficients.
// Index convention: digits name the differentiation directions, e.g.
// speed112 = d^3 V / ds1 ds1 ds2 and acc1222 = d^4 V / ds1 ds2^3.
// charm/colour/theta differentiate in tau = T - t.
struct GreeksBundle {
    double delta1, delta2;
    double theta;
    double gamma11, gamma22, gamma12;
    double charm1, charm2;
    double speed111, speed222, speed112, speed221, speed122;
    double colour11, colour22, colour12;
    double acc1111, acc1112, acc1122, acc1222, acc2222;
};

// sqrt(sigma1^2 + sigma2^2 - 2 sigma1 sigma2 rho); the exchange option's driving vol.
double effective_vol(const ModelParams& params);

// Closed-form exchange option value s1 N(d+) - s2 N(d-).
// tau = 0 or sigma = 0 returns the intrinsic value (s1 - s2)^+.
double margrabe_price(const MarketState& state, double tau, const ModelParams& params);

// Full ladder of sensitivities at (tau, s1, s2). Requires tau > 0 and sigma > 0;
// throws DegenerateExpiryError otherwise.
GreeksBundle margrabe_greeks(const MarketState& state, double tau, const ModelParams& params);

}  // namespace flmm
