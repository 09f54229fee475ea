#pragma once

#include "flmm/margrabe.hpp"

namespace flmm {

struct ImpactParams {
    double epsilon = 0.04;  // price impact per share
    double beta = 100.0;    // decay constant of the impact near expiry
    double floor = 1e-8;    // trading floor: impact truncated to 0 outside [floor, cap]
    double cap = 1e8;
    double delta0 = 1e-6;   // regularity margin on 1 - lambda*Gamma11

    void validate() const;
};

// Truncated price impact: epsilon*(1 - exp(-beta*(T-t)^{3/2})) inside [floor, cap], else 0.
double lambda_bar(double t, double s1, double maturity, const ImpactParams& params);

// Risk-neutral drift/diffusion of the impacted market at (t, s1, s2).
// sig11/sig12 load asset 1 on the two driving Brownians, sig21/sig22 load asset 2.
struct EffectiveCoeffs {
    double mu1;    // r * s1
    double sig11;  // sigma1*s1 / (1 - lambda*Gamma11)
    double sig12;  // sigma2*s2*lambda*Gamma12 / (1 - lambda*Gamma11)
    double sig21;  // sigma2*s2*rho
    double sig22;  // sigma2*s2*sqrt(1-rho^2)
    double denom;  // 1 - lambda*Gamma11, guaranteed >= delta0
};

// First and second state-derivatives of the diffusion loadings.
// j1[i][l] = d sig1,(i+1) / d s_(l+1); t1[i][l][m] adds the second derivatives
// of asset 1's loadings (asset 2's loadings are linear in s2, so their seconds vanish).
struct CoeffJacobians {
    double j1[2][2];
    double j2[2][2];
    double t1[2][2][2];
};

EffectiveCoeffs effective_coeffs(double t, const MarketState& state, double maturity,
                                 const ModelParams& model, const ImpactParams& impact);
CoeffJacobians coeff_jacobians(double t, const MarketState& state, double maturity,
                               const ModelParams& model, const ImpactParams& impact);

namespace detail {

// Everything one Milstein/jacobian step needs at (t, s), evaluated in one pass.
struct StepCoeffs {
    double sig11, sig12, sig21, sig22;
    double j1[2][2];
    double j2[2][2];
    double t1[2][2][2];
    double denom;
};

// Per-time-step constants shared by every path at grid time t.
struct StepContext {
    double t;
    double tau;       // maturity - t
    double v;         // sigma * sqrt(tau)
    double lam_time;  // epsilon * (1 - exp(-beta*tau^{3/2})); band check is per-state
    double sigma1, sigma2, rho, q;  // q = sqrt(1-rho^2)
    double band_floor, band_cap, delta0;
};

StepContext make_step_context(double t, double maturity, const ModelParams& model,
                              const ImpactParams& impact, double sigma_eff);

// want_second controls whether t1 is filled (needed only for jacobian propagation).
StepCoeffs eval_step_coeffs(const StepContext& ctx, double s1, double s2, bool want_second);

}  // namespace detail
}  // namespace flmm
