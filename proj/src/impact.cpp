#include "flmm/impact.hpp"

#include <cmath>
#include <cstring>

#include "flmm/normal.hpp"

namespace flmm {

void ImpactParams::validate() const {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw ValidationError("epsilon must be >= 0, got " + std::to_string(epsilon));
    if (!(beta > 0.0)) throw ValidationError("beta must be > 0, got " + std::to_string(beta));
    if (!(floor > 0.0 && cap > floor))
        throw ValidationError("need 0 < floor < cap, got floor=" + std::to_string(floor) +
                              " cap=" + std::to_string(cap));
    if (!(delta0 > 0.0 && delta0 < 1.0))
        throw ValidationError("delta0 must be in (0, 1), got " + std::to_string(delta0));
}

double lambda_bar(double t, double s1, double maturity, const ImpactParams& params) {
    params.validate();
    if (!(t >= 0.0 && t <= maturity)) throw ValidationError("need 0 <= t <= T");
    if (s1 < params.floor || s1 > params.cap) return 0.0;
    const double rem = maturity - t;
    return params.epsilon * (1.0 - std::exp(-params.beta * rem * std::sqrt(rem)));
}

namespace detail {

StepContext make_step_context(double t, double maturity, const ModelParams& model,
                              const ImpactParams& impact, double sigma_eff) {
    StepContext ctx;
    ctx.t = t;
    ctx.tau = maturity - t;
    ctx.v = sigma_eff * std::sqrt(ctx.tau);
    const double rem = ctx.tau;
    ctx.lam_time = impact.epsilon * (1.0 - std::exp(-impact.beta * rem * std::sqrt(rem)));
    ctx.sigma1 = model.sigma1;
    ctx.sigma2 = model.sigma2;
    ctx.rho = model.rho;
    ctx.q = std::sqrt(std::max(0.0, 1.0 - model.rho * model.rho));
    ctx.band_floor = impact.floor;
    ctx.band_cap = impact.cap;
    ctx.delta0 = impact.delta0;
    return ctx;
}

StepCoeffs eval_step_coeffs(const StepContext& ctx, double s1, double s2, bool want_second) {
    StepCoeffs c;
    std::memset(&c, 0, sizeof(c));
    c.sig21 = ctx.sigma2 * ctx.rho * s2;
    c.sig22 = ctx.sigma2 * ctx.q * s2;
    c.j2[0][1] = ctx.sigma2 * ctx.rho;
    c.j2[1][1] = ctx.sigma2 * ctx.q;

    const double lam = (s1 >= ctx.band_floor && s1 <= ctx.band_cap) ? ctx.lam_time : 0.0;
    if (lam == 0.0) {
        // Margrabe market: asset 1 is plain GBM on W1.
        c.sig11 = ctx.sigma1 * s1;
        c.sig12 = 0.0;
        c.j1[0][0] = ctx.sigma1;
        c.denom = 1.0;
        return c;
    }

    const double v = ctx.v;
    const double dp = std::log(s1 / s2) / v + 0.5 * v;
    const double dm = dp - v;
    const double pdf_p = norm_pdf(dp);
    const double g11 = pdf_p / (s1 * v);
    const double g12 = -pdf_p / (s2 * v);
    const double sp111 = -(g11 / s1) * (1.0 + dp / v);
    const double sp112 = dp * g11 / (s2 * v);
    const double sp122 = (g12 / s2) * (dp / v - 1.0);

    const double D = 1.0 - lam * g11;
    if (!(D >= ctx.delta0))
        throw RegularityError("regularity violated: 1 - lambda*Gamma11 = " + std::to_string(D) +
                              " < delta0 at t=" + std::to_string(ctx.t) + " s1=" + std::to_string(s1) +
                              " s2=" + std::to_string(s2),
                              ctx.t, s1, s2, D);
    const double iD = 1.0 / D;
    const double iD2 = iD * iD;

    // sig11 = P1/D, sig12 = P2/D with lambda flat in s inside the band.
    const double P1 = ctx.sigma1 * s1;
    const double P1_1 = ctx.sigma1;
    const double P2 = ctx.sigma2 * s2 * lam * g12;
    const double P2_1 = ctx.sigma2 * s2 * lam * sp112;
    const double P2_2 = ctx.sigma2 * lam * (g12 + s2 * sp122);
    const double D_1 = -lam * sp111;
    const double D_2 = -lam * sp112;

    c.sig11 = P1 * iD;
    c.sig12 = P2 * iD;
    c.denom = D;
    c.j1[0][0] = P1_1 * iD - P1 * D_1 * iD2;
    c.j1[0][1] = -P1 * D_2 * iD2;
    c.j1[1][0] = P2_1 * iD - P2 * D_1 * iD2;
    c.j1[1][1] = P2_2 * iD - P2 * D_2 * iD2;

    if (want_second) {
        const double pdf_m = pdf_p * (s1 / s2);
        const double g22 = pdf_m / (s2 * v);
        const double dp2 = dp * dp, dm2 = dm * dm;
        const double a1111 = (g11 / (s1 * s1)) * (2.0 + 3.0 * dp / v + (dp2 - 1.0) / (v * v));
        const double a1112 = -(g11 / (s1 * s2 * v)) * (dp + (dp2 - 1.0) / v);
        const double a1122 = (g12 / (s1 * s2 * v)) * ((1.0 - dp2) / v + dp);
        const double a1222 = (g22 / (s1 * s2 * v)) * (dm + (1.0 - dm2) / v);

        const double D_11 = -lam * a1111;
        const double D_12 = -lam * a1112;
        const double D_22 = -lam * a1122;
        const double P2_11 = ctx.sigma2 * s2 * lam * a1112;
        const double P2_12 = ctx.sigma2 * lam * (sp112 + s2 * a1122);
        const double P2_22 = ctx.sigma2 * lam * (2.0 * sp122 + s2 * a1222);
        const double iD3 = iD2 * iD;

        auto d2 = [&](double P, double Px, double Py, double Pxy, double Dx, double Dy, double Dxy) {
            return Pxy * iD - Px * Dy * iD2 - Py * Dx * iD2 - P * Dxy * iD2 + 2.0 * P * Dx * Dy * iD3;
        };
        c.t1[0][0][0] = d2(P1, P1_1, P1_1, 0.0, D_1, D_1, D_11);
        c.t1[0][0][1] = d2(P1, P1_1, 0.0, 0.0, D_1, D_2, D_12);
        c.t1[0][1][0] = c.t1[0][0][1];
        c.t1[0][1][1] = d2(P1, 0.0, 0.0, 0.0, D_2, D_2, D_22);
        c.t1[1][0][0] = d2(P2, P2_1, P2_1, P2_11, D_1, D_1, D_11);
        c.t1[1][0][1] = d2(P2, P2_1, P2_2, P2_12, D_1, D_2, D_12);
        c.t1[1][1][0] = c.t1[1][0][1];
        c.t1[1][1][1] = d2(P2, P2_2, P2_2, P2_22, D_2, D_2, D_22);
    }
    return c;
}

}  // namespace detail

EffectiveCoeffs effective_coeffs(double t, const MarketState& state, double maturity,
                                 const ModelParams& model, const ImpactParams& impact) {
    state.validate();
    model.validate();
    impact.validate();
    if (!(maturity - t > 0.0)) throw DegenerateExpiryError("effective_coeffs needs tau = T - t > 0");
    auto ctx = detail::make_step_context(t, maturity, model, impact, effective_vol(model));
    auto c = detail::eval_step_coeffs(ctx, state.s1, state.s2, false);
    return EffectiveCoeffs{model.r * state.s1, c.sig11, c.sig12, c.sig21, c.sig22, c.denom};
}

CoeffJacobians coeff_jacobians(double t, const MarketState& state, double maturity,
                               const ModelParams& model, const ImpactParams& impact) {
    state.validate();
    model.validate();
    impact.validate();
    if (!(maturity - t > 0.0)) throw DegenerateExpiryError("coeff_jacobians needs tau = T - t > 0");
    auto ctx = detail::make_step_context(t, maturity, model, impact, effective_vol(model));
    auto c = detail::eval_step_coeffs(ctx, state.s1, state.s2, true);
    CoeffJacobians out;
    std::memcpy(out.j1, c.j1, sizeof(out.j1));
    std::memcpy(out.j2, c.j2, sizeof(out.j2));
    std::memcpy(out.t1, c.t1, sizeof(out.t1));
    return out;
}

}  // namespace flmm
