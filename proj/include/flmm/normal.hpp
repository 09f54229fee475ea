#pragma once

#include <cmath>

namespace flmm {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2*pi)
inline constexpr double kSqrt2 = 1.4142135623730950488;

// Standard normal density.
inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Standard normal CDF via erfc; absolute error at the level of erfc itself (~1 ulp).
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

}  // namespace flmm
