#pragma once

#include "hml/mpreal.hpp"
#include "hml/precision.hpp"

namespace hml {

// b_k = B_{2k}/(2k)!, the scaled Bernoulli numbers driving every
// Euler-Maclaurin tail in this library. Computed as
//   b_k = (-1)^{k+1} * 2 * zeta(2k) / (2*pi)^{2k}
// and cached; the cache regrows when a higher precision or index is asked for.
// k ranges over 1..kBernoulliMax.
inline constexpr int kBernoulliMax = 320;

MpReal bernoulli_ratio(int k, mpfr_prec_t prec);

// c_k = B_{2k} / ((2k)(2k-1)) = b_k * (2k-2)!, the Stirling series coefficients.
MpReal stirling_coeff(int k, mpfr_prec_t prec);

struct Constants {
  MpReal euler_gamma;
  MpReal stieltjes_1;
  MpReal pi;
  MpReal log_2pi;
};

// Constants at the context's interface precision. gamma is computed by the
// Euler-Maclaurin harmonic series and cross-checked against mpfr's builtin;
// gamma_1 by the corresponding log-weighted series. Values are cached per
// precision.
Constants make_constants(const PrecisionContext& ctx);

// Native convenience (long double, full 64-bit mantissa accuracy).
long double euler_gamma_ld();
long double stieltjes_1_ld();

}  // namespace hml
