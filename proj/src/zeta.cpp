#include "hml/zeta.hpp"

#include <cmath>

namespace hml {

ZetaEvaluator::ZetaEvaluator(double t_max) : t_max_(t_max) {
  if (!(t_max >= 0.0) || t_max > 1e7)
    throw DomainError("ZetaEvaluator: t_max outside [0, 1e7]");
  n_cap_ = (long)std::ceil(0.306 * (t_max + 72.0)) + 8;
  ln_.resize(n_cap_ + 1);
  rsqrt_.resize(n_cap_ + 1);
  for (long n = 1; n <= n_cap_; ++n) {
    ln_[n] = std::log((double)n);
    rsqrt_[n] = 1.0 / std::sqrt((double)n);
  }
}

Cx<long double> ZetaEvaluator::zeta_half(long double t) const {
  if (t < 0.0L) throw DomainError("ZetaEvaluator: t < 0");
  if ((double)t > t_max_ * (1.0 + 1e-12) + 1e-9)
    throw OutOfRangeError("ZetaEvaluator: t beyond t_max");
  long N = std::max(16L, (long)std::ceil(0.306 * ((double)t + 72.0)));
  if (N > n_cap_) N = n_cap_;

  double td = (double)t;
  long double re = 0.0L, im = 0.0L;
  for (long n = 1; n <= N; ++n) {
    double s_, c_;
    ::sincos(-td * ln_[n], &s_, &c_);
    re += rsqrt_[n] * c_;
    im += rsqrt_[n] * s_;
  }

  long double lnN = logl((long double)N);
  long double ampN = 1.0L / sqrtl((long double)N);
  long double sN, cN;
  sincosl(-t * lnN, &sN, &cN);
  Cx<long double> N_ms{ampN * cN, ampN * sN};  // N^{-s}
  Cx<long double> s{0.5L, t};
  Cx<long double> s_minus_1{-0.5L, t};
  long double Nld = (long double)N;
  Cx<long double> val{re, im};
  val = val + N_ms * Nld / s_minus_1 - N_ms * 0.5L;

  Cx<long double> P = s * N_ms / Nld;
  long double invN2 = 1.0L / (Nld * Nld);
  for (int j = 1; j <= 62; ++j) {
    val = val + P * bernoulli_b<long double>(j, 64);
    Cx<long double> f1{s.re + (long double)(2 * j - 1), s.im};
    Cx<long double> f2{s.re + (long double)(2 * j), s.im};
    P = P * f1 * f2;
    P.re *= invN2;
    P.im *= invN2;
    long double p_mag = hypotl(P.re, P.im);
    long double s2j = hypotl(0.5L + 2.0L * j + 1.0L, t);
    long double bound =
        fabsl(bernoulli_b<long double>(j + 1, 64)) * p_mag * s2j / (0.5L + 2.0L * j + 1.0L);
    if (bound <= 0x1p-48L * (1.0L + hypotl(val.re, val.im))) return val;
  }
  throw PrecisionExhaustedError("ZetaEvaluator: tail bound did not converge");
}

}  // namespace hml
