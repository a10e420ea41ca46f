#pragma once

#include <cmath>
#include <vector>

#include "hml/backend.hpp"
#include "hml/complex.hpp"
#include "hml/constants.hpp"
#include "hml/errors.hpp"
#include "hml/precision.hpp"

namespace hml {

template <class R>
R bernoulli_b(int k, int wp);

template <>
inline long double bernoulli_b<long double>(int k, int) {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(64);
    for (int i = 1; i <= 63; ++i) t[i] = bernoulli_ratio(i, 128).to_long_double();
    return t;
  }();
  if (k < 1 || k > 63) throw CapacityError("bernoulli_b: native k out of range");
  return table[k];
}

template <>
inline MpReal bernoulli_b<MpReal>(int k, int wp) {
  return bernoulli_ratio(k, wp);
}

// Euler-Maclaurin zeta:
//   zeta(s) = sum_{n<=N} n^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//             + sum_{j=1}^{J} b_j (s)_{2j-1} N^{-s-2j+1} + R_J,
// with the classical remainder bound
//   |R_J| <= |b_{J+1} (s)_{2J+1} N^{-s-2J-1}| * |s+2J+1|/(sigma+2J+1).
// The tail terms follow the recurrence P_{j+1} = P_j (s+2j-1)(s+2j) / N^2.
// N is sized so the geometric decay (|s|/(2 pi N))^2 per term reaches the
// target within j_cap terms; on failure N doubles (twice) before giving up.
template <class R>
Cx<R> zeta_em(const Cx<R>& s, int wp, double target_log2) {
  using N_ = Num<R>;
  double sigma = to_plain_double(s.re);
  double t_abs = std::fabs(to_plain_double(s.im));
  int j_target = N_::is_native ? 30 : std::min(300, std::max(16, wp / 4));
  int j_cap = N_::is_native ? 62 : kBernoulliMax - 1;
  double beta = std::exp((double)wp * 0.6931471805599453 / (2.0 * j_target));
  double n0 = std::max({16.0, 0.15 * wp + 4.0, 35.2 * std::exp2((double)(wp + 8) / 600.0),
                        beta / 6.283185307179586 * (t_abs + 2.0 * j_target + 4.0)});
  long N = (long)std::ceil(n0);

  R msig = N_::make(0.0, wp) - s.re;
  for (int attempt = 0;; ++attempt, N *= 2) {
    // main sum
    CxAccum<R> acc(wp);
    for (long n = 1; n <= N; ++n) {
      R ln_n = log(N_::from_long(n, wp));
      R amp = exp(ln_n * msig);
      Cx<R> ph = cis(s.im * ln_n);
      acc.add(Cx<R>{amp * ph.re, amp * (-1.0) * ph.im});
    }
    Cx<R> sum = acc.total();

    R lnN = log(N_::from_long(N, wp));
    // N^{-s}
    R ampN = exp(lnN * msig);
    Cx<R> phN = cis(s.im * lnN);
    Cx<R> N_ms{ampN * phN.re, ampN * (-1.0) * phN.im};
    Cx<R> one{N_::make(1.0, wp), N_::make(0.0, wp)};
    Cx<R> s_minus_1{s.re - 1.0, s.im};
    Cx<R> NR{N_::from_long(N, wp), N_::make(0.0, wp)};
    Cx<R> val = sum + N_ms * NR / s_minus_1 - N_ms * 0.5;

    // tail: P_1 = s N^{-s-1}
    Cx<R> P = s * N_ms / NR;
    R invN2 = N_::make(1.0, wp) / (N_::from_long(N, wp) * N_::from_long(N, wp));
    bool done = false;
    for (int j = 1; j <= j_cap; ++j) {
      val = val + P * bernoulli_b<R>(j, wp);
      Cx<R> f1{s.re + (double)(2 * j - 1), s.im};
      Cx<R> f2{s.re + (double)(2 * j), s.im};
      P = P * f1 * f2;
      P.re = P.re * invN2;
      P.im = P.im * invN2;
      // Backlund bound on R_j via the first omitted term
      double b_next = std::fabs(to_plain_double(bernoulli_b<R>(j + 1, wp)));
      double p_mag = std::hypot(to_plain_double(P.re), to_plain_double(P.im));
      double s2j = std::hypot(sigma + 2.0 * j + 1.0, t_abs);
      double bound = b_next * p_mag * s2j / (sigma + 2.0 * j + 1.0);
      double scale = 1.0 + std::hypot(to_plain_double(val.re), to_plain_double(val.im));
      if (bound <= std::exp2(target_log2) * scale || bound == 0.0) {
        done = true;
        break;
      }
    }
    if (done) return val;
    if (attempt >= 2)
      throw PrecisionExhaustedError("zeta_em: remainder bound did not reach target");
  }
}

// zeta(s) with absolute error <= eps(ctx) * (1 + |zeta(s)|).
template <class R>
Cx<R> eval_zeta(Cx<R> s, const PrecisionContext& ctx) {
  double sigma = to_plain_double(s.re);
  double t_abs = std::fabs(to_plain_double(s.im));
  if (sigma == 1.0 && to_plain_double(s.im) == 0.0)
    throw PoleAtOneError("eval_zeta: s = 1");
  if (t_abs > 1e7) throw OutOfRangeError("eval_zeta: |t| > 1e7");
  int wp = Num<R>::is_native
               ? 64
               : working_bits(ctx, (int)std::ceil(std::log2(2.0 + t_abs)));
  Cx<R> v = zeta_em<R>(s, wp, -(double)(Num<R>::is_native ? 60 : ctx.prec_bits + 8));
  round_to_interface(v, ctx);
  return v;
}

// Fast sigma = 1/2 evaluator for quadrature integrands. Tables of log n and
// n^{-1/2} are built once for t <= t_max; phases run through double sincos
// (the ~1e-16 per-term rounding is far below quadrature tolerances) and
// accumulate in long double.
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(double t_max);

  // zeta(1/2 + it), |error| ~ 1e-13 absolute for t up to ~3e4
  Cx<long double> zeta_half(long double t) const;

  double t_max() const { return t_max_; }

 private:
  double t_max_;
  long n_cap_;
  std::vector<double> ln_;     // ln_[n] = log n
  std::vector<double> rsqrt_;  // rsqrt_[n] = n^{-1/2}
};

}  // namespace hml
