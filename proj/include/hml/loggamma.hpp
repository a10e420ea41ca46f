#pragma once

#include <array>
#include <cmath>

#include "hml/backend.hpp"
#include "hml/complex.hpp"
#include "hml/constants.hpp"
#include "hml/errors.hpp"

namespace hml {

template <class R>
R stirling_c(int k, int wp);

template <>
inline long double stirling_c<long double>(int k, int) {
  static const std::array<long double, 48> table = [] {
    std::array<long double, 48> t{};
    for (int i = 1; i <= 47; ++i) t[i] = stirling_coeff(i, 128).to_long_double();
    return t;
  }();
  if (k < 1 || k > 47) throw CapacityError("stirling_c: native k out of range");
  return table[k];
}

template <>
inline MpReal stirling_c<MpReal>(int k, int wp) {
  return stirling_coeff(k, wp);
}

// log2 upper bound on |c_k| without overflow, via zeta(2k) <= zeta(2):
// c_k = 2 zeta(2k) (2k-2)! / (2pi)^{2k}.
inline double stirling_log2(int k) {
  return 1.7181 + std::lgamma(2.0 * k - 1.0) / 0.6931471805599453 - 2.0 * k * 2.651496129472319;
}

// log Gamma(z) for Re z > 0, principal branch continuous off the negative
// axis. Stirling series
//   log Gamma(w) = (w - 1/2) log w - w + log(2 pi)/2 + sum_k c_k w^{1-2k},
// c_k = B_{2k}/((2k)(2k-1)), applied after shifting
//   log Gamma(z) = log Gamma(z+m) - sum_{j=0}^{m-1} log(z+j)
// until |z+m| clears the radius where the remainder bound
//   |R_J| <= |c_{J+1}| / (cos(arg(w)/2)^{2J+2} |w|^{2J+1})
// reaches the target.
template <class R>
Cx<R> eval_log_gamma(Cx<R> z, int wp) {
  using N = Num<R>;
  if (!(to_plain_double(z.re) > 0.0))
    throw DomainError("eval_log_gamma: requires Re z > 0");
  double z0 = std::max(1.45 * (0.111 * wp + 4.0),
                       35.2 * std::exp2((double)(wp + 8) / 600.0));
  Cx<R> shift_sum{N::make(0.0, wp), N::make(0.0, wp)};
  Cx<R> w = z;
  while (to_plain_double(abs(w)) < z0) {
    shift_sum = shift_sum + clog(w);
    w.re = w.re + 1.0;
  }
  Cx<R> lw = clog(w);
  Cx<R> half{N::make(0.5, wp), N::make(0.0, wp)};
  Cx<R> acc = (w - half) * lw - w;
  acc.re = acc.re + N::log_2pi(wp) * 0.5;
  Cx<R> one{N::make(1.0, wp), N::make(0.0, wp)};
  Cx<R> pw = one / w;  // w^{1-2k} at k=1
  Cx<R> inv_w2 = pw * pw;
  double aw = to_plain_double(abs(w));
  double cos_half = std::cos(0.5 * std::atan2(to_plain_double(w.im), to_plain_double(w.re)));
  double log2_aw = std::log2(aw);
  double log2_cos = std::log2(cos_half);
  double target = -(double)wp - 4 + log2_aw;  // absolute target eps*|w|
  int k_cap = N::is_native ? 46 : kBernoulliMax - 1;
  bool converged = false;
  for (int k = 1; k <= k_cap; ++k) {
    acc = acc + pw * stirling_c<R>(k, wp);
    pw = pw * inv_w2;
    double log2_rem = stirling_log2(k + 1) - (2 * k + 2) * log2_cos - (2 * k + 1) * log2_aw;
    if (log2_rem < target) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw PrecisionExhaustedError("eval_log_gamma: Stirling tail did not reach target");
  return acc - shift_sum;
}

}  // namespace hml
