#pragma once

#include <cmath>

#include "hml/backend.hpp"
#include "hml/complex.hpp"
#include "hml/errors.hpp"
#include "hml/loggamma.hpp"
#include "hml/precision.hpp"
#include "hml/zeta.hpp"

namespace hml {

inline void sin_cos_pair(long double& s, long double& c, const long double& x) {
  sincosl(x, &s, &c);
}
inline void sin_cos_pair(MpReal& s, MpReal& c, const MpReal& x) { sin_cos(s, c, x); }

// log sin(z), stable for large |Im z| where sin overflows:
//   Im z >> 0:  sin z = (i/2) e^{-iz} (1 - e^{2iz})
//   Im z << 0:  sin z = (-i/2) e^{iz} (1 - e^{-2iz})
template <class R>
Cx<R> log_sin(const Cx<R>& z, int wp) {
  using N = Num<R>;
  double y = to_plain_double(z.im);
  R ln2 = N::ln2(wp);
  R half_pi = N::pi(wp) * 0.5;
  Cx<R> one{N::make(1.0, wp), N::make(0.0, wp)};
  Cx<R> i_{N::make(0.0, wp), N::make(1.0, wp)};
  if (y > 1.0) {
    Cx<R> corr = clog(one - cexp(i_ * z * 2.0));
    return Cx<R>{corr.re + z.im - ln2, corr.im - z.re + half_pi};
  }
  if (y < -1.0) {
    Cx<R> corr = clog(one - cexp(i_ * z * (-2.0)));
    return Cx<R>{corr.re - z.im - ln2, corr.im + z.re - half_pi};
  }
  R sx = N::make(0.0, wp), cx = N::make(0.0, wp);
  sin_cos_pair(sx, cx, z.re);
  R ey = exp(z.im);
  R emy = N::make(1.0, wp) / ey;
  R ch = (ey + emy) * 0.5;
  R sh = (ey - emy) * 0.5;
  return clog(Cx<R>{sx * ch, cx * sh});
}

// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), the factor in
// zeta(s) = chi(s) zeta(1-s). Computed in log space; for sigma > 1/2 via
// chi(s) = 1/chi(1-s) so log Gamma always sees Re > 0.
template <class R>
Cx<R> log_chi_raw(Cx<R> s, int wp) {
  using N = Num<R>;
  if (to_plain_double(s.re) > 0.5) {
    Cx<R> one{N::make(1.0, wp), N::make(0.0, wp)};
    Cx<R> r = log_chi_raw<R>(one - s, wp);
    return Cx<R>{N::make(0.0, wp) - r.re, N::make(0.0, wp) - r.im};
  }
  R ln_pi = log(N::pi(wp));
  Cx<R> one{N::make(1.0, wp), N::make(0.0, wp)};
  Cx<R> acc = s * N::ln2(wp) + (s - one) * ln_pi;
  acc = acc + log_sin(s * (N::pi(wp) * 0.5), wp);
  acc = acc + eval_log_gamma<R>(one - s, wp);
  return acc;
}

template <class R>
Cx<R> eval_chi(Cx<R> s, const PrecisionContext& ctx) {
  using N = Num<R>;
  double sigma = to_plain_double(s.re);
  double t = to_plain_double(s.im);
  if (t == 0.0 && sigma == std::floor(sigma)) {
    if (sigma <= 0.0 && std::fmod(sigma, 2.0) == 0.0)
      return Cx<R>{N::make(0.0, ctx.prec_bits), N::make(0.0, ctx.prec_bits)};
    if (sigma >= 1.0 && std::fmod(sigma - 1.0, 2.0) == 0.0)
      throw DomainError("eval_chi: pole at odd positive integer");
  }
  int wp = N::is_native
               ? 64
               : working_bits(ctx, (int)std::ceil(std::log2(2.0 + std::fabs(t))) + 4);
  Cx<R> v = cexp(log_chi_raw<R>(s, wp));
  round_to_interface(v, ctx);
  return v;
}

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, continuous with
// theta(0) = 0; chi(1/2+it) = e^{-2 i theta(t)}.
template <class R>
R eval_theta(R t, const PrecisionContext& ctx) {
  using N = Num<R>;
  if (to_plain_double(t) < 0.0) throw DomainError("eval_theta: t < 0");
  int wp = N::is_native
               ? 64
               : working_bits(ctx, (int)std::ceil(std::log2(2.0 + to_plain_double(t))) + 4);
  Cx<R> z{N::make(0.25, wp), t * 0.5};
  Cx<R> lg = eval_log_gamma<R>(z, wp);
  R th = lg.im - t * 0.5 * log(N::pi(wp));
  round_to_interface(th, ctx);
  return th;
}

// Z(t) = e^{i theta(t)} zeta(1/2+it); real up to rounding.
template <class R>
R eval_Z(R t, const PrecisionContext& ctx) {
  using N = Num<R>;
  if (to_plain_double(t) < 0.0) throw DomainError("eval_Z: t < 0");
  int wp = N::is_native
               ? 64
               : std::min<int>(PrecisionContext::kMaxBits,
                               working_bits(ctx, (int)std::ceil(std::log2(2.0 + to_plain_double(t))) + 4));
  PrecisionContext wctx(wp);
  Cx<R> s{N::make(0.5, wp), t};
  Cx<R> zv = eval_zeta<R>(s, wctx);
  Cx<R> z = cis(eval_theta<R>(t, wctx)) * zv;
  // residue tolerance eps(ctx) * (1+t), evaluated in R to survive huge prec
  R tol = (N::is_native ? N::exp2i(-48, wp)
                        : N::exp2i(-(long)ctx.prec_bits + PrecisionContext::kGuardBits, wp)) *
          (1.0 + to_plain_double(t));
  R scale = fabs(z.re) + 1.0;
  if (fabs(z.im) > tol * scale)
    throw ImaginaryResidueError("eval_Z: imaginary residue exceeds tolerance");
  R out = z.re;
  round_to_interface(out, ctx);
  return out;
}

// chi^alpha on the critical line: e^{-2 i alpha theta(t)}, the continuous
// branch with value 1 at theta = 0.
template <class R>
Cx<R> eval_chi_power(R t, R alpha, const PrecisionContext& ctx) {
  double a = to_plain_double(alpha);
  if (!(std::fabs(a) <= 1.0)) throw DomainError("eval_chi_power: |alpha| > 1");
  if (to_plain_double(t) < 1.0) throw DomainError("eval_chi_power: t < 1");
  using N = Num<R>;
  int wp = N::is_native
               ? 64
               : std::min<int>(PrecisionContext::kMaxBits,
                               working_bits(ctx, (int)std::ceil(std::log2(2.0 + to_plain_double(t))) + 4));
  PrecisionContext wctx(wp);
  R th = eval_theta<R>(t, wctx);
  Cx<R> v = cis(alpha * th * (-2.0));
  round_to_interface(v, ctx);
  return v;
}

// Native helper for quadrature integrands.
inline long double theta_ld(long double t) {
  Cx<long double> lg = eval_log_gamma<long double>(Cx<long double>{0.25L, t * 0.5L}, 64);
  return lg.im - t * 0.5L * 1.1447298858494001741434273513530587116L;
}

}  // namespace hml
