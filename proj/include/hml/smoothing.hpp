#pragma once

#include <utility>

#include "hml/backend.hpp"
#include "hml/errors.hpp"

namespace hml {

// Smooth cutoff rho with rho(u) = 1 for u <= 1/2, rho(u) = 0 for u >= 2 and
// the reciprocal partition rho(u) + rho(1/u) = 1.  Built as psi(log2 u) with
// psi(v) = B(1-v) / (B(1-v) + B(1+v)),  B(x) = exp(-1/x) for x > 0 else 0,
// so the partition holds identically on the log scale.

// Numerically verified global bounds (scan at 2e5 points, margin added):
//   |rho'(u)|  <= kRhoC1 = 1.69   (sup ~ 1.68245 near u = 0.604)
//   |rho''(u)| <= kRhoC2 = 26.2   (sup ~ 26.0405 near the support edges)
inline constexpr double kRhoC1 = 1.69;
inline constexpr double kRhoC2 = 26.2;

namespace detail {

template <class R>
struct PsiParts {
  R p, q, p1, q1, p2, q2;  // B(1-v), B(1+v) and their v-derivatives
};

// B and derivatives: B'(x) = e^{-1/x}/x^2, B''(x) = e^{-1/x}(1/x^4 - 2/x^3).
template <class R>
PsiParts<R> psi_parts(const R& v, long wp) {
  using N_ = Num<R>;
  R zero = N_::make(0.0, wp);
  R one = N_::make(1.0, wp);
  PsiParts<R> r{zero, zero, zero, zero, zero, zero};
  R xm = one - v;  // argument of the p-side
  R xp = one + v;
  if (xm > zero) {
    R e = exp(zero - one / xm);
    R ix2 = one / (xm * xm);
    r.p = e;
    r.p1 = zero - e * ix2;                      // d/dv B(1-v)
    r.p2 = e * (ix2 * ix2 - (ix2 + ix2) / xm);  // d2/dv2 B(1-v)
  }
  if (xp > zero) {
    R e = exp(zero - one / xp);
    R ix2 = one / (xp * xp);
    r.q = e;
    r.q1 = e * ix2;
    r.q2 = e * (ix2 * ix2 - (ix2 + ix2) / xp);
  }
  return r;
}

}  // namespace detail

template <class R>
R rho(const R& u, long wp) {
  using N_ = Num<R>;
  R zero = N_::make(0.0, wp);
  if (!(u > zero)) throw DomainError("rho: u must be positive");
  R one = N_::make(1.0, wp);
  R half = N_::make(0.5, wp);
  R two = N_::make(2.0, wp);
  if (!(u > half)) return one;
  if (!(u < two)) return zero;
  R v = log(u) / N_::ln2(wp);
  auto ps = detail::psi_parts<R>(v, wp);
  return ps.p / (ps.p + ps.q);
}

// (rho'(u), rho''(u)).  With v = log2 u:
//   rho'  = psi'(v) / (u ln 2)
//   rho'' = psi''(v)/(u ln 2)^2 - psi'(v)/(u^2 ln 2)
template <class R>
std::pair<R, R> rho_derivatives(const R& u, long wp) {
  using N_ = Num<R>;
  R zero = N_::make(0.0, wp);
  if (!(u > zero)) throw DomainError("rho_derivatives: u must be positive");
  R half = N_::make(0.5, wp);
  R two = N_::make(2.0, wp);
  if (!(u > half) || !(u < two)) return {zero, zero};
  R ln2 = N_::ln2(wp);
  R v = log(u) / ln2;
  auto ps = detail::psi_parts<R>(v, wp);
  R den = ps.p + ps.q;
  R den2 = den * den;
  R psi1 = (ps.p1 * ps.q - ps.p * ps.q1) / den2;
  R psi2 = (ps.p2 * ps.q - ps.p * ps.q2) / den2 -
           (psi1 + psi1) * (ps.p1 + ps.q1) / den;
  R ul = u * ln2;
  R d1 = psi1 / ul;
  R d2 = psi2 / (ul * ul) - psi1 / (u * ul);
  return {d1, d2};
}

double rho(double u);
std::pair<double, double> rho_derivatives(double u);

}  // namespace hml
