#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "hml/backend.hpp"
#include "hml/chi.hpp"
#include "hml/divisor.hpp"
#include "hml/errors.hpp"
#include "hml/smoothing.hpp"

namespace hml {

// Smoothed approximate functional equation for zeta^k, k in {1,2,3}:
//
//   zeta^k(s) ~ sum_m rho(m/x) d_k(m) m^{-s}
//             + chi^k(s) sum_m rho(m/y) d_k(m) m^{s-1},
//
// with x y = (t/2pi)^k.  The kernel support makes the truncation at 2x and
// 2y exact; no tail estimation is involved.
struct AfeSplit {
  int k = 1;
  double x = 1.0;
  double y = 1.0;
  double t = 0.0;
};

// y is derived from x so that x*y = (t/2pi)^k holds to the last rounding.
AfeSplit make_afe_split(int k, double t, double x);

// The splits used downstream:
//   k=1: x = y = (t/2pi)^{1/2}
//   k=2: x = 2 (t/2pi),       y = (1/2)(t/2pi)
//   k=3: x = 2 (t/2pi)^{3/2}, y = (1/2)(t/2pi)^{3/2}
AfeSplit default_afe_split(int k, double t);

// Shape of the two analytic error terms with unit constants,
//   t^{k(1-sigma)/3 - 1} + t^{k(1/2-sigma) - 2} y^sigma log^{k-1} t,
// used to normalize measured residuals.
double afe_error_budget(const AfeSplit& split, double sigma);

template <class R>
struct AfeParts {
  Cx<R> sum1;   // sum over m <= 2x of rho(m/x) d_k(m) m^{-s}
  Cx<R> sum2;   // sum over m <= 2y of rho(m/y) d_k(m) m^{s-1}
  Cx<R> chi_k;  // chi(s)^k
};

namespace detail {

inline void validate_afe(const AfeSplit& sp, double sigma, const DivisorTable& table) {
  if (sp.k < 1 || sp.k > 3) throw DomainError("zeta_power_afe: k must be 1, 2 or 3");
  if (!(sp.t >= 10.0)) throw DomainError("zeta_power_afe: t below validity floor 10");
  if (!(sigma >= 0.5 && sigma < 1.0)) throw DomainError("zeta_power_afe: sigma outside [1/2, 1)");
  if (!(sp.x >= 1.0 && sp.y >= 1.0)) throw DomainError("zeta_power_afe: need 1 <= x, y");
  double need = 2.0 * std::max(sp.x, sp.y);
  if (static_cast<double>(table.limit) < std::floor(need))
    throw TableTooSmallError("zeta_power_afe: table.limit < 2 max(x, y)");
}

inline std::uint64_t divisor_weight(const DivisorTable& table, int k, std::uint64_t m) {
  if (k == 1) return 1;
  if (k == 2) return table.d_at(m);
  return table.d3_at(m);
}

}  // namespace detail

// One smoothed Dirichlet piece: sum_{m <= 2L} rho(m/L) d_k(m) m^{a + i b}
// with fixed ascending-m order, so the value is independent of any caller
// side threading.
template <class R>
Cx<R> afe_smoothed_sum(const DivisorTable& table, int k, double length, const R& expo_re,
                       const R& expo_im, long wp,
                       const std::function<R(const R&, long)>& kernel) {
  using N_ = Num<R>;
  CxAccum<R> acc(wp);
  R len = N_::make(length, wp);
  std::uint64_t m_max = static_cast<std::uint64_t>(std::floor(2.0 * length));
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    R mr = N_::from_long(static_cast<long>(m), wp);
    R w = kernel(mr / len, wp);
    if (N_::to_double(w) == 0.0) continue;
    std::uint64_t dk = detail::divisor_weight(table, k, m);
    R lm = log(mr);
    R mag = exp(expo_re * lm) * w * N_::from_long(static_cast<long>(dk), wp);
    Cx<R> ph = cis(expo_im * lm);
    acc.add(ph * mag);
  }
  return acc.total();
}

template <class R>
AfeParts<R> zeta_power_afe_parts(const AfeSplit& sp, double sigma, const DivisorTable& table,
                                 const PrecisionContext& ctx,
                                 std::function<R(const R&, long)> kernel = {}) {
  using N_ = Num<R>;
  detail::validate_afe(sp, sigma, table);
  if (!kernel) kernel = [](const R& u, long bits) { return rho<R>(u, bits); };
  long wp = working_bits(ctx, (int)std::ceil(std::log2(2.0 + sp.t)) + 4);

  R sig = N_::make(sigma, wp);
  R tr = N_::make(sp.t, wp);
  AfeParts<R> out;
  // m^{-s} = m^{-sigma} e^{-i t log m}
  out.sum1 = afe_smoothed_sum<R>(table, sp.k, sp.x, -sig, -tr, wp, kernel);
  // m^{s-1} = m^{sigma-1} e^{+i t log m}
  R sm1 = sig - N_::make(1.0, wp);
  out.sum2 = afe_smoothed_sum<R>(table, sp.k, sp.y, sm1, tr, wp, kernel);

  Cx<R> s{sig, tr};
  Cx<R> chi = eval_chi<R>(s, ctx);
  Cx<R> acc = chi;
  for (int i = 1; i < sp.k; ++i) acc = acc * chi;
  out.chi_k = acc;
  return out;
}

template <class R>
Cx<R> zeta_power_afe(const AfeSplit& sp, double sigma, const DivisorTable& table,
                     const PrecisionContext& ctx,
                     std::function<R(const R&, long)> kernel = {}) {
  AfeParts<R> p = zeta_power_afe_parts<R>(sp, sigma, table, ctx, std::move(kernel));
  Cx<R> v = p.sum1 + p.chi_k * p.sum2;
  round_to_interface(v, ctx);
  return v;
}

}  // namespace hml
