#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hml/backend.hpp"
#include "hml/errors.hpp"
#include "hml/gauss_kronrod.hpp"

namespace hml {

template <class R>
struct QuadratureResult {
  Cx<R> value;
  double err_est = 0.0;
  bool converged = true;  // false encodes ToleranceNotMet; value still honest
  std::size_t panels = 0;
  std::size_t evals = 0;
};

// Default local phase rate (radians per unit t) for Z-type integrands:
// theta'(t) ~ (1/2) log(t/2pi), floored away from t = 0 and padded by 1.
inline double default_phase_rate(double t) {
  return 0.5 * std::log(std::max(t, 6.5) / 6.283185307179586476925286766559) + 1.0;
}

namespace detail {

inline bool sample_finite(const Cx<long double>& z) {
  return std::isfinite(z.re) && std::isfinite(z.im);
}
inline bool sample_finite(const Cx<MpReal>& z) {
  return z.re.is_finite() && z.im.is_finite();
}

}  // namespace detail

inline constexpr std::size_t kMaxQuadraturePanels = std::size_t(1) << 21;

// Adaptive complex quadrature for oscillatory integrands: initial panels hold
// at most a quarter oscillation of the estimated local phase, each panel uses
// the 15-point rule with the embedded 7-point difference as its error, and the
// worst panel is bisected until the summed error meets tol.  The reduction
// runs in ascending panel order, so the result is independent of refinement
// history and of any caller-side threading.
template <class R>
QuadratureResult<R> integrate_oscillatory(const std::function<Cx<R>(const R&)>& g,
                                          double t1, double t2, double tol,
                                          std::function<double(double)> rate = {},
                                          long wp = 64) {
  using N_ = Num<R>;
  if (!(t1 < t2)) throw DomainError("integrate_oscillatory: need t1 < t2");
  if (!(tol > 0.0)) tol = 1e-8 * std::sqrt(t2 - t1);
  if (!rate) rate = default_phase_rate;
  const double kPi = 3.141592653589793238462643383279;
  gk::GkNodes<R> nodes = gk::GkNodes<R>::make(wp);

  struct Panel {
    double a, b, err;
    Cx<R> val;
  };
  std::size_t evals = 0;

  auto eval_panel = [&](double a, double b) {
    R ra = N_::make(a, wp);
    R h = N_::make(b - a, wp);
    CxAccum<R> k15(wp), g7(wp);
    for (int i = 0; i < 15; ++i) {
      R x = ra + h * nodes.u[i];
      Cx<R> v = g(x);
      if (!detail::sample_finite(v))
        throw NonFiniteSampleError("integrate_oscillatory: non-finite sample");
      k15.add(v * nodes.wk[i]);
      if (i & 1) g7.add(v * nodes.wg[i / 2]);
    }
    evals += 15;
    R half = N_::make(0.5, wp);
    Cx<R> vk = k15.total() * (h * half);
    Cx<R> vg = g7.total() * (h * half);
    Cx<R> d{vk.re - vg.re, vk.im - vg.im};
    double err = std::hypot(N_::to_double(d.re), N_::to_double(d.im));
    return Panel{a, b, err, vk};
  };

  std::vector<Panel> heap;
  {
    double t = t1;
    while (t < t2) {
      double r0 = std::max(rate(t), 1e-3);
      double hg = kPi / (2.0 * r0);
      double r1 = std::max(rate(std::min(t2, t + hg)), r0);
      double h = std::min(kPi / (2.0 * r1), t2 - t);
      double b = (t + h >= t2 - 1e-15 * (t2 - t1)) ? t2 : t + h;
      heap.push_back(eval_panel(t, b));
      t = b;
    }
  }

  auto worse = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;  // max-heap on err
    return x.a > y.a;                          // deterministic tie-break
  };
  std::make_heap(heap.begin(), heap.end(), worse);
  double sum_err = 0.0;
  for (const Panel& p : heap) sum_err += p.err;

  const double min_width = 1e-14 * (t2 - t1);
  bool capped = false;
  while (sum_err > tol) {
    if (heap.size() >= kMaxQuadraturePanels) {
      capped = true;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel w = std::move(heap.back());
    heap.pop_back();
    if (w.b - w.a <= min_width || w.err == 0.0) {
      heap.push_back(std::move(w));
      std::push_heap(heap.begin(), heap.end(), worse);
      capped = true;
      break;
    }
    sum_err -= w.err;
    double mid = 0.5 * (w.a + w.b);
    Panel l = eval_panel(w.a, mid);
    Panel r = eval_panel(mid, w.b);
    sum_err += l.err + r.err;
    heap.push_back(std::move(l));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(std::move(r));
    std::push_heap(heap.begin(), heap.end(), worse);
  }

  std::sort(heap.begin(), heap.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CxAccum<R> total(wp);
  double err_est = 0.0, err_c = 0.0;
  for (const Panel& p : heap) {
    total.add(p.val);
    double y = p.err - err_c;
    double t = err_est + y;
    err_c = (t - err_est) - y;
    err_est = t;
  }
  QuadratureResult<R> out;
  out.value = total.total();
  out.err_est = err_est;
  out.converged = !capped && err_est <= tol * (1.0 + 1e-12);
  out.panels = heap.size();
  out.evals = evals;
  return out;
}

// Lemma-style first-derivative-test estimator.  All handles are plain double
// functions: the estimator predicts O(1)-scale main terms and error budgets,
// never high-precision values.
struct PhaseProblem {
  double a = 0.0, b = 0.0;
  std::function<double(double)> f, f1, f2, f3, f4;
  std::function<double(double)> phi, phi1, phi2;
  double H = 1.0;        // sup |phi|
  double A_scale = 1.0;  // f'' ~ 1/A_scale on [a,b]
  double U = 1.0;        // interval scale, b - a <= U
};

struct StationaryPhaseResult {
  Cx<double> main{0.0, 0.0};
  bool has_c = false;
  double c = 0.0;
  double error_budget = 0.0;
  bool halved = false;
};

StationaryPhaseResult stationary_phase(const PhaseProblem& p);

// Main-term predictions for the single-k smoothed integrals; k outside the
// resonance window returns 0 (not an error), mirroring the no-critical-point
// case of the estimator.
enum class AfeKind { J1, J2, JA1, JA2_first, JA2_second, I1_th3, I2_th3, I1_th4_alpha };

struct PredictParams {
  double T = 0.0;
  double A = 1.0;
  double alpha = 0.0;
};

Cx<double> predict_afe_integral(AfeKind kind, long k, const PredictParams& params);

}  // namespace hml
