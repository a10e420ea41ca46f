#include "hml/oscillatory.hpp"

#include <cmath>

#include "hml/smoothing.hpp"

namespace hml {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kSqrt2 = 1.414213562373095048801688724210;

Cx<double> cis_d(double ph) { return {std::cos(ph), std::sin(ph)}; }

double endpoint_term(const PhaseProblem& p, double x) {
  double d = std::fabs(p.f1(x));
  double cap = std::sqrt(p.A_scale);
  if (d == 0.0) return p.H * cap;
  return p.H * std::min(1.0 / d, cap);
}

}  // namespace

StationaryPhaseResult stationary_phase(const PhaseProblem& p) {
  if (!(p.a < p.b)) throw DomainError("stationary_phase: need a < b");
  if (!(p.H > 0.0) || !(p.A_scale > 0.0) || !(p.A_scale < p.U))
    throw DomainError("stationary_phase: need 0 < H and 0 < A_scale < U");
  if (p.b - p.a > p.U * (1.0 + 1e-12))
    throw DomainError("stationary_phase: need b - a <= U");
  if (!p.f || !p.f1 || !p.f2 || !p.phi)
    throw DomainError("stationary_phase: f, f', f'', phi handles required");

  // declared-shape validation: f'' one-signed and nonvanishing on [a,b]
  double sign2 = 0.0;
  for (int i = 0; i <= 32; ++i) {
    double x = p.a + (p.b - p.a) * i / 32.0;
    double v = p.f2(x);
    if (v == 0.0 || !std::isfinite(v))
      throw ConditionViolationError("stationary_phase: f'' vanishes on [a,b]");
    double s = v > 0.0 ? 1.0 : -1.0;
    if (sign2 == 0.0) sign2 = s;
    if (s != sign2)
      throw ConditionViolationError("stationary_phase: f'' changes sign on [a,b]");
  }

  StationaryPhaseResult out;
  out.error_budget =
      p.H * p.A_scale / p.U + endpoint_term(p, p.a) + endpoint_term(p, p.b);

  double fa = p.f1(p.a), fb = p.f1(p.b);
  double c = 0.0;
  bool halved = false;
  if (fa == 0.0) {
    c = p.a;
    halved = true;
  } else if (fb == 0.0) {
    c = p.b;
    halved = true;
  } else if ((fa > 0.0) == (fb > 0.0)) {
    return out;  // no stationary point: no main term
  } else {
    double lo = p.a, hi = p.b;
    double flo = fa;
    double width0 = hi - lo;
    for (int it = 0; it < 200 && hi - lo > std::ldexp(width0, -60); ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      double fm = p.f1(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    c = 0.5 * (lo + hi);
  }

  double f2c = p.f2(c);
  // (1+i)/sqrt2 for f'' > 0, conjugate branch for f'' < 0
  Cx<double> pref{1.0 / kSqrt2, (f2c > 0.0 ? 1.0 : -1.0) / kSqrt2};
  double amp = p.phi(c) / std::sqrt(std::fabs(f2c));
  Cx<double> m = pref * cis_d(2.0 * kPi * p.f(c)) * amp;
  if (halved) m = m * 0.5;
  out.main = m;
  out.has_c = true;
  out.c = c;
  out.halved = halved;
  return out;
}

Cx<double> predict_afe_integral(AfeKind kind, long k, const PredictParams& prm) {
  auto need_T = [&]() {
    if (!(prm.T > 0.0)) throw DomainError("predict_afe_integral: T must be positive");
  };
  auto need_A = [&]() {
    if (!(prm.A > 0.0)) throw DomainError("predict_afe_integral: A must be positive");
  };
  auto in_window = [&](double lo, double hi) {
    double kd = static_cast<double>(k);
    return kd >= lo - 1e-9 * (1.0 + std::fabs(lo)) &&
           kd <= hi + 1e-9 * (1.0 + std::fabs(hi));
  };
  const double kd = static_cast<double>(k);

  switch (kind) {
    case AfeKind::J2:
    case AfeKind::JA2_first:
    case AfeKind::I2_th3:
      return {0.0, 0.0};  // these integrals carry no main term

    case AfeKind::J1: {
      need_T();
      double lo = std::sqrt(prm.T / (2.0 * kPi)), hi = std::sqrt(prm.T / kPi);
      if (k < 1 || !in_window(lo, hi)) return {0.0, 0.0};
      double mag = 2.0 * kSqrt2 * kPi * kd * rho(1.0 / (2.0 * kd));
      if (k & 1) mag = -mag;
      return cis_d(kPi / 4.0) * mag;
    }
    case AfeKind::JA1: {
      need_T();
      need_A();
      double lo = prm.A * std::sqrt(prm.T / (2.0 * kPi));
      double hi = prm.A * std::sqrt(prm.T / kPi);
      if (k < 1 || !in_window(lo, hi)) return {0.0, 0.0};
      double q = kd / prm.A;
      double mag = 2.0 * kSqrt2 * kPi * q * rho(0.125);
      return cis_d(kPi / 4.0 - kPi * q * q) * mag;
    }
    case AfeKind::JA2_second: {
      need_T();
      need_A();
      double base = prm.T / (2.0 * kPi);
      double lo = base * std::sqrt(base) / prm.A;
      double hi = 2.0 * kSqrt2 * lo;  // ((T/pi)/(T/2pi))^{3/2} = 2 sqrt 2
      if (k < 1 || !in_window(lo, hi)) return {0.0, 0.0};
      double w = std::cbrt(prm.A * kd);
      double mag = 2.0 * kSqrt2 * kPi / std::sqrt(3.0) * w * rho(0.25);
      return cis_d(-kPi / 4.0 + 3.0 * kPi * w * w) * mag;
    }
    case AfeKind::I1_th3: {
      need_T();
      double lo = prm.T / (2.0 * kPi), hi = prm.T / kPi;
      if (k < 1 || !in_window(lo, hi)) return {0.0, 0.0};
      double sk = std::sqrt(kd);
      double mag = 2.0 * kPi * sk * rho(1.0 / (2.0 * sk));
      return cis_d(kPi / 4.0) * mag;  // e^{-2 pi i k} = 1 for integer k
    }
    case AfeKind::I1_th4_alpha: {
      need_T();
      if (!(prm.alpha > -0.5) || !(prm.alpha < 0.5))
        throw DomainError("predict_afe_integral: alpha outside (-1/2, 1/2)");
      double beta = 1.5 - prm.alpha;
      double lo = std::pow(prm.T / (2.0 * kPi), beta);
      double hi = std::pow(prm.T / kPi, beta);
      if (k < 1 || !in_window(lo, hi)) return {0.0, 0.0};
      double u = 0.5 * std::pow(kd, -prm.alpha / beta);
      double mag = 2.0 * kPi / std::sqrt(beta) * std::pow(kd, 0.5 / beta) * rho(u);
      return cis_d(kPi / 4.0 - 2.0 * kPi * beta * std::pow(kd, 1.0 / beta)) * mag;
    }
  }
  throw UnknownKindError("predict_afe_integral: unknown kind");
}

}  // namespace hml
