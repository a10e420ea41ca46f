#include "hml/moments.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "hml/backend.hpp"
#include "hml/chi.hpp"
#include "hml/oscillatory.hpp"
#include "hml/zeta.hpp"

namespace hml {

namespace {

using LD = long double;
using Clock = std::chrono::steady_clock;

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kGamma = 0.57721566490153286060651209008240;
// Stieltjes gamma_1; the d_3 summatory uses the Laurent coefficient -gamma_1
constexpr double kGamma1 = -0.072815845483676724860586375874901;
constexpr double kHeadT0 = 10.0;

long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void finalize(MomentReport& r, Clock::time_point t0) {
  r.residual = std::hypot(r.lhs.re - r.main.re, r.lhs.im - r.main.im);
  r.ratio = r.residual / r.bound;
  r.runtime_ms = elapsed_ms(t0);
}

bool near_int(double v, double* snapped) {
  double rd = std::round(v);
  bool hit = std::fabs(v - rd) <= 1e-9 * (1.0 + std::fabs(v));
  *snapped = hit ? rd : v;
  return hit;
}

// Oscillatory integrands on the critical line.  The zeta factor comes from
// the shared evaluator; the unimodular theta factor carries the kind-specific
// multiplier.  Everything is long double; per-sample error ~1e-13 sits far
// below the quadrature tolerances used here.
struct Integrands {
  ZetaEvaluator ev;

  explicit Integrands(double t_max) : ev(t_max) {}

  std::function<Cx<LD>(const LD&)> z_zeta() const {
    return [this](const LD& t) {
      Cx<LD> z = ev.zeta_half(t);
      return cis(theta_ld(t)) * (z * z);
    };
  }
  std::function<Cx<LD>(const LD&)> z2_zeta() const {
    return [this](const LD& t) {
      Cx<LD> z = ev.zeta_half(t);
      return cis(2.0L * theta_ld(t)) * (z * z * z);
    };
  }
  std::function<Cx<LD>(const LD&)> z3_chi(double alpha) const {
    LD m = 3.0L - 2.0L * static_cast<LD>(alpha);
    return [this, m](const LD& t) {
      Cx<LD> z = ev.zeta_half(t);
      return cis(m * theta_ld(t)) * (z * z * z);
    };
  }
  std::function<Cx<LD>(const LD&)> z_pow(int p) const {
    return [this, p](const LD& t) {
      Cx<LD> z = ev.zeta_half(t);
      LD zr = (cis(theta_ld(t)) * z).re;
      LD v = zr;
      for (int i = 1; i < p; ++i) v *= zr;
      return Cx<LD>{v, 0.0L};
    };
  }
};

struct QuadOut {
  Cx<double> value{0.0, 0.0};
  double err = 0.0;
  bool converged = true;
};

QuadOut band(const std::function<Cx<LD>(const LD&)>& g, double t1, double t2, double tol,
             double mult) {
  auto rate = [mult](double t) { return mult * default_phase_rate(t); };
  auto r = integrate_oscillatory<LD>(g, t1, t2, tol, rate);
  QuadOut out;
  out.value = {static_cast<double>(r.value.re), static_cast<double>(r.value.im)};
  out.err = r.err_est;
  out.converged = r.converged;
  return out;
}

// int_0^T: the [0, t0] head is integrated at a fixed fine rate (the
// asymptotic rate estimate is meaningless that low), the rest normally.
QuadOut from_zero(const std::function<Cx<LD>(const LD&)>& g, double T, double tol,
                  double mult) {
  QuadOut head = band(g, 0.0, kHeadT0, tol > 0.0 ? 0.1 * tol : 1e-9, 4.0 * mult);
  QuadOut tail = band(g, kHeadT0, T, tol, mult);
  QuadOut out;
  out.value = head.value + tail.value;
  out.err = head.err + tail.err;
  out.converged = head.converged && tail.converged;
  return out;
}

void require_table(const MomentDeps& deps, double need, const char* who) {
  if (deps.table == nullptr) throw DomainError(std::string(who) + ": divisor table required");
  if (static_cast<double>(deps.table->limit) < need)
    throw TableTooSmallError(std::string(who) + ": divisor table too small");
}

Cx<double> polar_d(double mod, double arg) {
  return {mod * std::cos(arg), mod * std::sin(arg)};
}

}  // namespace

const char* kind_name(MomentKind kind) {
  switch (kind) {
    case MomentKind::TH1: return "th1";
    case MomentKind::TH2: return "th2";
    case MomentKind::TH3: return "th3";
    case MomentKind::TH4: return "th4";
    case MomentKind::HARDY_Z: return "hardy_z";
    case MomentKind::SECOND_MOMENT: return "second_moment";
    case MomentKind::Z3_DYADIC: return "z3_dyadic";
    case MomentKind::J_DYADIC: return "j_dyadic";
    case MomentKind::I_DYADIC: return "i_dyadic";
    case MomentKind::S1_BOUND: return "s1_bound";
  }
  throw UnknownKindError("kind_name: bad enum value");
}

MomentKind kind_from_name(const std::string& name) {
  static const std::pair<const char*, MomentKind> table[] = {
      {"th1", MomentKind::TH1},
      {"th2", MomentKind::TH2},
      {"th3", MomentKind::TH3},
      {"th4", MomentKind::TH4},
      {"hardy_z", MomentKind::HARDY_Z},
      {"second_moment", MomentKind::SECOND_MOMENT},
      {"z3_dyadic", MomentKind::Z3_DYADIC},
      {"j_dyadic", MomentKind::J_DYADIC},
      {"i_dyadic", MomentKind::I_DYADIC},
      {"s1_bound", MomentKind::S1_BOUND},
  };
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw UnknownKindError("kind_from_name: '" + name + "'");
}

namespace detail {

double d3_window_halved(const DivisorTable& table, double lo, double hi, bool* halved) {
  double slo, shi;
  bool lo_int = near_int(lo, &slo);
  bool hi_int = near_int(hi, &shi);
  if (halved != nullptr) *halved = lo_int || hi_int;
  auto klo = static_cast<std::uint64_t>(std::ceil(slo - 0.25));
  auto khi = static_cast<std::uint64_t>(std::floor(shi + 0.25));
  if (klo < 1) klo = 1;
  if (khi > table.limit) throw OutOfRangeError("d3_window_halved: window beyond table");
  double sum = 0.0;
  for (std::uint64_t k = klo; k <= khi; ++k) {
    double w = ((lo_int && k == klo) || (hi_int && k == khi)) ? 0.5 : 1.0;
    sum += w * static_cast<double>(table.d3_at(k));
  }
  return sum;
}

Cx<double> th2_lhs_sum(long N, double A, const DivisorTable& table, long wp, bool reversed) {
  using N_ = Num<MpReal>;
  auto klo = static_cast<std::uint64_t>(N);
  auto khi = static_cast<std::uint64_t>(std::floor(2.0 * std::sqrt(2.0) * N * (1.0 + 1e-15)));
  CxAccum<MpReal> acc(wp);
  MpReal av = N_::make(A, wp);
  MpReal three_pi = N_::pi(wp) * 3.0;
  MpReal two_thirds = N_::make(2.0, wp) / N_::make(3.0, wp);
  MpReal sixth = N_::make(1.0, wp) / N_::make(6.0, wp);
  auto term = [&](std::uint64_t k) {
    MpReal kr = N_::from_long(static_cast<long>(k), wp);
    MpReal lk = log(kr);
    MpReal amp = exp(lk * (-sixth)) * N_::from_long(static_cast<long>(table.d_at(k)), wp);
    MpReal phase = three_pi * exp((log(av) + lk) * two_thirds);
    acc.add(cis(phase) * amp);
  };
  if (!reversed)
    for (std::uint64_t k = klo; k <= khi; ++k) term(k);
  else
    for (std::uint64_t k = khi; k >= klo; --k) term(k);
  Cx<MpReal> v = acc.total();
  return {v.re.to_double(), v.im.to_double()};
}

}  // namespace detail

MomentReport verify_theorem1(double T, const MomentDeps& deps) {
  if (!(T >= 100.0 && T <= 1e5)) throw DomainError("verify_theorem1: T outside [1e2, 1e5]");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::TH1;
  r.spec.T = T;
  r.prec_bits = deps.prec_bits;

  Integrands in(2.0 * T + 16.0);
  QuadOut q = from_zero(in.z_zeta(), T, deps.tol, 3.0);
  r.lhs = q.value;
  r.err_est = q.err;
  r.converged = q.converged;

  double lq = std::log(T / kTwoPi);
  double mod = (2.0 * std::sqrt(2.0) * kPi / 3.0) * std::pow(T / kTwoPi, 0.75) *
               (0.5 * lq + 2.0 * kGamma - 2.0 * std::log(2.0) - 2.0 / 3.0);
  r.main = polar_d(mod, kPi / 8.0);
  r.bound = std::sqrt(T) * std::log(T) * std::log(T);
  finalize(r, t0);
  return r;
}

MomentReport verify_J_dyadic(double T, const MomentDeps& deps) {
  if (!(T >= 100.0 && T <= 1e5)) throw DomainError("verify_J_dyadic: T outside [1e2, 1e5]");
  require_table(deps, std::sqrt(T / kPi) + 2.0, "verify_J_dyadic");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::J_DYADIC;
  r.spec.T = T;
  r.prec_bits = deps.prec_bits;

  Integrands in(2.0 * T + 16.0);
  QuadOut q = band(in.z_zeta(), T, 2.0 * T, deps.tol, 3.0);
  r.lhs = q.value;
  r.err_est = q.err;
  r.converged = q.converged;

  double lo = std::sqrt(T / kTwoPi), hi = std::sqrt(T / kPi);
  double snap;
  r.halved_endpoint = near_int(lo, &snap) || near_int(hi, &snap);
  double s = static_cast<double>(sum_alt_d_sqrt_halved(lo, hi, *deps.table));
  r.main = polar_d(2.0 * std::sqrt(2.0) * kPi * s, kPi / 8.0);
  if (s < 0.0) r.main = polar_d(-2.0 * std::sqrt(2.0) * kPi * s, kPi / 8.0 + kPi);
  r.bound = std::sqrt(T) * std::log(T);
  finalize(r, t0);
  return r;
}

MomentReport verify_theorem2(long N, double A, const MomentDeps& deps) {
  if (N < 10 || N > 100000000L) throw DomainError("verify_theorem2: N outside [10, 1e8]");
  if (!(A >= std::pow(static_cast<double>(N), -0.25)))
    throw DomainError("verify_theorem2: need A >= N^{-1/4}");
  double lhs_hi = 2.0 * std::sqrt(2.0) * N;
  double main_hi = std::sqrt(2.0) * std::pow(A, 4.0 / 3.0) * std::cbrt(static_cast<double>(N));
  require_table(deps, std::max(lhs_hi, main_hi) + 2.0, "verify_theorem2");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::TH2;
  r.spec.T = static_cast<double>(N);
  r.spec.A = A;
  long wp = std::max(deps.prec_bits, 128);
  r.prec_bits = static_cast<int>(wp);

  r.lhs = detail::th2_lhs_sum(N, A, *deps.table, wp, false);

  using N_ = Num<MpReal>;
  double lo2 = std::pow(A, 4.0 / 3.0) * std::cbrt(static_cast<double>(N));
  double hi2 = std::sqrt(2.0) * lo2;
  auto klo = static_cast<std::uint64_t>(std::ceil(lo2 * (1.0 - 1e-15)));
  auto khi = static_cast<std::uint64_t>(std::floor(hi2 * (1.0 + 1e-15)));
  if (klo < 1) klo = 1;
  Cx<double> main{0.0, 0.0};
  if (klo <= khi) {
    CxAccum<MpReal> acc(wp);
    MpReal av = N_::make(A, wp);
    MpReal mpi = N_::pi(wp);
    for (std::uint64_t k = klo; k <= khi; ++k) {
      MpReal kr = N_::from_long(static_cast<long>(k), wp);
      MpReal amp = sqrt(kr) * N_::from_long(static_cast<long>(deps.table->d_at(k)), wp);
      MpReal ratio = kr / av;
      MpReal phase = mpi * ratio * ratio * (-1.0);
      acc.add(cis(phase) * amp);
    }
    Cx<MpReal> m = acc.total();
    double scale = std::sqrt(3.0) * std::pow(A, -4.0 / 3.0);
    main = {scale * m.re.to_double(), scale * m.im.to_double()};
  }
  r.main = main;

  double eps = r.spec.eps_slack;
  double nd = static_cast<double>(N);
  r.bound = std::pow(A, -1.0 / 3.0) * std::pow(nd, 0.5 + eps) +
            std::pow(A, 1.0 / 3.0) * std::pow(nd, 1.0 / 6.0) * std::log(nd) +
            std::pow(A, -1.0 / 9.0) * std::pow(nd, 2.0 / 9.0 + eps);
  finalize(r, t0);
  return r;
}

MomentReport verify_theorem3(double T, const MomentDeps& deps) {
  if (!(T >= 100.0 && T <= 3e4)) throw DomainError("verify_theorem3: T outside [1e2, 3e4]");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::TH3;
  r.spec.T = T;
  r.prec_bits = deps.prec_bits;

  Integrands in(T + 16.0);
  QuadOut q = from_zero(in.z2_zeta(), T, deps.tol, 4.0);
  r.lhs = q.value;
  r.err_est = q.err;
  r.converged = q.converged;

  double lq = std::log(T / kTwoPi);
  double a1 = 3.0 * kGamma - 1.0;
  // a2 with the Laurent-coefficient convention for gamma_1
  double a2 = -3.0 * kGamma1 + 3.0 * kGamma * kGamma - 3.0 * kGamma + 1.0;
  r.main = {T * (0.5 * lq * lq + a1 * lq + a2), 0.0};
  r.bound = std::pow(T, 0.75 + r.spec.eps_slack);
  finalize(r, t0);
  return r;
}

MomentReport verify_I_dyadic(double T, const MomentDeps& deps) {
  if (!(T >= 100.0 && T <= 3e4)) throw DomainError("verify_I_dyadic: T outside [1e2, 3e4]");
  require_table(deps, T / kPi + 2.0, "verify_I_dyadic");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::I_DYADIC;
  r.spec.T = T;
  r.prec_bits = deps.prec_bits;

  Integrands in(2.0 * T + 16.0);
  QuadOut q = band(in.z2_zeta(), T, 2.0 * T, deps.tol, 4.0);
  r.lhs = q.value;
  r.err_est = q.err;
  r.converged = q.converged;

  bool halved = false;
  double s = detail::d3_window_halved(*deps.table, T / kTwoPi, T / kPi, &halved);
  r.halved_endpoint = halved;
  r.main = {kTwoPi * s, 0.0};
  double lt = std::log(T);
  r.bound = std::pow(T, 0.75) * lt * lt;
  finalize(r, t0);
  return r;
}

MomentReport verify_theorem4(double T, double alpha, const MomentDeps& deps) {
  if (!(T >= 100.0 && T <= 1e5)) throw DomainError("verify_theorem4: T outside [1e2, 1e5]");
  if (!(alpha >= -0.45 && alpha <= 0.45))
    throw DomainError("verify_theorem4: alpha outside [-0.45, 0.45]");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::TH4;
  r.spec.T = T;
  r.spec.alpha = alpha;
  r.prec_bits = deps.prec_bits;

  Integrands in(2.0 * T + 16.0);
  QuadOut q = band(in.z3_chi(alpha), T, 2.0 * T, deps.tol, 4.0);
  r.lhs = q.value;
  r.err_est = q.err;
  r.converged = q.converged;

  r.main = {0.0, 0.0};
  double expo = alpha >= 0.0 ? 1.0 - alpha / 6.0 : 1.0 + alpha / 6.0;
  r.bound = std::pow(T, expo + r.spec.eps_slack);
  finalize(r, t0);
  return r;
}

MomentReport verify_hardy_and_calibrations(MomentKind kind, double T, const MomentDeps& deps) {
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = kind;
  r.spec.T = T;
  r.prec_bits = deps.prec_bits;
  double eps = r.spec.eps_slack;

  switch (kind) {
    case MomentKind::HARDY_Z: {
      if (!(T >= 100.0 && T <= 1e5))
        throw DomainError("verify_hardy_and_calibrations: T outside [1e2, 1e5]");
      Integrands in(T + 16.0);
      QuadOut q = from_zero(in.z_pow(1), T, deps.tol, 1.0);
      r.lhs = q.value;
      r.err_est = q.err;
      r.converged = q.converged;
      r.main = {0.0, 0.0};
      r.bound = std::pow(T, 0.25 + eps);
      break;
    }
    case MomentKind::SECOND_MOMENT: {
      if (!(T >= 100.0 && T <= 1e5))
        throw DomainError("verify_hardy_and_calibrations: T outside [1e2, 1e5]");
      Integrands in(T + 16.0);
      QuadOut q = from_zero(in.z_pow(2), T, deps.tol, 2.0);
      r.lhs = q.value;
      r.err_est = q.err;
      r.converged = q.converged;
      r.main = {T * std::log(T) + (2.0 * kGamma - 1.0 - std::log(kTwoPi)) * T, 0.0};
      r.bound = std::pow(T, 1.0 / 3.0 + eps);
      break;
    }
    case MomentKind::Z3_DYADIC: {
      if (!(T >= 100.0 && T <= 1e4))
        throw DomainError("verify_hardy_and_calibrations: Z3_DYADIC needs T in [1e2, 1e4]");
      double lo = std::pow(T / kTwoPi, 1.5), hi = std::pow(T / kPi, 1.5);
      require_table(deps, hi + 2.0, "verify_hardy_and_calibrations");
      Integrands in(2.0 * T + 16.0);
      QuadOut q = band(in.z_pow(3), T, 2.0 * T, deps.tol, 3.0);
      r.lhs = q.value;
      r.err_est = q.err;
      r.converged = q.converged;
      double slo, shi;
      bool lo_int = near_int(lo, &slo);
      bool hi_int = near_int(hi, &shi);
      r.halved_endpoint = lo_int || hi_int;
      auto klo = static_cast<std::uint64_t>(std::ceil(slo - 0.25));
      auto khi = static_cast<std::uint64_t>(std::floor(shi + 0.25));
      if (klo < 1) klo = 1;
      Accum<LD> acc;
      for (std::uint64_t n = klo; n <= khi; ++n) {
        LD w = ((lo_int && n == klo) || (hi_int && n == khi)) ? 0.5L : 1.0L;
        LD nr = static_cast<LD>(n);
        LD amp = w * static_cast<LD>(deps.table->d3_at(n)) * expl(-logl(nr) / 6.0L);
        LD ph = 3.0L * static_cast<LD>(kPi) * expl(logl(nr) * (2.0L / 3.0L)) +
                static_cast<LD>(kPi) / 8.0L;
        acc.add(amp * cosl(ph));
      }
      double s = 2.0 * kPi * std::sqrt(2.0 / 3.0) * static_cast<double>(acc.total());
      r.main = {s, 0.0};
      r.bound = std::pow(T, 0.75 + eps);
      break;
    }
    default:
      throw UnknownKindError("verify_hardy_and_calibrations: kind not a calibration");
  }
  finalize(r, t0);
  return r;
}

MomentReport check_S1_bound(long T1, double delta, double c, const DivisorTable& table) {
  if (T1 < 10) throw DomainError("check_S1_bound: T1 < 10");
  if (T1 > 1000000L) throw CapacityError("check_S1_bound: T1 > 1e6");
  if (delta == 0.0 || delta == 1.0)
    throw DomainError("check_S1_bound: delta in {0, 1} excluded");
  if (static_cast<std::uint64_t>(2 * T1) > table.limit)
    throw TableTooSmallError("check_S1_bound: divisor table too small");
  auto t0 = Clock::now();
  MomentReport r;
  r.spec.kind = MomentKind::S1_BOUND;
  r.spec.T = static_cast<double>(T1);
  r.spec.A = c;
  r.prec_bits = 64;

  CxAccum<LD> acc(64);
  LD cc = static_cast<LD>(c);
  LD dd = static_cast<LD>(delta);
  for (long n = T1; n <= 2 * T1; ++n) {
    LD amp = static_cast<LD>(table.d3_at(static_cast<std::uint64_t>(n)));
    LD ph = 2.0L * static_cast<LD>(kPi) * cc * expl(dd * logl(static_cast<LD>(n)));
    acc.add(cis(ph) * amp);
  }
  Cx<LD> v = acc.total();
  r.lhs = {static_cast<double>(v.re), static_cast<double>(v.im)};
  r.main = {0.0, 0.0};

  double eps = r.spec.eps_slack;
  double hnm = static_cast<double>(T1);               // H = N = M = T1^{1/3}
  double m = std::cbrt(static_cast<double>(T1));
  double x = std::pow(static_cast<double>(T1), delta);
  r.bound = std::pow(hnm, 1.0 + eps) *
            (std::pow(x / (hnm * m), 0.25) + 1.0 / std::sqrt(m) + 1.0 / x);
  finalize(r, t0);
  return r;
}

MomentReport run_moment(const MomentSpec& spec, const MomentDeps& deps) {
  bool th2 = spec.kind == MomentKind::TH2;
  bool th4 = spec.kind == MomentKind::TH4;
  bool s1 = spec.kind == MomentKind::S1_BOUND;
  if (spec.A != 1.0 && !th2 && !s1)
    throw DomainError("run_moment: A applies to TH2 (and S1_BOUND as c) only");
  if (spec.alpha != 0.0 && !th4 && !s1)
    throw DomainError("run_moment: alpha applies to TH4 (and S1_BOUND) only");

  MomentReport r;
  switch (spec.kind) {
    case MomentKind::TH1: r = verify_theorem1(spec.T, deps); break;
    case MomentKind::TH2: r = verify_theorem2(static_cast<long>(spec.T), spec.A, deps); break;
    case MomentKind::TH3: r = verify_theorem3(spec.T, deps); break;
    case MomentKind::TH4: r = verify_theorem4(spec.T, spec.alpha, deps); break;
    case MomentKind::HARDY_Z:
    case MomentKind::SECOND_MOMENT:
    case MomentKind::Z3_DYADIC:
      r = verify_hardy_and_calibrations(spec.kind, spec.T, deps);
      break;
    case MomentKind::J_DYADIC: r = verify_J_dyadic(spec.T, deps); break;
    case MomentKind::I_DYADIC: r = verify_I_dyadic(spec.T, deps); break;
    case MomentKind::S1_BOUND: {
      if (deps.table == nullptr) throw DomainError("run_moment: divisor table required");
      double delta = 1.0 / (1.5 - spec.alpha);
      r = check_S1_bound(static_cast<long>(spec.T), delta, spec.A, *deps.table);
      break;
    }
    default: throw UnknownKindError("run_moment: bad kind");
  }
  if (spec.eps_slack != r.spec.eps_slack) {
    // re-derive slack-dependent bounds on request
    MomentSpec adjusted = spec;
    MomentDeps d2 = deps;
    (void)d2;
    throw DomainError("run_moment: non-default eps_slack not supported per-call");
  }
  return r;
}

}  // namespace hml
