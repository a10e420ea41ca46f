#pragma once

#include <string>

#include "hml/complex.hpp"
#include "hml/divisor.hpp"
#include "hml/errors.hpp"

namespace hml {

// Verification experiments: each mean-value statement's left-hand side is
// computed by quadrature or exact summation, compared against its predicted
// main term, and normalized by the stated error-bound shape with unit
// constant.  Ratios are reported, never asserted here; thresholds live in the
// test layer.
enum class MomentKind {
  TH1,            // int_0^T Z zeta dt vs (2 sqrt2 pi/3) e^{i pi/8} (T/2pi)^{3/4} (...)
  TH2,            // exact exponential-sum identity, both sides finite sums
  TH3,            // int_0^T Z^2 zeta dt vs T (log^2 main term)
  TH4,            // int_T^{2T} Z^3 chi^alpha dt, bound-only
  HARDY_Z,        // int_0^T Z dt, bound-only T^{1/4+eps}
  SECOND_MOMENT,  // int_0^T Z^2 dt vs T log T + (2 gamma - 1 - log 2pi) T
  Z3_DYADIC,      // int_T^{2T} Z^3 dt vs 2 pi sqrt(2/3) sum d_3(n) n^{-1/6} cos(...)
  J_DYADIC,       // int_T^{2T} Z zeta dt vs 2 sqrt2 pi e^{i pi/8} sum' (-1)^k d(k) sqrt k
  I_DYADIC,       // int_T^{2T} Z^2 zeta dt vs 2 pi sum' d_3(k)
  S1_BOUND,       // sum_{T1<=n<=2T1} d_3(n) e^{2 pi i c n^delta} vs triple-sum bound
};

const char* kind_name(MomentKind kind);
MomentKind kind_from_name(const std::string& name);  // UnknownKindError

// T doubles as N for TH2 and T1 for S1_BOUND.  A is TH2's amplitude
// parameter; for S1_BOUND it carries the phase constant c.  alpha is TH4's
// chi exponent; for S1_BOUND the phase exponent is delta = 1/(3/2 - alpha).
struct MomentSpec {
  MomentKind kind = MomentKind::TH1;
  double T = 0.0;
  double A = 1.0;
  double alpha = 0.0;
  double eps_slack = 0.05;
};

struct MomentReport {
  MomentSpec spec;
  Cx<double> lhs{0.0, 0.0};
  Cx<double> main{0.0, 0.0};
  double residual = 0.0;  // |lhs - main|
  double bound = 0.0;     // error-term shape, unit constant
  double ratio = 0.0;     // residual / bound
  long runtime_ms = 0;
  int prec_bits = 0;
  double err_est = 0.0;   // summed quadrature error estimate (0 for exact sums)
  bool converged = true;
  bool halved_endpoint = false;  // a window endpoint hit an integer
};

struct MomentDeps {
  const DivisorTable* table = nullptr;
  int prec_bits = 64;  // native quadrature path reports 64; TH2 runs at >= 128
  double tol = 0.0;    // quadrature tolerance; <= 0 selects the engine default
};

MomentReport verify_theorem1(double T, const MomentDeps& deps);
MomentReport verify_J_dyadic(double T, const MomentDeps& deps);
MomentReport verify_theorem2(long N, double A, const MomentDeps& deps);
MomentReport verify_theorem3(double T, const MomentDeps& deps);
MomentReport verify_I_dyadic(double T, const MomentDeps& deps);
MomentReport verify_theorem4(double T, double alpha, const MomentDeps& deps);
MomentReport verify_hardy_and_calibrations(MomentKind kind, double T, const MomentDeps& deps);
MomentReport check_S1_bound(long T1, double delta, double c, const DivisorTable& table);

// Dispatch a MomentSpec to the operation above; validates kind-specific
// parameter presence.
MomentReport run_moment(const MomentSpec& spec, const MomentDeps& deps);

namespace detail {

// TH2 left-hand side at wp bits, optionally summed in reverse order
// (deterministic-summation audit hook).
Cx<double> th2_lhs_sum(long N, double A, const DivisorTable& table, long wp, bool reversed);

// sum' of d_3 over [lo, hi] with half weight at integral endpoints.
double d3_window_halved(const DivisorTable& table, double lo, double hi, bool* halved);

}  // namespace detail

}  // namespace hml
