#include "hml/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "hml/backend.hpp"
#include "hml/errors.hpp"

namespace hml {

namespace {

struct BernoulliCache {
  std::mutex mu;
  mpfr_prec_t prec = 0;
  std::vector<MpReal> ratios;  // ratios[k-1] = b_k
};

BernoulliCache& bcache() {
  static BernoulliCache c;
  return c;
}

void rebuild_ratios(BernoulliCache& c, int count, mpfr_prec_t prec) {
  c.ratios.clear();
  c.ratios.reserve(count);
  c.prec = prec;
  MpReal two_pi = mp_pi(prec) * 2.0;
  MpReal inv_tp2 = MpReal(1.0, prec) / (two_pi * two_pi);
  MpReal pw(1.0, prec);
  for (int k = 1; k <= count; ++k) {
    pw = pw * inv_tp2;  // (2pi)^{-2k}
    MpReal z = mp_zeta_ui(2 * (unsigned long)k, prec);
    MpReal b = z * pw * 2.0;
    if (k % 2 == 0) b = MpReal(0.0, prec) - b;
    c.ratios.push_back(b);
  }
}

}  // namespace

MpReal bernoulli_ratio(int k, mpfr_prec_t prec) {
  if (k < 1 || k > kBernoulliMax)
    throw CapacityError("bernoulli_ratio: k out of range 1..320");
  auto& c = bcache();
  std::lock_guard<std::mutex> lock(c.mu);
  mpfr_prec_t want = std::max<mpfr_prec_t>(448, ((prec + 63) / 64 + 1) * 64);
  if (c.prec < want || (int)c.ratios.size() < k) {
    int count = std::max<int>({64, k + 16, (int)c.ratios.size()});
    count = std::min(count, kBernoulliMax);
    rebuild_ratios(c, count, std::max(c.prec, want));
  }
  return c.ratios[k - 1];
}

MpReal stirling_coeff(int k, mpfr_prec_t prec) {
  MpReal b = bernoulli_ratio(k, prec);
  if (k == 1) return b;  // (2k-2)! = 1
  MpReal f = mp_factorial(2 * (unsigned long)k - 2, b.prec());
  return b * f;
}

namespace {

// gamma = H_N - log N - 1/(2N) + sum_j b_j (2j-1)! N^{-2j} + R,
// |R| of the order of the first omitted term.
MpReal euler_gamma_em(mpfr_prec_t wp) {
  long N = std::max<long>(
      24, std::max<long>((long)(0.17 * (double)wp) + 12,
                         (long)(35.2 * std::exp2((double)(wp + 8) / 600.0)) + 8));
  MpReal H(0.0, wp);
  for (long k = 1; k <= N; ++k) H = H + MpReal(1.0, wp) / MpReal(k, wp);
  MpReal Nr(N, wp);
  MpReal acc = H - log(Nr) - MpReal(0.5, wp) / Nr;
  MpReal invN2 = MpReal(1.0, wp) / (Nr * Nr);
  MpReal pw(1.0, wp);
  MpReal fac(1.0, wp);  // (2j-1)!
  MpReal thresh = ldexp(MpReal(1.0, wp), -(long)wp - 6);
  for (int j = 1; j <= kBernoulliMax; ++j) {
    pw = pw * invN2;
    if (j > 1) fac = fac * MpReal((2 * j - 2) * (long)(2 * j - 1), wp);
    MpReal term = bernoulli_ratio(j, wp) * fac * pw;
    acc = acc + term;
    if (fabs(term) < thresh) break;
    if (j == kBernoulliMax) throw PrecisionExhaustedError("euler_gamma_em: tail did not converge");
  }
  return acc;
}

// gamma_1 = sum_{k<=N} log k/k - log^2 N/2 - log N/(2N)
//           + sum_j b_j (2j-1)! (log N - H_{2j-1}) N^{-2j} + R.
MpReal stieltjes_1_em(mpfr_prec_t wp) {
  long N = std::max<long>(
      24, std::max<long>((long)(0.17 * (double)wp) + 12,
                         (long)(35.2 * std::exp2((double)(wp + 8) / 600.0)) + 8));
  MpReal S(0.0, wp);
  for (long k = 2; k <= N; ++k) {
    MpReal kr(k, wp);
    S = S + log(kr) / kr;
  }
  MpReal Nr(N, wp);
  MpReal lnN = log(Nr);
  MpReal acc = S - lnN * lnN * 0.5 - lnN / (Nr * 2.0);
  MpReal invN2 = MpReal(1.0, wp) / (Nr * Nr);
  MpReal pw(1.0, wp);
  MpReal fac(1.0, wp);
  MpReal Hodd(1.0, wp);  // H_{2j-1}
  MpReal thresh = ldexp(MpReal(1.0, wp), -(long)wp - 6);
  for (int j = 1; j <= kBernoulliMax; ++j) {
    pw = pw * invN2;
    if (j > 1) {
      fac = fac * MpReal((2 * j - 2) * (long)(2 * j - 1), wp);
      Hodd = Hodd + MpReal(1.0, wp) / MpReal((long)(2 * j - 2), wp) +
             MpReal(1.0, wp) / MpReal((long)(2 * j - 1), wp);
    }
    MpReal term = bernoulli_ratio(j, wp) * fac * (lnN - Hodd) * pw;
    acc = acc + term;
    if (fabs(term) < thresh) break;
    if (j == kBernoulliMax) throw PrecisionExhaustedError("stieltjes_1_em: tail did not converge");
  }
  return acc;
}

struct ConstCacheEntry {
  MpReal gamma, g1, pi, log_2pi;
};

std::mutex g_const_mu;
std::map<int, ConstCacheEntry>& const_cache() {
  static std::map<int, ConstCacheEntry> m;
  return m;
}

}  // namespace

Constants make_constants(const PrecisionContext& ctx) {
  std::lock_guard<std::mutex> lock(g_const_mu);
  auto& m = const_cache();
  auto it = m.find(ctx.prec_bits);
  if (it == m.end()) {
    mpfr_prec_t wp = ctx.prec_bits + 24;
    MpReal g = euler_gamma_em(wp);
    MpReal g_ref = mp_euler(wp);
    if (fabs(g - g_ref) > ldexp(MpReal(1.0, wp), -(long)ctx.prec_bits - 8))
      throw PrecisionExhaustedError("make_constants: gamma series disagrees with builtin");
    ConstCacheEntry e{at_interface(g, ctx), at_interface(stieltjes_1_em(wp), ctx),
                      at_interface(mp_pi(wp), ctx), at_interface(log(mp_pi(wp) * 2.0), ctx)};
    it = m.emplace(ctx.prec_bits, std::move(e)).first;
  }
  return Constants{it->second.gamma, it->second.g1, it->second.pi, it->second.log_2pi};
}

long double euler_gamma_ld() {
  static const long double v = [] {
    return make_constants(PrecisionContext(96)).euler_gamma.to_long_double();
  }();
  return v;
}

long double stieltjes_1_ld() {
  static const long double v = [] {
    return make_constants(PrecisionContext(96)).stieltjes_1.to_long_double();
  }();
  return v;
}

}  // namespace hml
