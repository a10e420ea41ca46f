#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hml/zeta.hpp"
#include "oracles.hpp"

using namespace hml;

namespace {

double cx_dist(const Cx<MpReal>& a, const char* re, const char* im) {
  MpReal r(re, 256), i(im, 256);
  return hypot(a.re - r, a.im - i).to_double();
}

}  // namespace

TEST_CASE("zeta closed forms at 128 bits") {
  PrecisionContext ctx(128);
  Cx<MpReal> v2 = eval_zeta<MpReal>(Cx<MpReal>{MpReal(2.0, 128), MpReal(0.0, 128)}, ctx);
  MpReal pi = mp_pi(192);
  CHECK(fabs(v2.re - pi * pi / 6.0).to_double() < 1e-36);
  CHECK(fabs(v2.im).to_double() < 1e-36);

  Cx<MpReal> v0 = eval_zeta<MpReal>(Cx<MpReal>{MpReal(0.0, 128), MpReal(0.0, 128)}, ctx);
  CHECK(fabs(v0.re + 0.5).to_double() < 1e-36);

  Cx<MpReal> vh = eval_zeta<MpReal>(Cx<MpReal>{MpReal(0.5, 128), MpReal(0.0, 128)}, ctx);
  CHECK(fabs(vh.re - MpReal(oracle::kZetaHalf, 192)).to_double() < 1e-36);
}

TEST_CASE("zeta against independent oracles, mpfr backend") {
  PrecisionContext ctx(128);
  auto at = [&](const char* sig, const char* t) {
    return eval_zeta<MpReal>(Cx<MpReal>{MpReal(sig, 160), MpReal(t, 160)}, ctx);
  };
  CHECK(cx_dist(at("0.3", "5"), oracle::kZetaP3_5i_Re, oracle::kZetaP3_5i_Im) < 1e-34);
  CHECK(cx_dist(at("-1.5", "7.3"), oracle::kZetaM15_73i_Re, oracle::kZetaM15_73i_Im) < 1e-34);
  CHECK(cx_dist(at("0.5", "50"), oracle::kZetaHalf50i_Re, oracle::kZetaHalf50i_Im) < 1e-33);
  CHECK(cx_dist(at("0.5", "100"), oracle::kZetaHalf100i_Re, oracle::kZetaHalf100i_Im) < 1e-33);
  CHECK(cx_dist(at("0.5", "200"), oracle::kZetaHalf200i_Re, oracle::kZetaHalf200i_Im) < 1e-33);
  CHECK(cx_dist(at("0.5", "400"), oracle::kZetaHalf400i_Re, oracle::kZetaHalf400i_Im) < 1e-33);
  CHECK(cx_dist(at("0.5", "1000"), oracle::kZetaHalf1000i_Re, oracle::kZetaHalf1000i_Im) < 1e-32);
}

TEST_CASE("zeta vanishes at the first critical zero") {
  PrecisionContext ctx(128);
  MpReal t0(oracle::kFirstZeroT, 160);
  Cx<MpReal> v = eval_zeta<MpReal>(Cx<MpReal>{MpReal(0.5, 160), t0}, ctx);
  CHECK(hypot(v.re, v.im).to_double() < 1e-9);
}

TEST_CASE("pole and range errors") {
  PrecisionContext ctx(128);
  CHECK_THROWS_AS(
      eval_zeta<MpReal>(Cx<MpReal>{MpReal(1.0, 128), MpReal(0.0, 128)}, ctx),
      PoleAtOneError);
  CHECK_THROWS_AS(
      eval_zeta<MpReal>(Cx<MpReal>{MpReal(0.5, 128), MpReal(2e7, 128)}, ctx),
      OutOfRangeError);
}

TEST_CASE("zeta native backend tracks the oracles") {
  PrecisionContext ctx(64);
  auto at = [&](double sig, double t) {
    return eval_zeta<long double>(Cx<long double>{(long double)sig, (long double)t}, ctx);
  };
  auto dist = [](Cx<long double> v, const char* re, const char* im) {
    return (double)hypotl(v.re - strtold(re, nullptr), v.im - strtold(im, nullptr));
  };
  CHECK(dist(at(0.3, 5.0), oracle::kZetaP3_5i_Re, oracle::kZetaP3_5i_Im) < 1e-15);
  CHECK(dist(at(0.5, 50.0), oracle::kZetaHalf50i_Re, oracle::kZetaHalf50i_Im) < 1e-14);
  CHECK(dist(at(0.5, 1000.0), oracle::kZetaHalf1000i_Re, oracle::kZetaHalf1000i_Im) < 1e-13);
}

TEST_CASE("fast critical line evaluator matches oracles and template path") {
  ZetaEvaluator ev(1200.0);
  auto dist = [](Cx<long double> v, const char* re, const char* im) {
    return (double)hypotl(v.re - strtold(re, nullptr), v.im - strtold(im, nullptr));
  };
  CHECK(dist(ev.zeta_half(50.0L), oracle::kZetaHalf50i_Re, oracle::kZetaHalf50i_Im) < 1e-12);
  CHECK(dist(ev.zeta_half(100.0L), oracle::kZetaHalf100i_Re, oracle::kZetaHalf100i_Im) < 1e-12);
  CHECK(dist(ev.zeta_half(400.0L), oracle::kZetaHalf400i_Re, oracle::kZetaHalf400i_Im) < 1e-12);
  CHECK(dist(ev.zeta_half(1000.0L), oracle::kZetaHalf1000i_Re, oracle::kZetaHalf1000i_Im) < 1e-12);
  CHECK(dist(ev.zeta_half(0.0L), oracle::kZetaHalf, "0") < 1e-13);

  PrecisionContext ctx(64);
  for (double t : {3.7, 29.1, 333.0, 801.5, 1199.0}) {
    Cx<long double> a = ev.zeta_half((long double)t);
    Cx<long double> b = eval_zeta<long double>(Cx<long double>{0.5L, (long double)t}, ctx);
    CHECK((double)hypotl(a.re - b.re, a.im - b.im) < 1e-12);
  }
  CHECK_THROWS_AS(ev.zeta_half(1500.0L), OutOfRangeError);
}

TEST_CASE("doubling precision does not increase zeta error") {
  MpReal ref_re(oracle::kZetaHalf200i_Re, 320), ref_im(oracle::kZetaHalf200i_Im, 320);
  double prev = 1e300;
  for (int bits : {96, 128, 192}) {
    PrecisionContext ctx(bits);
    Cx<MpReal> v =
        eval_zeta<MpReal>(Cx<MpReal>{MpReal(0.5, bits + 16), MpReal(200.0, bits + 16)}, ctx);
    double err = hypot(v.re - ref_re, v.im - ref_im).to_double();
    CHECK(err <= prev * 1.0001 + 1e-300);
    prev = err;
  }
}
