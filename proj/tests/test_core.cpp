#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hml/backend.hpp"
#include "hml/complex.hpp"
#include "hml/constants.hpp"
#include "hml/errors.hpp"
#include "hml/mpreal.hpp"
#include "hml/precision.hpp"
#include "oracles.hpp"

using namespace hml;

TEST_CASE("precision context validates range") {
  CHECK_THROWS_AS(PrecisionContext(32), DomainError);
  CHECK_THROWS_AS(PrecisionContext(5000), DomainError);
  PrecisionContext ctx(128);
  CHECK(ctx.eps() == doctest::Approx(std::ldexp(1.0, -112)).epsilon(1e-15));
  CHECK(PrecisionContext(64).native());
  CHECK(!ctx.native());
}

TEST_CASE("mpreal string parse round trip") {
  MpReal x("1.25", 128);
  CHECK(x.to_double() == 1.25);
  CHECK_THROWS_AS(MpReal("not a number", 64), DomainError);
  MpReal pi = mp_pi(256);
  CHECK(pi.prec() == 256);
  MpReal y = pi * 2.0 - pi;
  CHECK(fabs(y - pi).to_double() == 0.0);
}

TEST_CASE("mpreal arithmetic widens to max precision") {
  MpReal a(1.0, 64);
  MpReal b(3.0, 256);
  MpReal q = a / b;
  CHECK(q.prec() == 256);
  CHECK(fabs(q * 3.0 - 1.0).to_double() < 1e-70);
}

TEST_CASE("bernoulli ratios match closed forms") {
  // b_k = B_{2k}/(2k)!: 1/12, -1/720, 1/30240, -1/1209600
  CHECK(bernoulli_ratio(1, 128).to_double() == doctest::Approx(1.0 / 12).epsilon(1e-14));
  CHECK(bernoulli_ratio(2, 128).to_double() == doctest::Approx(-1.0 / 720).epsilon(1e-14));
  CHECK(bernoulli_ratio(3, 128).to_double() == doctest::Approx(1.0 / 30240).epsilon(1e-14));
  CHECK(bernoulli_ratio(4, 128).to_double() == doctest::Approx(-1.0 / 1209600).epsilon(1e-14));
  CHECK_THROWS_AS(bernoulli_ratio(0, 128), CapacityError);
  CHECK_THROWS_AS(bernoulli_ratio(321, 128), CapacityError);
}

TEST_CASE("stirling coefficients match closed forms") {
  // c_k = B_{2k}/((2k)(2k-1)): 1/12, -1/360, 1/1260
  CHECK(stirling_coeff(1, 128).to_double() == doctest::Approx(1.0 / 12).epsilon(1e-14));
  CHECK(stirling_coeff(2, 128).to_double() == doctest::Approx(-1.0 / 360).epsilon(1e-14));
  CHECK(stirling_coeff(3, 128).to_double() == doctest::Approx(1.0 / 1260).epsilon(1e-14));
}

TEST_CASE("euler gamma from the harmonic series") {
  PrecisionContext ctx(256);
  Constants c = make_constants(ctx);
  MpReal ref(oracle::kEulerGamma, 320);
  CHECK(fabs(c.euler_gamma - ref) < ldexp(MpReal(1.0, 64), -180));
  CHECK(fabs(c.pi - mp_pi(320)) < ldexp(MpReal(1.0, 64), -250));
  CHECK(fabs(c.log_2pi - log(mp_pi(320) * 2.0)) < ldexp(MpReal(1.0, 64), -250));
}

TEST_CASE("stieltjes gamma_1 matches the independent oracle") {
  PrecisionContext ctx(160);
  Constants c = make_constants(ctx);
  MpReal ref(oracle::kStieltjes1, 256);
  CHECK(fabs(c.stieltjes_1 - ref) < ldexp(MpReal(1.0, 64), -150));
}

TEST_CASE("native constants") {
  CHECK(std::fabs((double)euler_gamma_ld() - 0.5772156649015329) < 1e-15);
  CHECK(std::fabs((double)stieltjes_1_ld() - (-0.0728158454836767)) < 1e-15);
}

TEST_CASE("kahan accumulator survives cancellation") {
  Accum<long double> a;
  a.add(1.0L);
  for (int i = 0; i < 100000; ++i) a.add(0x1p-80L);
  a.add(-1.0L);
  CHECK((double)a.total() == doctest::Approx(100000.0 * std::ldexp(1.0, -80)).epsilon(1e-12));
}

TEST_CASE("complex helpers") {
  Cx<long double> z{3.0L, 4.0L};
  CHECK((double)abs(z) == doctest::Approx(5.0));
  Cx<long double> e = cexp(Cx<long double>{0.0L, 3.14159265358979323846L / 2});
  CHECK((double)e.re == doctest::Approx(0.0).epsilon(1e-18));
  CHECK((double)e.im == doctest::Approx(1.0));
  Cx<MpReal> w{MpReal(1.0, 128), MpReal(1.0, 128)};
  Cx<MpReal> lw = clog(w);
  CHECK(lw.im.to_double() == doctest::Approx(0.7853981633974483));
  Cx<MpReal> r = cexp(lw);
  CHECK(fabs(r.re - 1.0).to_double() < 1e-36);
  CHECK(fabs(r.im - 1.0).to_double() < 1e-36);
}
