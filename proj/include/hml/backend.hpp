#pragma once

#include <cmath>
#include <cstdlib>

#include "hml/complex.hpp"
#include "hml/mpreal.hpp"
#include "hml/precision.hpp"

namespace hml {

// Numeric backend traits.  Template code writes Num<R>::make(x, wp) and
// friends; wp (working precision in bits) is meaningful for MpReal and
// ignored by the native long double path.
template <class R>
struct Num;

template <>
struct Num<long double> {
    static constexpr bool is_native = true;

    static long double make(double x, int) { return static_cast<long double>(x); }
    static long double from_long(long x, int) { return static_cast<long double>(x); }
    static long double parse(const char* s, int) { return strtold(s, nullptr); }
    static long double pi(int) { return 3.141592653589793238462643383279502884L; }
    static long double ln2(int) { return 0.693147180559945309417232121458176568L; }
    static long double log_2pi(int) { return 1.837877066409345483560659472811235279L; }
    static long double euler(int) { return 0.577215664901532860606512090082402431L; }
    static double to_double(long double x) { return static_cast<double>(x); }
    static long double exp2i(long e, int) { return ldexpl(1.0L, (int)e); }
    // 2^-63: one ulp of the 64-bit mantissa at magnitude 1
    static long double eps(int) { return 0x1p-63L; }
};

template <>
struct Num<MpReal> {
    static constexpr bool is_native = false;

    static MpReal make(double x, int wp) { return MpReal(x, wp); }
    static MpReal from_long(long x, int wp) { return MpReal(x, wp); }
    static MpReal parse(const char* s, int wp) { return MpReal(s, wp); }
    static MpReal pi(int wp) { return mp_pi(wp); }
    static MpReal ln2(int wp) { return mp_log2(wp); }
    static MpReal log_2pi(int wp) { return log(ldexp(mp_pi(wp), 1)); }
    static MpReal euler(int wp) { return mp_euler(wp); }
    static double to_double(const MpReal& x) { return x.to_double(); }
    static MpReal exp2i(long e, int wp) { return ldexp(MpReal(1.0, wp), e); }
    static MpReal eps(int wp) { return ldexp(MpReal(1.0, wp), -(wp - 1)); }
};

// long double overloads so template code finds one set of names for both
// backends (the MpReal versions live in mpreal.hpp)
inline long double fabs(const long double& x) { return fabsl(x); }
inline long double log(const long double& x) { return logl(x); }
inline long double log1p(const long double& x) { return log1pl(x); }
inline long double exp(const long double& x) { return expl(x); }
inline long double expm1(const long double& x) { return expm1l(x); }
inline long double sqrt(const long double& x) { return sqrtl(x); }
inline long double cbrt(const long double& x) { return cbrtl(x); }
inline long double sin(const long double& x) { return sinl(x); }
inline long double cos(const long double& x) { return cosl(x); }
inline long double atan(const long double& x) { return atanl(x); }
inline long double floor(const long double& x) { return floorl(x); }
inline long double ceil(const long double& x) { return ceill(x); }
inline long double hypot(const long double& x, const long double& y) { return hypotl(x, y); }
inline long double atan2(const long double& y, const long double& x) { return atan2l(y, x); }
inline long double pow(const long double& b, const long double& e) { return powl(b, e); }
inline long double ldexp(const long double& a, long k) { return ldexpl(a, (int)k); }

// Internal working precision for a caller-requested context: guard bits
// absorb accumulated rounding so results honor ctx.eps() at the interface.
inline int working_bits(const PrecisionContext& ctx, int extra = 0) {
    return ctx.prec_bits + PrecisionContext::kGuardBits + extra;
}

inline double to_plain_double(long double x) { return static_cast<double>(x); }
inline double to_plain_double(const MpReal& x) { return x.to_double(); }

// Round a working-precision value down to the interface precision.
inline void round_to_interface(MpReal& x, const PrecisionContext& ctx) {
    MpReal r(ctx.prec_bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    x = std::move(r);
}
inline void round_to_interface(long double&, const PrecisionContext&) {}

inline void round_to_interface(Cx<MpReal>& z, const PrecisionContext& ctx) {
    round_to_interface(z.re, ctx);
    round_to_interface(z.im, ctx);
}
inline void round_to_interface(Cx<long double>&, const PrecisionContext&) {}

template <class T>
T at_interface(T x, const PrecisionContext& ctx) {
    round_to_interface(x, ctx);
    return x;
}

// Compensated accumulator.  The native path uses Kahan-Neumaier summation
// so 10^5-term sums stay within a few ulp; the MPFR path has guard bits
// instead and sums plainly.
template <class R>
struct Accum;

template <>
struct Accum<long double> {
    long double s = 0.0L;
    long double c = 0.0L;

    explicit Accum(int = 0) {}

    void add(long double x) {
        long double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    long double total() const { return s + c; }
};

template <>
struct Accum<MpReal> {
    MpReal s;

    explicit Accum(int wp) : s(0.0, wp) {}

    void add(const MpReal& x) { s += x; }
    MpReal total() const { return s; }
};

template <class R>
struct CxAccum {
    Accum<R> re, im;

    explicit CxAccum(int wp = 0) : re(wp), im(wp) {}

    void add(const Cx<R>& z) {
        re.add(z.re);
        im.add(z.im);
    }
    Cx<R> total() const { return {re.total(), im.total()}; }
};

}  // namespace hml
