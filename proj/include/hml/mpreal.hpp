#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "hml/errors.hpp"

namespace hml {

// Thin RAII wrapper over mpfr_t.
//
// Precision is fixed per value at construction; binary operations produce
// results at the larger operand precision, so precision flows from inputs
// to outputs without global state.  Rounding is always MPFR_RNDN, which
// keeps every computation bit-deterministic across runs and thread counts.
class MpReal {
  public:
    static constexpr mpfr_prec_t kMinPrec = 16;

    explicit MpReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, clamp(prec)); }

    MpReal(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    MpReal(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    MpReal(unsigned long x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_ui(v_, x, MPFR_RNDN);
    }

    // Decimal string, e.g. frozen reference constants.
    MpReal(const char* s, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0)
            throw DomainError(std::string("MpReal: unparsable literal ") + s);
    }

    MpReal(const MpReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    MpReal(MpReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    MpReal& operator=(MpReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(int digits = 20) const {
        char buf[512];
        mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
        return buf;
    }

    // in-place arithmetic
    MpReal& operator+=(const MpReal& o) {
        widen(o.prec());
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator-=(const MpReal& o) {
        widen(o.prec());
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator*=(const MpReal& o) {
        widen(o.prec());
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator/=(const MpReal& o) {
        widen(o.prec());
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpReal& operator+=(double x) {
        mpfr_add_d(v_, v_, x, MPFR_RNDN);
        return *this;
    }
    MpReal& operator-=(double x) {
        mpfr_sub_d(v_, v_, x, MPFR_RNDN);
        return *this;
    }
    MpReal& operator*=(double x) {
        mpfr_mul_d(v_, v_, x, MPFR_RNDN);
        return *this;
    }
    MpReal& operator/=(double x) {
        mpfr_div_d(v_, v_, x, MPFR_RNDN);
        return *this;
    }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }

    // Raise own precision (preserving the value) so a compound assignment
    // never silently truncates the wider operand.
    void widen(mpfr_prec_t p) {
        if (mpfr_get_prec(v_) < p) {
            MpReal tmp(p);
            mpfr_set(tmp.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, tmp.v_);
        }
    }

    mpfr_t v_;
};

inline mpfr_prec_t result_prec(const MpReal& a, const MpReal& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}

#define HML_MP_BINOP(op, fn)                                          \
    inline MpReal operator op(const MpReal& a, const MpReal& b) {     \
        MpReal r(result_prec(a, b));                                  \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                     \
        return r;                                                     \
    }                                                                 \
    inline MpReal operator op(const MpReal& a, double b) {            \
        MpReal r(a.prec());                                           \
        fn##_d(r.raw(), a.raw(), b, MPFR_RNDN);                       \
        return r;                                                     \
    }

HML_MP_BINOP(+, mpfr_add)
HML_MP_BINOP(-, mpfr_sub)
HML_MP_BINOP(*, mpfr_mul)
HML_MP_BINOP(/, mpfr_div)
#undef HML_MP_BINOP

inline MpReal operator+(double a, const MpReal& b) { return b + a; }
inline MpReal operator*(double a, const MpReal& b) { return b * a; }
inline MpReal operator-(double a, const MpReal& b) {
    MpReal r(b.prec());
    mpfr_d_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline MpReal operator/(double a, const MpReal& b) {
    MpReal r(b.prec());
    mpfr_d_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline MpReal operator-(const MpReal& a) {
    MpReal r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }
inline bool operator<(const MpReal& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const MpReal& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const MpReal& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const MpReal& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }
inline bool operator<(double a, const MpReal& b) { return b > a; }
inline bool operator>(double a, const MpReal& b) { return b < a; }

#define HML_MP_FUN1(name, fn)                    \
    inline MpReal name(const MpReal& a) {        \
        MpReal r(a.prec());                      \
        fn(r.raw(), a.raw(), MPFR_RNDN);         \
        return r;                                \
    }

HML_MP_FUN1(sqrt, mpfr_sqrt)
HML_MP_FUN1(cbrt, mpfr_cbrt)
HML_MP_FUN1(exp, mpfr_exp)
HML_MP_FUN1(expm1, mpfr_expm1)
HML_MP_FUN1(log, mpfr_log)
HML_MP_FUN1(log1p, mpfr_log1p)
HML_MP_FUN1(sin, mpfr_sin)
HML_MP_FUN1(cos, mpfr_cos)
HML_MP_FUN1(tan, mpfr_tan)
HML_MP_FUN1(atan, mpfr_atan)
HML_MP_FUN1(fabs, mpfr_abs)
#undef HML_MP_FUN1

inline MpReal floor(const MpReal& a) {
    MpReal r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}
inline MpReal ceil(const MpReal& a) {
    MpReal r(a.prec());
    mpfr_ceil(r.raw(), a.raw());
    return r;
}

inline MpReal abs(const MpReal& a) { return fabs(a); }

inline void sin_cos(MpReal& s, MpReal& c, const MpReal& x) {
    MpReal ss(x.prec()), cc(x.prec());
    mpfr_sin_cos(ss.raw(), cc.raw(), x.raw(), MPFR_RNDN);
    s = std::move(ss);
    c = std::move(cc);
}

inline MpReal atan2(const MpReal& y, const MpReal& x) {
    MpReal r(result_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline MpReal hypot(const MpReal& x, const MpReal& y) {
    MpReal r(result_prec(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

inline MpReal pow(const MpReal& b, const MpReal& e) {
    MpReal r(result_prec(b, e));
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}

inline MpReal pow(const MpReal& b, long e) {
    MpReal r(b.prec());
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}

inline MpReal ldexp(const MpReal& a, long k) {
    MpReal r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}

inline MpReal fmod(const MpReal& a, const MpReal& m) {
    MpReal r(result_prec(a, m));
    mpfr_fmod(r.raw(), a.raw(), m.raw(), MPFR_RNDN);
    return r;
}

inline MpReal mp_pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline MpReal mp_log2(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

inline MpReal mp_euler(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

// zeta at a positive integer argument (used for Bernoulli ratios)
inline MpReal mp_zeta_ui(unsigned long n, mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

inline MpReal mp_factorial(unsigned long n, mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

}  // namespace hml
