#pragma once

#include <cmath>
#include <type_traits>
#include <utility>

#include "hml/mpreal.hpp"

namespace hml {

// Minimal complex type over either scalar backend.  std::complex is
// specified only for float/double/long double, so a separate template
// keeps the MPFR path legal and lets both paths share one code body.
template <class R>
struct Cx {
    R re{};
    R im{};

    Cx() = default;
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cx(R r) : re(std::move(r)), im(zero_like(re)) {}

    static R zero_like(const R& model) {
        if constexpr (std::is_same_v<R, MpReal>)
            return MpReal(0.0, model.prec());
        else
            return R(0);
    }

    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

template <class R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class R>
Cx<R> operator-(const Cx<R>& a) {
    return {-a.re, -a.im};
}
template <class R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
Cx<R> operator*(const Cx<R>& a, const R& s) {
    return {a.re * s, a.im * s};
}
template <class R>
Cx<R> operator*(const R& s, const Cx<R>& a) {
    return a * s;
}
template <class R, class = std::enable_if_t<!std::is_same_v<R, double>>>
Cx<R> operator*(const Cx<R>& a, double s) {
    return {a.re * s, a.im * s};
}
template <class R>
Cx<R> operator/(const Cx<R>& a, const R& s) {
    return {a.re / s, a.im / s};
}
template <class R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

template <class R>
Cx<R> conj(const Cx<R>& a) {
    return {a.re, -a.im};
}

template <class R>
R abs2(const Cx<R>& a) {
    return a.re * a.re + a.im * a.im;
}

template <class R>
R abs(const Cx<R>& a) {
    using std::hypot;
    return hypot(a.re, a.im);
}

template <class R>
R arg(const Cx<R>& a) {
    using std::atan2;
    return atan2(a.im, a.re);
}

// exp(x + iy) = e^x (cos y + i sin y)
inline Cx<long double> cexp(const Cx<long double>& z) {
    long double m = std::exp(z.re);
    return {m * std::cos(z.im), m * std::sin(z.im)};
}

inline Cx<MpReal> cexp(const Cx<MpReal>& z) {
    MpReal m = exp(z.re);
    MpReal s(z.im.prec()), c(z.im.prec());
    sin_cos(s, c, z.im);
    return {m * c, m * s};
}

// principal log
template <class R>
Cx<R> clog(const Cx<R>& z) {
    using std::atan2;
    using std::log;
    return {log(abs(z)), atan2(z.im, z.re)};
}

// unit phase e^{i t}
inline Cx<long double> cis(const long double& t) {
    return {std::cos(t), std::sin(t)};
}

inline Cx<MpReal> cis(const MpReal& t) {
    MpReal s(t.prec()), c(t.prec());
    sin_cos(s, c, t);
    return {c, s};
}

}  // namespace hml
