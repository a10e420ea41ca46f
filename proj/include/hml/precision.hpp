#pragma once

#include <cmath>
#include <cstdint>

#include "hml/errors.hpp"

namespace hml {

// Working-precision request shared by every evaluation routine.
//
// prec_bits is the mantissa size of the arithmetic the caller wants.
// 64 selects the native long double backend (64-bit mantissa on x86),
// anything larger selects MPFR.  eps() is the accuracy actually promised
// to callers: g guard bits are reserved for accumulated rounding, so
// eps = 2^-(prec_bits - g).
struct PrecisionContext {
    static constexpr int kGuardBits = 16;
    static constexpr int kMinBits = 64;
    static constexpr int kMaxBits = 4096;

    int prec_bits = 128;

    explicit PrecisionContext(int bits = 128) : prec_bits(bits) {
        if (bits < kMinBits || bits > kMaxBits)
            throw DomainError("PrecisionContext: prec_bits must be in [64, 4096]");
    }

    double eps() const { return std::ldexp(1.0, -(prec_bits - kGuardBits)); }
    bool native() const { return prec_bits <= 64; }
};

}  // namespace hml
