#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hml/errors.hpp"

namespace hml {

// Exact divisor tables d(n), d3(n) for n <= limit with int64 prefix sums,
// plus the summatory asymptotics used by the moment verifications.
struct DivisorTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> d;    // 1-based; index 0 unused
  std::vector<std::uint32_t> d3;  // d3 = d * 1 (Dirichlet)
  std::vector<std::int64_t> pd;    // prefix of d
  std::vector<std::int64_t> pad;   // prefix of (-1)^k d(k)
  std::vector<std::int64_t> pd3;   // prefix of d3

  std::uint32_t d_at(std::uint64_t n) const {
    if (n == 0 || n > limit) throw OutOfRangeError("d_at: n outside table");
    return d[n];
  }
  std::uint32_t d3_at(std::uint64_t n) const {
    if (n == 0 || n > limit) throw OutOfRangeError("d3_at: n outside table");
    return d3[n];
  }
};

inline constexpr std::uint64_t kDivisorTableMax = 100000000;  // memory guard

DivisorTable build_table(std::uint64_t n_max);

struct SummatoryTerms {
  double exact = 0.0;  // integral for sum_alt_d / sum_d3
  double main = 0.0;
  double residual = 0.0;  // exact - main
};

// sum_{k<=x} (-1)^k d(k);  main = (x/2)(log x + 2 gamma - 1 - 2 log 2)
SummatoryTerms sum_alt_d(std::uint64_t x, const DivisorTable& table);

// sum_{k<=x} (-1)^k d(k) k^{1/2};
// main = (1/3) x^{3/2} (log x + 2 gamma - 2 log 2 - 2/3)
SummatoryTerms sum_alt_d_sqrt(std::uint64_t x, const DivisorTable& table);

// sum_{n<=x} d3(n);
// main = x ((1/2) log^2 x + (3 gamma - 1) log x + 3 gamma_1 + 3 gamma^2 - 3 gamma + 1)
SummatoryTerms sum_d3(std::uint64_t x, const DivisorTable& table);

// sum over lo <= k <= hi of (-1)^k d(k) k^{1/2}, halving the endpoint term
// when lo or hi lands on an integer (tolerance 1e-9 (1+|k|)); a single point
// lo = hi = integer is halved once.
double sum_alt_d_sqrt_halved(double lo, double hi, const DivisorTable& table);

// Binary cache: magic "HMLDIV01", version, limit, CRC32 of the payload,
// then d and d3 as little-endian u32.  load_table validates everything and
// rebuilds the prefix sums.
void save_table(const std::string& path, const DivisorTable& table);
DivisorTable load_table(const std::string& path);

}  // namespace hml
