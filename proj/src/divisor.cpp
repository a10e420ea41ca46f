#include "hml/divisor.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "hml/backend.hpp"
#include "hml/constants.hpp"

namespace hml {

namespace {

std::array<std::uint32_t, 256> crc_table() {
  std::array<std::uint32_t, 256> t{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    t[i] = c;
  }
  return t;
}

std::uint32_t crc32(const unsigned char* data, std::size_t n, std::uint32_t crc = 0) {
  static const std::array<std::uint32_t, 256> t = crc_table();
  crc ^= 0xFFFFFFFFu;
  for (std::size_t i = 0; i < n; ++i) crc = t[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

void build_prefixes(DivisorTable& t) {
  std::uint64_t n = t.limit;
  t.pd.assign(n + 1, 0);
  t.pad.assign(n + 1, 0);
  t.pd3.assign(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    t.pd[k] = t.pd[k - 1] + t.d[k];
    t.pad[k] = t.pad[k - 1] + ((k & 1) ? -static_cast<std::int64_t>(t.d[k])
                                       : static_cast<std::int64_t>(t.d[k]));
    t.pd3[k] = t.pd3[k - 1] + t.d3[k];
  }
}

constexpr char kMagic[8] = {'H', 'M', 'L', 'D', 'I', 'V', '0', '1'};
constexpr std::uint32_t kVersion = 1;

struct FileCloser {
  std::FILE* f;
  ~FileCloser() {
    if (f) std::fclose(f);
  }
};

}  // namespace

DivisorTable build_table(std::uint64_t n_max) {
  if (n_max == 0) throw DomainError("build_table: n_max must be positive");
  if (n_max > kDivisorTableMax) throw CapacityError("build_table: n_max above memory guard");
  DivisorTable t;
  t.limit = n_max;
  t.d.assign(n_max + 1, 0);
  t.d3.assign(n_max + 1, 0);
  for (std::uint64_t a = 1; a <= n_max; ++a)
    for (std::uint64_t m = a; m <= n_max; m += a) t.d[m] += 1;
  for (std::uint64_t a = 1; a <= n_max; ++a) {
    std::uint32_t da = t.d[a];
    for (std::uint64_t m = a; m <= n_max; m += a) t.d3[m] += da;
  }
  build_prefixes(t);
  return t;
}

SummatoryTerms sum_alt_d(std::uint64_t x, const DivisorTable& table) {
  if (x == 0) throw DomainError("sum_alt_d: x must be positive");
  if (x > table.limit) throw OutOfRangeError("sum_alt_d: x above table limit");
  long double lx = logl(static_cast<long double>(x));
  long double g = euler_gamma_ld();
  long double main =
      0.5L * static_cast<long double>(x) * (lx + 2.0L * g - 1.0L - 2.0L * 0.693147180559945309417232121458176568L);
  SummatoryTerms r;
  r.exact = static_cast<double>(table.pad[x]);
  r.main = static_cast<double>(main);
  r.residual = static_cast<double>(static_cast<long double>(table.pad[x]) - main);
  return r;
}

SummatoryTerms sum_alt_d_sqrt(std::uint64_t x, const DivisorTable& table) {
  if (x == 0) throw DomainError("sum_alt_d_sqrt: x must be positive");
  if (x > table.limit) throw OutOfRangeError("sum_alt_d_sqrt: x above table limit");
  Accum<long double> acc;
  for (std::uint64_t k = 1; k <= x; ++k) {
    long double term = static_cast<long double>(table.d[k]) * sqrtl(static_cast<long double>(k));
    acc.add((k & 1) ? -term : term);
  }
  long double lx = logl(static_cast<long double>(x));
  long double g = euler_gamma_ld();
  long double xr = static_cast<long double>(x);
  long double main = (xr * sqrtl(xr) / 3.0L) *
                     (lx + 2.0L * g - 2.0L * 0.693147180559945309417232121458176568L - 2.0L / 3.0L);
  SummatoryTerms r;
  r.exact = static_cast<double>(acc.total());
  r.main = static_cast<double>(main);
  r.residual = static_cast<double>(acc.total() - main);
  return r;
}

SummatoryTerms sum_d3(std::uint64_t x, const DivisorTable& table) {
  if (x == 0) throw DomainError("sum_d3: x must be positive");
  if (x > table.limit) throw OutOfRangeError("sum_d3: x above table limit");
  long double lx = logl(static_cast<long double>(x));
  long double g = euler_gamma_ld();
  long double g1 = stieltjes_1_ld();
  // constant term from Res_{s=1} zeta(s)^3 x^s / s; the gamma_1 here is the
  // direct Laurent coefficient of zeta at 1, i.e. minus the Stieltjes gamma_1
  long double main = static_cast<long double>(x) *
                     (0.5L * lx * lx + (3.0L * g - 1.0L) * lx - 3.0L * g1 + 3.0L * g * g - 3.0L * g + 1.0L);
  SummatoryTerms r;
  r.exact = static_cast<double>(table.pd3[x]);
  r.main = static_cast<double>(main);
  r.residual = static_cast<double>(static_cast<long double>(table.pd3[x]) - main);
  return r;
}

double sum_alt_d_sqrt_halved(double lo, double hi, const DivisorTable& table) {
  if (!(lo >= 1.0) || !(hi >= lo)) throw OutOfRangeError("sum_alt_d_sqrt_halved: need 1 <= lo <= hi");
  if (hi > static_cast<double>(table.limit) * (1.0 + 1e-9))
    throw OutOfRangeError("sum_alt_d_sqrt_halved: hi above table limit");
  auto near_int = [](double v) {
    return std::fabs(v - std::nearbyint(v)) <= 1e-9 * (1.0 + std::fabs(v));
  };
  bool lo_int = near_int(lo);
  bool hi_int = near_int(hi);
  std::uint64_t klo = lo_int ? static_cast<std::uint64_t>(std::llround(lo))
                             : static_cast<std::uint64_t>(std::ceil(lo));
  std::uint64_t khi = hi_int ? static_cast<std::uint64_t>(std::llround(hi))
                             : static_cast<std::uint64_t>(std::floor(hi));
  if (khi > table.limit) khi = table.limit;
  Accum<long double> acc;
  for (std::uint64_t k = klo; k <= khi; ++k) {
    long double term = static_cast<long double>(table.d[k]) * sqrtl(static_cast<long double>(k));
    if (k & 1) term = -term;
    if ((lo_int && k == klo) || (hi_int && k == khi)) term *= 0.5L;
    acc.add(term);
  }
  return static_cast<double>(acc.total());
}

void save_table(const std::string& path, const DivisorTable& table) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("save_table: cannot open " + path);
  FileCloser fc{f};
  std::uint64_t n = table.limit;
  std::vector<unsigned char> payload(8 * n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint32_t a = table.d[k], b = table.d3[k];
    std::memcpy(&payload[8 * (k - 1)], &a, 4);
    std::memcpy(&payload[8 * (k - 1) + 4], &b, 4);
  }
  std::uint32_t crc = crc32(payload.data(), payload.size());
  if (std::fwrite(kMagic, 1, 8, f) != 8) throw IoError("save_table: write failed");
  std::uint32_t ver = kVersion;
  if (std::fwrite(&ver, 4, 1, f) != 1) throw IoError("save_table: write failed");
  if (std::fwrite(&n, 8, 1, f) != 1) throw IoError("save_table: write failed");
  if (std::fwrite(&crc, 4, 1, f) != 1) throw IoError("save_table: write failed");
  if (!payload.empty() && std::fwrite(payload.data(), 1, payload.size(), f) != payload.size())
    throw IoError("save_table: write failed");
}

DivisorTable load_table(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("load_table: cannot open " + path);
  FileCloser fc{f};
  char magic[8];
  std::uint32_t ver = 0, crc = 0;
  std::uint64_t n = 0;
  if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, kMagic, 8) != 0)
    throw CacheFormatError("load_table: bad magic");
  if (std::fread(&ver, 4, 1, f) != 1 || ver != kVersion)
    throw CacheFormatError("load_table: unsupported version");
  if (std::fread(&n, 8, 1, f) != 1 || n == 0 || n > kDivisorTableMax)
    throw CacheFormatError("load_table: bad table size");
  if (std::fread(&crc, 4, 1, f) != 1) throw CacheFormatError("load_table: truncated header");
  std::vector<unsigned char> payload(8 * n);
  if (std::fread(payload.data(), 1, payload.size(), f) != payload.size())
    throw CacheFormatError("load_table: truncated payload");
  if (crc32(payload.data(), payload.size()) != crc)
    throw CacheFormatError("load_table: checksum mismatch");
  DivisorTable t;
  t.limit = n;
  t.d.assign(n + 1, 0);
  t.d3.assign(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint32_t a, b;
    std::memcpy(&a, &payload[8 * (k - 1)], 4);
    std::memcpy(&b, &payload[8 * (k - 1) + 4], 4);
    t.d[k] = a;
    t.d3[k] = b;
  }
  build_prefixes(t);
  return t;
}

}  // namespace hml
