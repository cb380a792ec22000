#pragma once
#include <cstdint>

#include "conic/kernels.hpp"

// Shared scalar primitives. SIMD variants use these for remainder lanes and
// setup work so that every code path reduces identically.

namespace conic::kern::detail {

inline std::uint64_t clmul32(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0, aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return acc;
}

inline std::uint32_t reduce64(std::uint64_t v, const FieldParams& f) {
  for (int bit = 2 * static_cast<int>(f.m) - 2; bit >= static_cast<int>(f.m); --bit) {
    if ((v >> bit) & 1) v ^= f.modulus << (bit - f.m);
  }
  return static_cast<std::uint32_t>(v);
}

inline std::uint32_t mul1(std::uint32_t a, std::uint32_t b, const FieldParams& f) {
  return reduce64(clmul32(a, b), f);
}

// Squaring in F_2[x] just spreads the bits apart.
inline std::uint64_t spread_bits(std::uint64_t x) {
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

inline std::uint32_t square1(std::uint32_t a, const FieldParams& f) {
  return reduce64(spread_bits(a), f);
}

inline std::uint8_t trace1(std::uint32_t a, const FieldParams& f) {
  return static_cast<std::uint8_t>(__builtin_popcount(a & f.trace_mask) & 1);
}

inline std::uint32_t rho1(std::uint32_t sqx, std::uint32_t sqy, std::uint32_t x,
                          std::uint32_t y, std::uint32_t z, std::uint32_t u,
                          const FieldParams& f) {
  const std::uint32_t t1 = mul1(sqx, square1(u, f), f);
  const std::uint32_t t2 = mul1(sqy, square1(z, f), f);
  const std::uint32_t t3 = mul1(x ^ z, y ^ u, f);
  return t1 ^ t2 ^ t3;
}

}  // namespace conic::kern::detail
