// NEON kernel variants (aarch64). Mirrors the scalar algorithm in 2x64-bit
// lanes; multiplication masks come from negating the extracted bit.

#include <arm_neon.h>

#include <bit>

#include "kernels_impl.hpp"

namespace conic::kern {

namespace {

using namespace detail;

inline uint64x2_t shl2(uint64x2_t v, int count) {
  return vshlq_u64(v, vdupq_n_s64(count));
}

inline uint64x2_t shr2(uint64x2_t v, int count) {
  return vshlq_u64(v, vdupq_n_s64(-count));
}

inline uint64x2_t clmul2(uint64x2_t va, uint64x2_t vb, unsigned m) {
  uint64x2_t acc = vdupq_n_u64(0);
  const uint64x2_t one = vdupq_n_u64(1);
  for (unsigned j = 0; j < m; ++j) {
    const uint64x2_t bit = vandq_u64(shr2(va, static_cast<int>(j)), one);
    const uint64x2_t mask = vsubq_u64(vdupq_n_u64(0), bit);
    acc = veorq_u64(acc, vandq_u64(shl2(vb, static_cast<int>(j)), mask));
  }
  return acc;
}

inline uint64x2_t clmul2_const(std::uint32_t c, uint64x2_t vb) {
  uint64x2_t acc = vdupq_n_u64(0);
  while (c) {
    const int j = std::countr_zero(c);
    acc = veorq_u64(acc, shl2(vb, j));
    c &= c - 1;
  }
  return acc;
}

inline uint64x2_t reduce2(uint64x2_t v, const FieldParams& f) {
  const uint64x2_t one = vdupq_n_u64(1);
  for (int bit = 2 * static_cast<int>(f.m) - 2; bit >= static_cast<int>(f.m); --bit) {
    const uint64x2_t b = vandq_u64(shr2(v, bit), one);
    const uint64x2_t mask = vsubq_u64(vdupq_n_u64(0), b);
    const uint64x2_t red = vdupq_n_u64(f.modulus << (bit - static_cast<int>(f.m)));
    v = veorq_u64(v, vandq_u64(red, mask));
  }
  return v;
}

inline uint64x2_t spread2(uint64x2_t x) {
  x = vandq_u64(vorrq_u64(x, vshlq_n_u64(x, 16)), vdupq_n_u64(0x0000FFFF0000FFFFull));
  x = vandq_u64(vorrq_u64(x, vshlq_n_u64(x, 8)), vdupq_n_u64(0x00FF00FF00FF00FFull));
  x = vandq_u64(vorrq_u64(x, vshlq_n_u64(x, 4)), vdupq_n_u64(0x0F0F0F0F0F0F0F0Full));
  x = vandq_u64(vorrq_u64(x, vshlq_n_u64(x, 2)), vdupq_n_u64(0x3333333333333333ull));
  x = vandq_u64(vorrq_u64(x, vshlq_n_u64(x, 1)), vdupq_n_u64(0x5555555555555555ull));
  return x;
}

inline uint64x2_t load2_u32(const std::uint32_t* p) {
  return vmovl_u32(vld1_u32(p));
}

inline void store2_u32(std::uint32_t* p, uint64x2_t v) {
  p[0] = static_cast<std::uint32_t>(vgetq_lane_u64(v, 0));
  p[1] = static_cast<std::uint32_t>(vgetq_lane_u64(v, 1));
}

void mul_batch_neon(std::uint32_t* out, const std::uint32_t* a, const std::uint32_t* b,
                    std::size_t n, const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2_u32(out + i, reduce2(clmul2(load2_u32(a + i), load2_u32(b + i), f.m), f));
  }
  for (; i < n; ++i) out[i] = mul1(a[i], b[i], f);
}

void mul_const_batch_neon(std::uint32_t* out, std::uint32_t c, const std::uint32_t* b,
                          std::size_t n, const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2_u32(out + i, reduce2(clmul2_const(c, load2_u32(b + i)), f));
  }
  for (; i < n; ++i) out[i] = mul1(c, b[i], f);
}

void square_batch_neon(std::uint32_t* out, const std::uint32_t* a, std::size_t n,
                       const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2_u32(out + i, reduce2(spread2(load2_u32(a + i)), f));
  }
  for (; i < n; ++i) out[i] = square1(a[i], f);
}

void trace_batch_neon(std::uint8_t* out, const std::uint32_t* a, std::size_t n,
                      const FieldParams& f) {
  const uint32x4_t mask = vdupq_n_u32(f.trace_mask);
  const uint32x4_t one = vdupq_n_u32(1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t v = vandq_u32(vld1q_u32(a + i), mask);
    v = veorq_u32(v, vshrq_n_u32(v, 16));
    v = veorq_u32(v, vshrq_n_u32(v, 8));
    v = veorq_u32(v, vshrq_n_u32(v, 4));
    v = veorq_u32(v, vshrq_n_u32(v, 2));
    v = veorq_u32(v, vshrq_n_u32(v, 1));
    v = vandq_u32(v, one);
    out[i + 0] = static_cast<std::uint8_t>(vgetq_lane_u32(v, 0));
    out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u32(v, 1));
    out[i + 2] = static_cast<std::uint8_t>(vgetq_lane_u32(v, 2));
    out[i + 3] = static_cast<std::uint8_t>(vgetq_lane_u32(v, 3));
  }
  for (; i < n; ++i) out[i] = trace1(a[i], f);
}

void rho_hat_batch_neon(std::uint32_t* out, std::uint32_t x, std::uint32_t y,
                        const std::uint32_t* z, const std::uint32_t* u, std::size_t n,
                        const FieldParams& f) {
  const std::uint32_t sqx = square1(x, f), sqy = square1(y, f);
  const uint64x2_t vx = vdupq_n_u64(x), vy = vdupq_n_u64(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t vz = load2_u32(z + i), vu = load2_u32(u + i);
    const uint64x2_t squ = reduce2(spread2(vu), f);
    const uint64x2_t sqz = reduce2(spread2(vz), f);
    const uint64x2_t t1 = reduce2(clmul2_const(sqx, squ), f);
    const uint64x2_t t2 = reduce2(clmul2_const(sqy, sqz), f);
    const uint64x2_t t3 = reduce2(clmul2(veorq_u64(vx, vz), veorq_u64(vy, vu), f.m), f);
    store2_u32(out + i, veorq_u64(t1, veorq_u64(t2, t3)));
  }
  for (; i < n; ++i) out[i] = rho1(sqx, sqy, x, y, z[i], u[i], f);
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t nwords) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= nwords; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    total += vaddvq_u16(vpaddlq_u8(bytes));
  }
  for (; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops = {
      "neon",           mul_batch_neon,     mul_const_batch_neon,
      square_batch_neon, trace_batch_neon, rho_hat_batch_neon,
      and_popcount_neon,
  };
  return ops;
}

}  // namespace conic::kern
