// AVX2 kernel variants. Compiled with -mavx2; only dispatched to when the
// CPU reports AVX2. Multiplication runs in 64-bit lanes (products of two
// degree-31 polynomials need 63 bits), trace in 32-bit lanes.

#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace conic::kern {

namespace {

using namespace detail;

inline __m256i shl64(__m256i v, unsigned count) {
  return _mm256_sll_epi64(v, _mm_cvtsi32_si128(static_cast<int>(count)));
}

inline __m256i shr64(__m256i v, unsigned count) {
  return _mm256_srl_epi64(v, _mm_cvtsi32_si128(static_cast<int>(count)));
}

// Lane-parallel carryless product, variable x variable.
inline __m256i clmul4(__m256i va, __m256i vb, unsigned m) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i acc = zero;
  for (unsigned j = 0; j < m; ++j) {
    const __m256i bit = _mm256_and_si256(shr64(va, j), one);
    const __m256i mask = _mm256_sub_epi64(zero, bit);
    acc = _mm256_xor_si256(acc, _mm256_and_si256(shl64(vb, j), mask));
  }
  return acc;
}

// Carryless product by a scalar constant: only its set bits contribute.
inline __m256i clmul4_const(std::uint32_t c, __m256i vb) {
  __m256i acc = _mm256_setzero_si256();
  while (c) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(c));
    acc = _mm256_xor_si256(acc, shl64(vb, j));
    c &= c - 1;
  }
  return acc;
}

inline __m256i reduce4(__m256i v, const FieldParams& f) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  for (int bit = 2 * static_cast<int>(f.m) - 2; bit >= static_cast<int>(f.m); --bit) {
    const __m256i b = _mm256_and_si256(shr64(v, static_cast<unsigned>(bit)), one);
    const __m256i mask = _mm256_sub_epi64(zero, b);
    const __m256i red =
        _mm256_set1_epi64x(static_cast<long long>(f.modulus << (bit - static_cast<int>(f.m))));
    v = _mm256_xor_si256(v, _mm256_and_si256(red, mask));
  }
  return v;
}

inline __m256i spread4(__m256i x) {
  x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi64(x, 16)),
                       _mm256_set1_epi64x(0x0000FFFF0000FFFFll));
  x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi64(x, 8)),
                       _mm256_set1_epi64x(0x00FF00FF00FF00FFll));
  x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi64(x, 4)),
                       _mm256_set1_epi64x(0x0F0F0F0F0F0F0F0Fll));
  x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi64(x, 2)),
                       _mm256_set1_epi64x(0x3333333333333333ll));
  x = _mm256_and_si256(_mm256_or_si256(x, _mm256_slli_epi64(x, 1)),
                       _mm256_set1_epi64x(0x5555555555555555ll));
  return x;
}

inline __m256i load4_u32(const std::uint32_t* p) {
  return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

inline void store4_u32(std::uint32_t* p, __m256i v) {
  alignas(32) std::uint64_t tmp[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
  p[0] = static_cast<std::uint32_t>(tmp[0]);
  p[1] = static_cast<std::uint32_t>(tmp[1]);
  p[2] = static_cast<std::uint32_t>(tmp[2]);
  p[3] = static_cast<std::uint32_t>(tmp[3]);
}

void mul_batch_avx2(std::uint32_t* out, const std::uint32_t* a, const std::uint32_t* b,
                    std::size_t n, const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = load4_u32(a + i), vb = load4_u32(b + i);
    store4_u32(out + i, reduce4(clmul4(va, vb, f.m), f));
  }
  for (; i < n; ++i) out[i] = mul1(a[i], b[i], f);
}

void mul_const_batch_avx2(std::uint32_t* out, std::uint32_t c, const std::uint32_t* b,
                          std::size_t n, const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vb = load4_u32(b + i);
    store4_u32(out + i, reduce4(clmul4_const(c, vb), f));
  }
  for (; i < n; ++i) out[i] = mul1(c, b[i], f);
}

void square_batch_avx2(std::uint32_t* out, const std::uint32_t* a, std::size_t n,
                       const FieldParams& f) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store4_u32(out + i, reduce4(spread4(load4_u32(a + i)), f));
  }
  for (; i < n; ++i) out[i] = square1(a[i], f);
}

void trace_batch_avx2(std::uint8_t* out, const std::uint32_t* a, std::size_t n,
                      const FieldParams& f) {
  const __m256i mask = _mm256_set1_epi32(static_cast<int>(f.trace_mask));
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    v = _mm256_and_si256(v, mask);
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 16));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 8));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 4));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 2));
    v = _mm256_xor_si256(v, _mm256_srli_epi32(v, 1));
    v = _mm256_and_si256(v, one);
    alignas(32) std::uint32_t tmp[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
    for (int l = 0; l < 8; ++l) out[i + l] = static_cast<std::uint8_t>(tmp[l]);
  }
  for (; i < n; ++i) out[i] = trace1(a[i], f);
}

void rho_hat_batch_avx2(std::uint32_t* out, std::uint32_t x, std::uint32_t y,
                        const std::uint32_t* z, const std::uint32_t* u, std::size_t n,
                        const FieldParams& f) {
  const std::uint32_t sqx = square1(x, f), sqy = square1(y, f);
  const __m256i vx = _mm256_set1_epi64x(x), vy = _mm256_set1_epi64x(y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vz = load4_u32(z + i), vu = load4_u32(u + i);
    const __m256i squ = reduce4(spread4(vu), f);
    const __m256i sqz = reduce4(spread4(vz), f);
    const __m256i t1 = reduce4(clmul4_const(sqx, squ), f);
    const __m256i t2 = reduce4(clmul4_const(sqy, sqz), f);
    const __m256i t3 =
        reduce4(clmul4(_mm256_xor_si256(vx, vz), _mm256_xor_si256(vy, vu), f.m), f);
    store4_u32(out + i, _mm256_xor_si256(t1, _mm256_xor_si256(t2, t3)));
  }
  for (; i < n; ++i) out[i] = rho1(sqx, sqy, x, y, z[i], u[i], f);
}

// Byte-shuffle popcount (nibble lookup + psadbw accumulation).
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t nwords) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                       1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    const __m256i v = _mm256_and_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {
      "avx2",           mul_batch_avx2,     mul_const_batch_avx2,
      square_batch_avx2, trace_batch_avx2, rho_hat_batch_avx2,
      and_popcount_avx2,
  };
  return ops;
}

}  // namespace conic::kern
