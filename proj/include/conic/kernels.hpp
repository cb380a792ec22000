#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

namespace conic {
class BinaryField;
}

namespace conic::kern {

// Field description handed to the batch kernels (everything they need to
// multiply and reduce without touching BinaryField).
struct FieldParams {
  unsigned m = 0;
  std::uint64_t modulus = 0;
  std::uint32_t trace_mask = 0;
};

FieldParams params_of(const BinaryField& f);

// One table of batch kernels. Scalar is the reference implementation; SIMD
// variants must be bit-identical to it on every input (equivalence-tested).
struct Ops {
  const char* name;

  // out[i] = a[i] * b[i]
  void (*mul_batch)(std::uint32_t* out, const std::uint32_t* a, const std::uint32_t* b,
                    std::size_t n, const FieldParams& f);
  // out[i] = c * b[i]
  void (*mul_const_batch)(std::uint32_t* out, std::uint32_t c, const std::uint32_t* b,
                          std::size_t n, const FieldParams& f);
  // out[i] = a[i]^2
  void (*square_batch)(std::uint32_t* out, const std::uint32_t* a, std::size_t n,
                       const FieldParams& f);
  // out[i] = Tr(a[i]) in {0, 1}
  void (*trace_batch)(std::uint8_t* out, const std::uint32_t* a, std::size_t n,
                      const FieldParams& f);
  // out[i] = x^2 u[i]^2 + y^2 z[i]^2 + (x + z[i]) (y + u[i]); the pairwise
  // invariant on exterior lines, evaluated for one fixed line against a row.
  void (*rho_hat_batch)(std::uint32_t* out, std::uint32_t x, std::uint32_t y,
                        const std::uint32_t* z, const std::uint32_t* u, std::size_t n,
                        const FieldParams& f);
  // popcount(a & b) over nwords 64-bit words (packed-bitset intersections).
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t nwords);
};

const Ops& scalar_ops();

// Best variant for this CPU, selected once at startup. Override with
// CONIC_SCHEMES_KERNEL=scalar|avx2|neon (falls back to scalar if the
// requested variant is unavailable).
const Ops& active_ops();

// Every variant compiled into this binary that the CPU can run.
std::vector<const Ops*> available_ops();

}  // namespace conic::kern
