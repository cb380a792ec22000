#pragma once
#include <array>
#include <cstdint>
#include <vector>

namespace conic {

// Element of GF(2^m) in the polynomial basis: bit i is the coefficient of alpha^i.
using elem = std::uint32_t;

struct TraceSphere {
  int e = 0;
  std::vector<elem> members;  // sorted by integer encoding
};

// Arithmetic context for GF(2^m), 2 <= m <= 32. Immutable after construction
// and safely shareable; every operation is a pure function of its arguments.
class BinaryField {
 public:
  // Smallest irreducible modulus of degree m (deterministic across runs).
  explicit BinaryField(unsigned m);
  // Explicit modulus, given as the coefficient bit-vector of a degree-m
  // polynomial (bit i = coefficient of x^i; bit m must be set).
  BinaryField(unsigned m, std::uint64_t modulus_bits);

  unsigned degree() const { return m_; }
  std::uint64_t q() const { return std::uint64_t{1} << m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t trace_mask() const { return trace_mask_; }

  elem add(elem a, elem b) const { return a ^ b; }
  elem mul(elem a, elem b) const;
  elem square(elem a) const;
  elem pow(elem a, std::uint64_t e) const;
  elem inv(elem a) const;  // a^(q-2); throws std::domain_error on a = 0

  // Absolute trace to F_2. The mask route is an acceleration; it agrees with
  // the definitional sum a + a^2 + ... + a^(2^(m-1)) on the whole field
  // (both maps are F_2-linear and the mask is built from basis images).
  int trace(elem a) const { return __builtin_popcount(a & trace_mask_) & 1; }
  int trace_definitional(elem a) const;

  // k-fold squaring, a^(2^k). frobenius_pow(a, m) == a.
  elem frobenius_pow(elem a, unsigned k) const;
  // Unique square root, a^(2^(m-1)).
  elem sqrt(elem a) const;

  // Full solution set of z^2 + z = w: {z, z+1} when trace(w) = 0, else empty.
  std::vector<elem> artin_schreier_solve(elem w) const;

  // T_e = {x : Tr(x) = e}; materializes q/2 elements, so m <= 24.
  TraceSphere trace_sphere(int e) const;
  std::vector<elem> trace_sphere_nonzero(int e) const;  // T_e^*

  // Polynomial-over-F_2 utilities (64-bit coefficient encodings).
  static bool poly_irreducible(std::uint64_t p);
  static std::uint64_t smallest_irreducible(unsigned m);

 private:
  void init_tables();

  unsigned m_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint32_t trace_mask_ = 0;

  // Row-reduced system for z^2 + z = w (F_2-linear in z), precomputed once.
  std::array<std::uint32_t, 32> as_combine_{};  // which input bits feed each reduced row
  std::array<std::int8_t, 32> as_pivot_{};      // pivot column per reduced row, -1 past rank
  unsigned as_rank_ = 0;
};

// Arithmetic mod an odd prime p (elements 0..p-1).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);  // throws unless p is an odd prime

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0
  std::uint32_t smallest_primitive_root() const;

 private:
  std::uint32_t p_ = 0;
};

}  // namespace conic
