#include "conic/fields.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace conic {

namespace {

int poly_degree(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

// Remainder of a mod b in F_2[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  int da = poly_degree(a);
  while (da >= db) {
    a ^= b << (da - db);
    da = poly_degree(a);
  }
  return a;
}

}  // namespace

bool BinaryField::poly_irreducible(std::uint64_t p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  if ((p & 1) == 0) return false;  // divisible by x
  // Exhaustive trial division by every polynomial of degree 1..d/2.
  for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f) {
    if (poly_mod(p, f) == 0) return false;
  }
  return true;
}

std::uint64_t BinaryField::smallest_irreducible(unsigned m) {
  const std::uint64_t lo = std::uint64_t{1} << m;
  for (std::uint64_t cand = lo | 1; cand < (lo << 1); cand += 2) {
    if (poly_irreducible(cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

BinaryField::BinaryField(unsigned m) : BinaryField(m, smallest_irreducible(m)) {}

BinaryField::BinaryField(unsigned m, std::uint64_t modulus_bits) : m_(m), modulus_(modulus_bits) {
  if (m < 2 || m > 32) throw std::invalid_argument("BinaryField: m must be in [2, 32]");
  if (poly_degree(modulus_bits) != static_cast<int>(m))
    throw std::invalid_argument("BinaryField: modulus degree does not match m");
  if (!poly_irreducible(modulus_bits))
    throw std::invalid_argument("BinaryField: modulus is reducible over F_2");
  init_tables();
}

elem BinaryField::mul(elem a, elem b) const {
  // Carryless shift-and-xor product (degree <= 2m-2 fits in 64 bits), then
  // reduction mod the modulus.
  std::uint64_t acc = 0, aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit) {
    if ((acc >> bit) & 1) acc ^= modulus_ << (bit - m_);
  }
  return static_cast<elem>(acc);
}

elem BinaryField::square(elem a) const { return mul(a, a); }

elem BinaryField::pow(elem a, std::uint64_t e) const {
  elem result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

elem BinaryField::inv(elem a) const {
  if (a == 0) throw std::domain_error("inv(0) is undefined");
  return pow(a, q() - 2);
}

int BinaryField::trace_definitional(elem a) const {
  elem acc = a, s = a;
  for (unsigned i = 1; i < m_; ++i) {
    s = square(s);
    acc ^= s;
  }
  // The sum lies in the prime field F_2.
  if (acc > 1) throw std::logic_error("trace fell outside F_2");
  return static_cast<int>(acc);
}

elem BinaryField::frobenius_pow(elem a, unsigned k) const {
  for (unsigned i = 0, n = k % m_; i < n; ++i) a = square(a);
  return a;
}

elem BinaryField::sqrt(elem a) const { return frobenius_pow(a, m_ - 1); }

std::vector<elem> BinaryField::artin_schreier_solve(elem w) const {
  if (trace(w) != 0) return {};
  // Back-substitute in the precomputed row-reduced system; free variable 0.
  elem z = 0;
  for (unsigned r = 0; r < as_rank_; ++r) {
    if (__builtin_popcount(as_combine_[r] & w) & 1) z |= elem{1} << as_pivot_[r];
  }
  elem lo = std::min<elem>(z, z ^ 1), hi = std::max<elem>(z, z ^ 1);
  return {lo, hi};
}

TraceSphere BinaryField::trace_sphere(int e) const {
  if (m_ > 24) throw std::invalid_argument("trace_sphere: field too large to materialize");
  TraceSphere t;
  t.e = e & 1;
  t.members.reserve(static_cast<std::size_t>(q() / 2));
  for (std::uint64_t x = 0; x < q(); ++x) {
    if (trace(static_cast<elem>(x)) == t.e) t.members.push_back(static_cast<elem>(x));
  }
  return t;
}

std::vector<elem> BinaryField::trace_sphere_nonzero(int e) const {
  auto t = trace_sphere(e);
  if (t.e == 0) t.members.erase(t.members.begin());  // 0 always has trace 0
  return std::move(t.members);
}

void BinaryField::init_tables() {
  // Trace of each basis element alpha^i, packed into a mask.
  trace_mask_ = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (trace_definitional(elem{1} << i)) trace_mask_ |= elem{1} << i;
  }
  if (trace_mask_ == 0) throw std::logic_error("trace map is identically zero");

  // Row-reduce the F_2-linear system z^2 + z = w. Row r of the system states
  // that bit r of (z^2 + z) equals bit r of w; column c is basis vector
  // alpha^c. Kernel is {0, 1}, so rank is m-1 and solutions come in pairs.
  std::array<std::uint32_t, 32> rows{}, combine{};
  for (unsigned c = 0; c < m_; ++c) {
    const elem img = square(elem{1} << c) ^ (elem{1} << c);
    for (unsigned r = 0; r < m_; ++r) {
      if ((img >> r) & 1) rows[r] |= std::uint32_t{1} << c;
    }
  }
  for (unsigned r = 0; r < m_; ++r) combine[r] = std::uint32_t{1} << r;

  unsigned rank = 0;
  as_pivot_.fill(-1);
  for (unsigned col = 0; col < m_ && rank < m_; ++col) {
    unsigned pivot = rank;
    while (pivot < m_ && !((rows[pivot] >> col) & 1)) ++pivot;
    if (pivot == m_) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(combine[rank], combine[pivot]);
    for (unsigned r = 0; r < m_; ++r) {
      if (r != rank && ((rows[r] >> col) & 1)) {
        rows[r] ^= rows[rank];
        combine[r] ^= combine[rank];
      }
    }
    as_pivot_[rank] = static_cast<std::int8_t>(col);
    ++rank;
  }
  as_rank_ = rank;
  as_combine_ = combine;
  if (rank != m_ - 1) throw std::logic_error("z^2+z has unexpected rank");
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("PrimeField: p must be an odd prime");
  for (std::uint32_t f = 3; std::uint64_t{f} * f <= p; f += 2) {
    if (p % f == 0) throw std::invalid_argument("PrimeField: p = " + std::to_string(p) + " is composite");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t result = 1, base = a % p_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inv(0) is undefined");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::smallest_primitive_root() const {
  // Prime factors of p-1, then test candidates in increasing order.
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p_ - 1;
  for (std::uint32_t f = 2; std::uint64_t{f} * f <= n; ++f) {
    if (n % f == 0) {
      factors.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t g = 2; g < p_; ++g) {
    bool primitive = true;
    for (std::uint32_t f : factors) {
      if (pow(g, (p_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

}  // namespace conic
