#pragma once
// Independent reference implementations used only by the tests. These use
// coefficient vectors and exhaustive search instead of the library's packed
// bit arithmetic, so agreement is meaningful.

#include <cstdint>
#include <vector>

#include "conic/fields.hpp"

namespace oracle {

// Polynomial product over F_2 as coefficient vectors, reduced by long
// division against the modulus bit-vector.
inline conic::elem naive_mul(conic::elem a, conic::elem b, const conic::BinaryField& f) {
  const unsigned m = f.degree();
  std::vector<int> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (!((a >> i) & 1)) continue;
    for (unsigned j = 0; j < m; ++j) {
      if ((b >> j) & 1) prod[i + j] ^= 1;
    }
  }
  std::vector<int> mod(m + 1, 0);
  for (unsigned i = 0; i <= m; ++i) mod[i] = static_cast<int>((f.modulus() >> i) & 1);
  for (int deg = static_cast<int>(prod.size()) - 1; deg >= static_cast<int>(m); --deg) {
    if (!prod[deg]) continue;
    for (unsigned i = 0; i <= m; ++i) prod[deg - m + i] ^= mod[i];
  }
  conic::elem out = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (prod[i]) out |= conic::elem{1} << i;
  }
  return out;
}

inline int naive_trace(conic::elem a, const conic::BinaryField& f) {
  conic::elem acc = a, s = a;
  for (unsigned i = 1; i < f.degree(); ++i) {
    s = naive_mul(s, s, f);
    acc ^= s;
  }
  return static_cast<int>(acc);
}

inline conic::elem exhaustive_inverse(conic::elem a, const conic::BinaryField& f) {
  for (std::uint64_t x = 1; x < f.q(); ++x) {
    if (naive_mul(a, static_cast<conic::elem>(x), f) == 1) return static_cast<conic::elem>(x);
  }
  return 0;
}

inline std::vector<conic::elem> exhaustive_artin_schreier(conic::elem w,
                                                          const conic::BinaryField& f) {
  std::vector<conic::elem> sol;
  for (std::uint64_t z = 0; z < f.q(); ++z) {
    const conic::elem e = static_cast<conic::elem>(z);
    if ((naive_mul(e, e, f) ^ e) == w) sol.push_back(e);
  }
  return sol;
}

// Number of conic points incident with the line (a0, a1, a2), counting over
// the parametrization directly.
inline unsigned conic_incidences(conic::elem a0, conic::elem a1, conic::elem a2,
                                 const conic::BinaryField& f) {
  unsigned hits = (a1 == 0) ? 1u : 0u;  // the point (0,1,0)
  for (std::uint64_t xi = 0; xi < f.q(); ++xi) {
    const conic::elem x = static_cast<conic::elem>(xi);
    const conic::elem x2 = naive_mul(x, x, f);
    if ((naive_mul(a0, x, f) ^ naive_mul(a1, x2, f) ^ a2) == 0) ++hits;
  }
  return hits;
}

}  // namespace oracle
