#pragma once
#include <cstdint>

#include <json.hpp>

#include "conic/fields.hpp"
#include "conic/report.hpp"

namespace conic {

// Parameters of H_{alpha,gamma} over GF(2^m): k coprime to m, r the inverse
// of k mod m, sigma = 2^k, and the two bits alpha, gamma.
struct PermPolySpec {
  unsigned m = 0;
  unsigned k = 0;
  unsigned r = 0;
  int alpha = 0;
  int gamma = 0;
};

// Computes r from (m, k); throws unless 2 <= m, 1 <= k <= m-1, gcd(k,m) = 1.
PermPolySpec make_perm_poly_spec(unsigned m, unsigned k, int alpha, int gamma);

// f(x) = sum_{i=0}^{r-1} x^(sigma^i), via iterated Frobenius powers.
elem f_eval(elem x, const PermPolySpec& spec, const BinaryField& f);

// H(0) = 0; otherwise gamma Tr(x) + (alpha Tr(x) + f(x))^(sigma+1) / x^2,
// with Tr(x) lifted to {0,1} in the field.
elem h_eval(elem x, const PermPolySpec& spec, const BinaryField& f);

// Exhaustive: H maps T_0 bijectively onto T_0 and T_1 bijectively onto
// T_s with s = (r + (alpha+gamma) m) mod 2; H permutes F_q iff s = 1.
Certificate check_trace_sphere_bijectivity(const PermPolySpec& spec, const BinaryField& f);

// Pointwise composition identities satisfied by H_00 and H_10.
Certificate check_composition_identities(const PermPolySpec& spec, const BinaryField& f);

// Report row for the CLI: {"m","k","r","alpha","gamma","is_permutation",
// "T0_image","T1_image_sphere","pass"}.
nlohmann::json perm_poly_report(const PermPolySpec& spec, const BinaryField& f);

}  // namespace conic
