#pragma once
#include <complex>
#include <optional>
#include <vector>

#include "conic/fields.hpp"
#include "conic/report.hpp"
#include "conic/scheme.hpp"

namespace conic {

// Index-e coset structure of F_q^* with -1 in C_0 (required for symmetric
// relations; automatic in characteristic 2, and equivalent to e | (q-1)/2
// for odd prime q).
struct CyclotomicSpec {
  std::optional<PrimeField> prime;
  std::optional<BinaryField> binary;
  std::uint64_t q = 0;
  std::uint64_t e = 0, f = 0;  // q - 1 = e f
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> coset_of;             // size q, coset index of x != 0
  std::vector<std::vector<std::uint32_t>> cosets;  // e cosets, each sorted

  std::uint32_t diff(std::uint32_t x, std::uint32_t y) const;  // x - y in the field
};

CyclotomicSpec make_cyclotomic_spec_prime(std::uint32_t p, std::uint64_t e);
CyclotomicSpec make_cyclotomic_spec_binary(unsigned m, std::uint64_t e);

// Scheme on q points: class i+1 holds the pairs whose difference lies in
// coset C_i. d = e, every nontrivial valency f.
SchemeBuildResult build_cyclotomic_scheme(const CyclotomicSpec& spec,
                                          const VerifyOptions& opts = {});

Certificate check_cyclotomic_pseudocyclic(const CyclotomicSpec& spec, const SchemeTable& table);

// Sampled identity between tensor entries and coset counts of 1+z.
Certificate check_cyclotomic_numbers(const CyclotomicSpec& spec, const SchemeTable& table,
                                     std::size_t samples = 50, std::uint64_t seed = 0x5EED);

// eta_i = sum over C_i of psi(beta), psi the canonical additive character.
std::vector<std::complex<double>> gauss_periods(const CyclotomicSpec& spec);

// Numeric eigenvalue multiset of the class-1 adjacency matrix equals
// {f} with each Gauss period repeated f times, within tolerance.
Certificate check_eigenvalue_multiset(const CyclotomicSpec& spec, const SchemeTable& table,
                                      double tolerance = 1e-6);

}  // namespace conic
