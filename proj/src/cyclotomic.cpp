#include "conic/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "conic/refs.hpp"
#include "conic/rng.hpp"

namespace conic {

namespace {

void fill_cosets(CyclotomicSpec& spec, const std::function<std::uint32_t(std::uint32_t)>& mul_g) {
  // Walk powers of the generator; discrete log index mod e is the coset.
  spec.coset_of.assign(spec.q, 0);
  spec.cosets.assign(spec.e, {});
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < spec.q - 1; ++i) {
    const std::uint32_t c = static_cast<std::uint32_t>(i % spec.e);
    spec.coset_of[x] = c;
    spec.cosets[c].push_back(x);
    x = mul_g(x);
  }
  if (x != 1) throw std::logic_error("generator order is not q-1");
  for (auto& coset : spec.cosets) std::sort(coset.begin(), coset.end());
}

}  // namespace

std::uint32_t CyclotomicSpec::diff(std::uint32_t x, std::uint32_t y) const {
  if (prime) return prime->sub(x, y);
  return x ^ y;
}

CyclotomicSpec make_cyclotomic_spec_prime(std::uint32_t p, std::uint64_t e) {
  if (p > 10000) throw std::invalid_argument("cyclotomic: prime fields limited to p <= 10^4");
  CyclotomicSpec spec;
  spec.prime.emplace(p);
  spec.q = p;
  spec.e = e;
  if (e <= 1 || (p - 1) % e != 0)
    throw std::invalid_argument("cyclotomic: e must divide q-1 and exceed 1");
  spec.f = (p - 1) / e;
  // -1 = g^((p-1)/2) lies in C_0 = <g^e> iff e divides (p-1)/2.
  if (((p - 1) / 2) % e != 0)
    throw std::invalid_argument("cyclotomic: -1 is not in C_0 (scheme would not be symmetric)");
  spec.generator = spec.prime->smallest_primitive_root();
  const PrimeField& pf = *spec.prime;
  const std::uint32_t g = spec.generator;
  fill_cosets(spec, [&pf, g](std::uint32_t x) { return pf.mul(x, g); });
  return spec;
}

CyclotomicSpec make_cyclotomic_spec_binary(unsigned m, std::uint64_t e) {
  if (m > 16) throw std::invalid_argument("cyclotomic: binary fields limited to m <= 16");
  CyclotomicSpec spec;
  spec.binary.emplace(m);
  spec.q = spec.binary->q();
  spec.e = e;
  if (e <= 1 || (spec.q - 1) % e != 0)
    throw std::invalid_argument("cyclotomic: e must divide q-1 and exceed 1");
  spec.f = (spec.q - 1) / e;

  // Any generator of the multiplicative group, found by order testing in
  // increasing encoding order.
  const BinaryField& bf = *spec.binary;
  const std::uint64_t order = spec.q - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t n = order;
  for (std::uint64_t fac = 2; fac * fac <= n; ++fac) {
    if (n % fac == 0) {
      prime_factors.push_back(fac);
      while (n % fac == 0) n /= fac;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  std::uint32_t g = 0;
  for (std::uint64_t cand = 2; cand < spec.q; ++cand) {
    bool primitive = true;
    for (std::uint64_t fac : prime_factors) {
      if (bf.pow(static_cast<elem>(cand), order / fac) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  if (g == 0) throw std::logic_error("no multiplicative generator found");
  spec.generator = g;
  fill_cosets(spec, [&bf, g](std::uint32_t x) { return bf.mul(x, g); });
  return spec;
}

SchemeBuildResult build_cyclotomic_scheme(const CyclotomicSpec& spec, const VerifyOptions& opts) {
  if (spec.e > 255) throw std::invalid_argument("cyclotomic: e exceeds the class-count limit");
  std::vector<std::int64_t> labels(spec.e + 1, 0);
  for (std::uint64_t i = 1; i <= spec.e; ++i) labels[i] = static_cast<std::int64_t>(i - 1);
  const CyclotomicSpec* s = &spec;
  return from_relation_map(
      spec.q, static_cast<unsigned>(spec.e), std::move(labels),
      [s](std::size_t x, std::size_t y) -> unsigned {
        if (x == y) return 0;
        return s->coset_of[s->diff(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y))] +
               1;
      },
      opts);
}

Certificate check_cyclotomic_pseudocyclic(const CyclotomicSpec& spec, const SchemeTable& table) {
  Certificate cert("cyclotomic pseudocyclicity");
  auto pc = check_pseudocyclic(table);
  const bool ok = pc.t.has_value() && *pc.t == spec.f;
  cert.add_check("pseudocyclic with t = f", refs::kCyclotomicPseudo,
                 "t = " + std::to_string(spec.f),
                 pc.t ? "t = " + std::to_string(*pc.t) : "criterion fails", ok);
  return cert;
}

Certificate check_cyclotomic_numbers(const CyclotomicSpec& spec, const SchemeTable& table,
                                     std::size_t samples, std::uint64_t seed) {
  Certificate cert("intersection numbers in cyclotomic-number form");
  SplitMix64 rng(seed);
  const std::uint64_t e = spec.e;
  std::optional<nlohmann::json> witness;
  for (std::size_t it = 0; it < samples && !witness; ++it) {
    const unsigned i = static_cast<unsigned>(1 + rng.below(e));
    const unsigned j = static_cast<unsigned>(1 + rng.below(e));
    const unsigned k = static_cast<unsigned>(1 + rng.below(e));
    const std::uint32_t ci = static_cast<std::uint32_t>(
        (static_cast<std::int64_t>(i) - k + static_cast<std::int64_t>(e)) %
        static_cast<std::int64_t>(e));
    const std::uint32_t cj = static_cast<std::uint32_t>(
        (static_cast<std::int64_t>(j) - k + static_cast<std::int64_t>(e)) %
        static_cast<std::int64_t>(e));
    std::uint64_t count = 0;
    for (std::uint32_t z : spec.cosets[ci]) {
      // 1 + z, skipping the case 1 + z = 0 which lies in no coset.
      std::uint32_t w;
      if (spec.prime) {
        w = spec.prime->add(1, z);
      } else {
        w = 1u ^ z;
      }
      if (w != 0 && spec.coset_of[w] == cj) ++count;
    }
    if (count != table.p(k, i, j)) {
      witness = nlohmann::json{{"i", i},     {"j", j},
                               {"k", k},     {"coset_count", count},
                               {"tensor", table.p(k, i, j)}};
    }
  }
  cert.add_check("sampled triples match coset counts (" + std::to_string(samples) + " draws)",
                 refs::kCyclotomicNumbers, "exact equality", witness ? "violated" : "holds",
                 !witness, witness);
  return cert;
}

std::vector<std::complex<double>> gauss_periods(const CyclotomicSpec& spec) {
  std::vector<std::complex<double>> periods(spec.e);
  for (std::uint64_t i = 0; i < spec.e; ++i) {
    std::complex<double> sum = 0.0;
    for (std::uint32_t beta : spec.cosets[i]) {
      if (spec.prime) {
        const double angle = 2.0 * std::numbers::pi * beta / static_cast<double>(spec.q);
        sum += std::polar(1.0, angle);
      } else {
        sum += spec.binary->trace(beta) ? -1.0 : 1.0;
      }
    }
    periods[i] = sum;
  }
  return periods;
}

Certificate check_eigenvalue_multiset(const CyclotomicSpec& spec, const SchemeTable& table,
                                      double tolerance) {
  Certificate cert("class-1 adjacency spectrum vs Gauss periods");
  if (spec.q > 4096) throw std::invalid_argument("check_eigenvalue_multiset: field too large");

  const std::size_t n = static_cast<std::size_t>(spec.q);
  Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table.cls(x, y) == 1) a1(x, y) = 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a1, Eigen::EigenvaluesOnly);
  std::vector<double> observed(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  const auto periods = gauss_periods(spec);
  double max_imag = 0.0;
  std::vector<double> expected;
  expected.push_back(static_cast<double>(spec.f));
  for (const auto& eta : periods) {
    max_imag = std::max(max_imag, std::abs(eta.imag()));
    for (std::uint64_t rep = 0; rep < spec.f; ++rep) expected.push_back(eta.real());
  }
  std::sort(observed.begin(), observed.end());
  std::sort(expected.begin(), expected.end());

  double max_err = max_imag;
  for (std::size_t i = 0; i < n; ++i) max_err = std::max(max_err, std::abs(observed[i] - expected[i]));
  cert.add_check("eigenvalue multiset equals {f} with each Gauss period f times",
                 refs::kCirculantSpectrum, "max deviation <= " + decimal_string(tolerance),
                 "max deviation = " + decimal_string(max_err), max_err <= tolerance);
  return cert;
}

}  // namespace conic
