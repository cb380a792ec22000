#include "conic/permpoly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "conic/refs.hpp"

namespace conic {

namespace {

void require_match(const PermPolySpec& spec, const BinaryField& f, const char* who) {
  if (spec.m != f.degree())
    throw std::invalid_argument(std::string(who) + ": field degree does not match spec");
}

int image_sphere(const PermPolySpec& spec) {
  return static_cast<int>((spec.r + static_cast<unsigned>(spec.alpha + spec.gamma) * spec.m) % 2);
}

}  // namespace

PermPolySpec make_perm_poly_spec(unsigned m, unsigned k, int alpha, int gamma) {
  if (m < 2) throw std::invalid_argument("make_perm_poly_spec: m must be at least 2");
  if (k < 1 || k >= m) throw std::invalid_argument("make_perm_poly_spec: k must be in 1..m-1");
  if (std::gcd(k, m) != 1) throw std::invalid_argument("make_perm_poly_spec: gcd(k, m) != 1");
  if ((alpha & ~1) || (gamma & ~1))
    throw std::invalid_argument("make_perm_poly_spec: alpha, gamma must be bits");
  unsigned r = 0;
  for (unsigned cand = 1; cand < m; ++cand) {
    if (cand * k % m == 1) {
      r = cand;
      break;
    }
  }
  return {m, k, r, alpha, gamma};
}

elem f_eval(elem x, const PermPolySpec& spec, const BinaryField& f) {
  require_match(spec, f, "f_eval");
  elem acc = 0;
  for (unsigned i = 0; i < spec.r; ++i) {
    acc ^= f.frobenius_pow(x, spec.k * i % spec.m);
  }
  return acc;
}

elem h_eval(elem x, const PermPolySpec& spec, const BinaryField& f) {
  require_match(spec, f, "h_eval");
  if (x == 0) return 0;
  const elem t = static_cast<elem>(f.trace(x));
  const elem base = (spec.alpha ? t : 0) ^ f_eval(x, spec, f);
  // base^(sigma+1) = base^sigma * base, sigma = 2^k.
  const elem powered = f.mul(f.frobenius_pow(base, spec.k), base);
  const elem quotient = f.mul(powered, f.square(f.inv(x)));
  return (spec.gamma ? t : 0) ^ quotient;
}

Certificate check_trace_sphere_bijectivity(const PermPolySpec& spec, const BinaryField& f) {
  require_match(spec, f, "check_trace_sphere_bijectivity");
  Certificate cert("trace-sphere bijectivity of H_{alpha,gamma}");
  const int s = image_sphere(spec);

  std::vector<bool> hit(f.q(), false);
  bool t0_ok = true, t1_ok = true, injective = true;
  std::optional<nlohmann::json> witness;
  for (std::uint64_t xu = 0; xu < f.q(); ++xu) {
    const elem x = static_cast<elem>(xu);
    const elem y = h_eval(x, spec, f);
    const int src = f.trace(x), dst = f.trace(y);
    if (src == 0 && dst != 0) {
      t0_ok = false;
      if (!witness) witness = nlohmann::json{{"x", x}, {"H(x)", y}};
    }
    if (src == 1 && dst != s) {
      t1_ok = false;
      if (!witness) witness = nlohmann::json{{"x", x}, {"H(x)", y}};
    }
  }
  // Injectivity per sphere: the image of T_0 must be all of T_0 (same size),
  // and likewise T_1 onto T_s.
  for (std::uint64_t xu = 0; xu < f.q(); ++xu) {
    const elem x = static_cast<elem>(xu);
    if (f.trace(x) != 0) continue;
    const elem y = h_eval(x, spec, f);
    if (hit[y]) {
      t0_ok = false;
      if (!witness) witness = nlohmann::json{{"collision_at", y}};
    }
    hit[y] = true;
  }
  std::fill(hit.begin(), hit.end(), false);
  for (std::uint64_t xu = 0; xu < f.q(); ++xu) {
    const elem x = static_cast<elem>(xu);
    if (f.trace(x) != 1) continue;
    const elem y = h_eval(x, spec, f);
    if (hit[y]) {
      t1_ok = false;
      if (!witness) witness = nlohmann::json{{"collision_at", y}};
    }
    hit[y] = true;
  }
  cert.add_check("T_0 maps bijectively onto T_0", refs::kTraceSphereBijection, "bijection",
                 t0_ok ? "holds" : "violated", t0_ok, t0_ok ? std::nullopt : witness);
  cert.add_check("T_1 maps bijectively onto T_" + std::to_string(s),
                 refs::kTraceSphereBijection, "bijection", t1_ok ? "holds" : "violated", t1_ok,
                 t1_ok ? std::nullopt : witness);

  // Permutation iff the two image spheres are distinct.
  injective = true;
  std::fill(hit.begin(), hit.end(), false);
  for (std::uint64_t xu = 0; xu < f.q(); ++xu) {
    const elem y = h_eval(static_cast<elem>(xu), spec, f);
    if (hit[y]) injective = false;
    hit[y] = true;
  }
  const bool parity_odd = s == 1;
  cert.add_check("permutation criterion", refs::kPermutationParity,
                 parity_odd ? "permutation of F_q" : "not a permutation",
                 injective ? "permutation of F_q" : "not a permutation",
                 injective == parity_odd);
  return cert;
}

Certificate check_composition_identities(const PermPolySpec& spec, const BinaryField& f) {
  require_match(spec, f, "check_composition_identities");
  Certificate cert("composition identities of H");
  const PermPolySpec h00 = make_perm_poly_spec(spec.m, spec.k, 0, 0);
  const PermPolySpec h10 = make_perm_poly_spec(spec.m, spec.k, 1, 0);

  std::optional<nlohmann::json> w1, w2;
  for (std::uint64_t xu = 1; xu < f.q(); ++xu) {
    const elem x = static_cast<elem>(xu);
    const elem fx = f_eval(x, h00, f);
    const elem xinv = f.inv(x);
    const elem rhs = fx ^ f.mul(fx, xinv) ^ f.mul(f.square(fx), f.square(xinv));
    if (h_eval(x, h00, f) != rhs && !w1) {
      w1 = nlohmann::json{{"x", x}, {"H_00", h_eval(x, h00, f)}, {"rhs", rhs}};
    }
    if (f.trace(x) == 1) {
      const elem rhs2 = elem{1} ^ xinv ^ f.square(xinv) ^ h_eval(x, h00, f);
      if (h_eval(x, h10, f) != rhs2 && !w2) {
        w2 = nlohmann::json{{"x", x}, {"H_10", h_eval(x, h10, f)}, {"rhs", rhs2}};
      }
    }
  }
  cert.add_check("H_00 = f + f/x + f^2/x^2 on F_q^*", refs::kHIdentities, "pointwise equality",
                 w1 ? "violated" : "holds", !w1, w1);
  cert.add_check("H_10 = 1 + 1/x + 1/x^2 + H_00 on T_1", refs::kHIdentities,
                 "pointwise equality", w2 ? "violated" : "holds", !w2, w2);
  return cert;
}

nlohmann::json perm_poly_report(const PermPolySpec& spec, const BinaryField& f) {
  const Certificate cert = check_trace_sphere_bijectivity(spec, f);
  const int s = image_sphere(spec);
  nlohmann::json j;
  j["m"] = spec.m;
  j["k"] = spec.k;
  j["r"] = spec.r;
  j["alpha"] = spec.alpha;
  j["gamma"] = spec.gamma;
  j["is_permutation"] = (s == 1);
  j["T0_image"] = 0;
  j["T1_image_sphere"] = s;
  j["pass"] = cert.pass();
  return j;
}

}  // namespace conic
