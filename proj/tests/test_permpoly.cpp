#include <doctest.h>

#include <numeric>
#include <set>

#include "conic/permpoly.hpp"

using conic::BinaryField;
using conic::elem;
using conic::make_perm_poly_spec;

TEST_CASE("spec construction and r") {
  CHECK(make_perm_poly_spec(3, 1, 0, 0).r == 1);
  CHECK(make_perm_poly_spec(3, 2, 0, 0).r == 2);
  CHECK(make_perm_poly_spec(5, 2, 0, 0).r == 3);  // 2*3 = 6 = 1 mod 5
  CHECK(make_perm_poly_spec(2, 1, 0, 0).r == 1);
  CHECK_THROWS_AS(make_perm_poly_spec(1, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_perm_poly_spec(4, 2, 0, 0), std::invalid_argument);  // gcd
  CHECK_THROWS_AS(make_perm_poly_spec(3, 3, 0, 0), std::invalid_argument);  // k range
}

TEST_CASE("f evaluation") {
  const BinaryField f(3);
  const auto id = make_perm_poly_spec(3, 1, 0, 0);
  for (elem x = 0; x < 8; ++x) CHECK(conic::f_eval(x, id, f) == x);  // r = 1

  const auto spec = make_perm_poly_spec(3, 2, 0, 0);  // r = 2, sigma = 4
  CHECK(conic::f_eval(2, spec, f) == 4);              // 2 + 2^4 = 2 ^ 6
  CHECK(conic::f_eval(0, spec, f) == 0);
}

TEST_CASE("H evaluation basics") {
  const BinaryField f(3);
  const auto id = make_perm_poly_spec(3, 1, 0, 0);
  for (elem x = 0; x < 8; ++x) CHECK(conic::h_eval(x, id, f) == x);  // x^3 / x^2

  for (unsigned k : {1u, 2u}) {
    for (int a : {0, 1}) {
      for (int g : {0, 1}) {
        CHECK(conic::h_eval(0, make_perm_poly_spec(3, k, a, g), f) == 0);
      }
    }
  }

  // m=3, k=2: r = 2 even, so H_00 sends T_1 into T_0 and is not a permutation.
  const auto spec = make_perm_poly_spec(3, 2, 0, 0);
  for (elem x : f.trace_sphere(1).members) CHECK(f.trace(conic::h_eval(x, spec, f)) == 0);
}

TEST_CASE("trace-sphere bijectivity across the full parameter range") {
  for (unsigned m = 2; m <= 8; ++m) {
    const BinaryField f(m);
    for (unsigned k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (int a : {0, 1}) {
        for (int g : {0, 1}) {
          const auto spec = make_perm_poly_spec(m, k, a, g);
          CAPTURE(m);
          CAPTURE(k);
          CAPTURE(a);
          CAPTURE(g);
          CHECK(conic::check_trace_sphere_bijectivity(spec, f).pass());
        }
      }
    }
  }
}

TEST_CASE("frozen parity examples") {
  {
    const BinaryField f(3);
    const auto cert = conic::check_trace_sphere_bijectivity(make_perm_poly_spec(3, 1, 0, 0), f);
    CHECK(cert.pass());  // identity is a permutation, r + 0 = 1 odd
  }
  {
    // m=4, k=3 -> r=3; alpha=1, gamma=0: 3 + 4 odd, permutation onto T_1.
    const BinaryField f(4);
    const auto report = conic::perm_poly_report(make_perm_poly_spec(4, 3, 1, 0), f);
    CHECK(report["is_permutation"] == true);
    CHECK(report["T1_image_sphere"] == 1);
    CHECK(report["pass"] == true);
  }
  {
    // m=3, k=2: r=2 even, not a permutation, T_1 -> T_0.
    const BinaryField f(3);
    const auto report = conic::perm_poly_report(make_perm_poly_spec(3, 2, 0, 0), f);
    CHECK(report["is_permutation"] == false);
    CHECK(report["T1_image_sphere"] == 0);
    CHECK(report["pass"] == true);
  }
}

TEST_CASE("image of T_0 is exactly T_0 as a set") {
  for (unsigned m = 2; m <= 8; ++m) {
    const BinaryField f(m);
    for (unsigned k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const auto spec = make_perm_poly_spec(m, k, 0, 1);
      std::set<elem> image;
      for (elem x : f.trace_sphere(0).members) image.insert(conic::h_eval(x, spec, f));
      const auto t0 = f.trace_sphere(0).members;
      CHECK(image == std::set<elem>(t0.begin(), t0.end()));
    }
  }
}

TEST_CASE("composition identities hold for every valid k, m in {3, 5}") {
  for (unsigned m : {3u, 5u}) {
    const BinaryField f(m);
    for (unsigned k = 1; k < m; ++k) {
      CHECK(conic::check_composition_identities(make_perm_poly_spec(m, k, 0, 0), f).pass());
    }
  }
}

TEST_CASE("H has F_2 coefficients: H(x^2) = H(x)^2") {
  for (unsigned m : {3u, 4u, 5u, 6u}) {
    const BinaryField f(m);
    for (unsigned k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (int a : {0, 1}) {
        for (int g : {0, 1}) {
          const auto spec = make_perm_poly_spec(m, k, a, g);
          for (std::uint64_t x = 0; x < f.q(); ++x) {
            const elem e = static_cast<elem>(x);
            CHECK(conic::h_eval(f.square(e), spec, f) == f.square(conic::h_eval(e, spec, f)));
          }
        }
      }
    }
  }
}
