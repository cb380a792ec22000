#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conic/cyclotomic.hpp"

using conic::make_cyclotomic_spec_binary;
using conic::make_cyclotomic_spec_prime;

TEST_CASE("coset structure of F_7 with e = 3") {
  const auto spec = make_cyclotomic_spec_prime(7, 3);
  CHECK(spec.generator == 3);
  CHECK(spec.f == 2);
  CHECK(spec.cosets[0] == std::vector<std::uint32_t>{1, 6});
  CHECK(spec.cosets[1] == std::vector<std::uint32_t>{3, 4});
  CHECK(spec.cosets[2] == std::vector<std::uint32_t>{2, 5});
}

TEST_CASE("-1 not in C_0 is rejected") {
  CHECK_THROWS_AS(make_cyclotomic_spec_prime(7, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclotomic_spec_prime(7, 4), std::invalid_argument);  // e must divide q-1
  CHECK_THROWS_AS(make_cyclotomic_spec_prime(7, 1), std::invalid_argument);
}

TEST_CASE("schemes build and are pseudocyclic with t = f") {
  struct Row {
    std::uint32_t p;
    unsigned m;
    std::uint64_t e, t;
  };
  for (const Row row : {Row{7, 0, 3, 2}, Row{11, 0, 5, 2}, Row{13, 0, 3, 4}, Row{0, 3, 7, 1}}) {
    const auto spec = row.p ? make_cyclotomic_spec_prime(row.p, row.e)
                            : make_cyclotomic_spec_binary(row.m, row.e);
    auto built = conic::build_cyclotomic_scheme(spec);
    REQUIRE(built.ok());
    CHECK(built.table->d == spec.e);
    for (unsigned i = 1; i <= built.table->d; ++i) CHECK(built.table->valencies[i] == spec.f);
    CHECK(conic::verify_axioms(*built.table).pass());
    CHECK(conic::check_cyclotomic_pseudocyclic(spec, *built.table).pass());
    auto pc = conic::check_pseudocyclic(*built.table);
    REQUIRE(pc.t.has_value());
    CHECK(*pc.t == row.t);
    CHECK(conic::check_cyclotomic_numbers(spec, *built.table).pass());
  }
}

TEST_CASE("binary fields always have -1 = 1 in C_0") {
  const auto spec = make_cyclotomic_spec_binary(3, 7);
  CHECK(spec.f == 1);
  CHECK(spec.cosets.size() == 7);
  for (const auto& coset : spec.cosets) CHECK(coset.size() == 1);
}

TEST_CASE("Gauss periods") {
  {
    const auto spec = make_cyclotomic_spec_prime(7, 3);
    const auto periods = conic::gauss_periods(spec);
    REQUIRE(periods.size() == 3);
    // eta for C_0 = {1, 6} is 2 cos(2 pi / 7).
    const double expect = 2.0 * std::cos(2.0 * std::numbers::pi / 7.0);
    CHECK(std::abs(periods[0].real() - expect) < 1e-12);
    CHECK(std::abs(periods[0].imag()) < 1e-12);
    std::complex<double> sum = 0.0;
    for (const auto& eta : periods) sum += eta;
    CHECK(std::abs(sum + 1.0) < 1e-9);
  }
  {
    const auto spec = make_cyclotomic_spec_binary(3, 7);
    const auto periods = conic::gauss_periods(spec);
    std::complex<double> sum = 0.0;
    for (const auto& eta : periods) {
      CHECK(std::abs(std::abs(eta.real()) - 1.0) < 1e-12);  // each is +-1
      CHECK(eta.imag() == 0.0);
      sum += eta;
    }
    CHECK(std::abs(sum + 1.0) < 1e-9);
  }
}

TEST_CASE("class-1 eigenvalues match the Gauss-period multiset") {
  for (auto [p, m, e] : {std::tuple<std::uint32_t, unsigned, std::uint64_t>{7, 0, 3},
                         {11, 0, 5},
                         {0, 3, 7}}) {
    const auto spec =
        p ? make_cyclotomic_spec_prime(p, e) : make_cyclotomic_spec_binary(m, e);
    auto built = conic::build_cyclotomic_scheme(spec);
    REQUIRE(built.ok());
    CHECK(conic::check_eigenvalue_multiset(spec, *built.table).pass());
  }
}
