#include <doctest.h>

#include <sstream>

#include "conic/elliptic.hpp"
#include "conic/srg.hpp"

using conic::BinaryField;
using conic::CheckMode;
using conic::SrgParams;

namespace {

conic::SchemeTable complete_graph(std::size_t n) {
  auto built = conic::from_relation_map(
      n, 1, {0, 1}, [](std::size_t x, std::size_t y) { return x == y ? 0u : 1u; });
  REQUIRE(built.ok());
  return std::move(*built.table);
}

}  // namespace

TEST_CASE("latin square parameters") {
  CHECK(conic::latin_square_params(28, 9) == SrgParams{784, 243, 82, 72, false});
  CHECK(conic::latin_square_params(3, 2) == SrgParams{9, 4, 1, 2, false});
  CHECK(conic::latin_square_params(28, 27) == SrgParams{784, 729, 676, 702, false});
  const auto degenerate = conic::latin_square_params(5, 0);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.k == 0);
  CHECK_THROWS_AS(conic::latin_square_params(5, 7), std::invalid_argument);

  // Alternate closed forms at q = 8, t = q+1, n = q(q-1)/2.
  const std::uint64_t q = 8;
  const auto p = conic::latin_square_params(q * (q - 1) / 2, q + 1);
  CHECK(p.k == (q - 2) * (q + 1) * (q + 1) / 2);
  CHECK(p.lambda == (3 * q * q - 3 * q - 4) / 2);
  CHECK(p.mu == q * (q + 1));
}

TEST_CASE("fusion srg parameters") {
  const auto p32 = conic::fusion_srg_params(32, 5);
  CHECK(p32 == SrgParams{246016, 81675, 27226, 27060, false});
  CHECK(p32 == conic::latin_square_params(496, 165));
  CHECK(conic::fusion_srg_params(8, 3) == conic::latin_square_params(28, 27));
  CHECK_THROWS_AS(conic::fusion_srg_params(16, 4), std::invalid_argument);
  CHECK_THROWS_AS(conic::fusion_srg_params(32, 4), std::invalid_argument);
}

TEST_CASE("tensor graph from the complete graph on 3 points is SRG(9,4,1,2)") {
  const conic::TensorSrg g(complete_graph(3));
  CHECK(g.v() == 9);
  CHECK(g.claimed() == SrgParams{9, 4, 1, 2, false});
  CHECK(conic::certify_srg(g, CheckMode::Exhaustive).pass());
}

TEST_CASE("non-pseudocyclic input is rejected") {
  auto built = conic::from_relation_map(4, 2, {0, 1, 2}, [](std::size_t x, std::size_t y) {
    if (x == y) return 0u;
    return (x ^ y) == 1 ? 1u : 2u;
  });
  REQUIRE(built.ok());
  CHECK_THROWS_AS(conic::TensorSrg(std::move(*built.table)), std::invalid_argument);
}

TEST_CASE("elliptic q=8 tensor graph certifies exactly as (784, 243, 82, 72)") {
  const auto es = conic::build_elliptic_scheme(BinaryField(3));
  const conic::TensorSrg g(es.table);
  REQUIRE(g.packed());
  CHECK(g.claimed() == conic::latin_square_params(28, 9));
  const auto cert = conic::certify_srg(g, CheckMode::Exhaustive);
  CHECK(cert.pass());
  // Sampled mode on the same graph agrees.
  CHECK(conic::certify_srg(g, CheckMode::Sampled, 2000, 0x5EED).pass());
}

TEST_CASE("complete graph on 4 points gives SRG(16, 9, 4, 6)") {
  const conic::TensorSrg g4(complete_graph(4));
  CHECK(g4.claimed() == SrgParams{16, 9, 4, 6, false});
  CHECK(conic::certify_srg(g4, CheckMode::Exhaustive).pass());
}

TEST_CASE("flipped edges are caught with a witness") {
  // Doctored relation map: the tensor still says K_4, but the classifier
  // erases the base edge {0,1}, flipping a batch of tensor-graph edges.
  conic::SchemeTable doctored = complete_graph(4);
  doctored.dense = nullptr;
  doctored.remap.clear();
  doctored.classifier = [](std::size_t x, std::size_t y) {
    if (x == y) return 0u;
    if ((x == 0 && y == 1) || (x == 1 && y == 0)) return 0u;
    return 1u;
  };
  const conic::TensorSrg g(doctored);
  const auto cert = conic::certify_srg(g, CheckMode::Exhaustive);
  CHECK(!cert.pass());
  const auto* fail = cert.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->witness.has_value());
}

TEST_CASE("degree and common-neighbor recounts agree between packed and lazy paths") {
  const auto es = conic::build_elliptic_scheme(BinaryField(3));
  const conic::TensorSrg packed(es.table);

  // Lazy twin: same adjacency recomputed from the class map each time.
  // (Packed storage drops out above 5*10^4 vertices; emulate by querying
  // through the public lazy entry points of a second instance built from
  // the same table would still pack, so compare against direct definition.)
  const auto& t = es.table;
  const std::uint64_t n = t.n_points;
  for (std::uint64_t u = 0; u < 784; u += 97) {
    std::uint64_t deg = 0;
    for (std::uint64_t w = 0; w < 784; ++w) {
      if (w == u) continue;
      const unsigned cx = t.cls(u / n, w / n);
      if (cx != 0 && cx == t.cls(u % n, w % n)) ++deg;
    }
    CHECK(packed.degree(u) == deg);
  }
  for (std::uint64_t u = 0; u < 784; u += 131) {
    for (std::uint64_t w = u + 1; w < 784; w += 173) {
      std::uint64_t cn = 0;
      for (std::uint64_t z = 0; z < 784; ++z) {
        if (packed.adjacent(z, u) && packed.adjacent(z, w)) ++cn;
      }
      CHECK(packed.common_neighbors(u, w) == cn);
    }
  }
}

TEST_CASE("edge list export") {
  const conic::TensorSrg g(complete_graph(3));
  std::ostringstream out;
  g.write_edge_list(out);
  std::istringstream in(out.str());
  std::uint64_t v;
  in >> v;
  CHECK(v == 9);
  std::uint64_t edges = 0, a, b;
  while (in >> a >> b) {
    CHECK(a < b);
    CHECK(g.adjacent(a, b));
    ++edges;
  }
  CHECK(edges == 9 * 4 / 2);
}

TEST_CASE("printed vertex count erratum is flagged") {
  const auto check = conic::printed_vertex_count_erratum(8, 784);
  CHECK(check.pass);
  CHECK(check.observed.find("1568") != std::string::npos);
  const auto check32 = conic::printed_vertex_count_erratum(32, 246016);
  CHECK(check32.pass);
}
