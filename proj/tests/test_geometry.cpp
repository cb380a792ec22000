#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "conic/fields.hpp"
#include "conic/geometry.hpp"
#include "oracles.hpp"

using conic::BinaryField;
using conic::ConicPoint;
using conic::elem;
using conic::ExteriorLine;
using conic::LineClass;

namespace {

// All q^2 + q + 1 lines of PG(2,q) by canonical representative.
template <typename Fn>
void for_all_lines(const BinaryField& f, Fn&& fn) {
  for (std::uint64_t x = 0; x < f.q(); ++x) {
    for (std::uint64_t y = 0; y < f.q(); ++y) {
      fn(elem{1}, static_cast<elem>(x), static_cast<elem>(y));
    }
  }
  for (std::uint64_t y = 0; y < f.q(); ++y) fn(elem{0}, elem{1}, static_cast<elem>(y));
  fn(elem{0}, elem{0}, elem{1});
}

}  // namespace

TEST_CASE("conic points") {
  const BinaryField f(3);
  const auto pts = conic_points(f);
  CHECK(pts.size() == 9);  // q + 1
  CHECK(pts[0] == ConicPoint{0, 1, 0});
  bool has_111 = false;
  for (const auto& p : pts) has_111 = has_111 || (p == ConicPoint{1, 1, 1});
  CHECK(has_111);  // xi = 1

  std::set<std::tuple<elem, elem, elem>> uniq;
  for (const auto& p : pts) uniq.insert(std::make_tuple(p.a, p.b, p.c));
  CHECK(uniq.size() == pts.size());
}

TEST_CASE("line classification against frozen examples") {
  const BinaryField f(3);
  CHECK(classify_line(1, 1, 1, f) == LineClass::Exterior);  // Tr(1) = 1
  CHECK(classify_line(0, 1, 0, f) == LineClass::Tangent);
  CHECK(classify_line(1, 1, 0, f) == LineClass::Secant);  // Tr(0) = 0
  CHECK_THROWS_AS(classify_line(0, 0, 0, f), std::invalid_argument);
}

TEST_CASE("line partition counts and the trace rule") {
  for (unsigned m : {2u, 3u, 4u, 5u}) {
    const BinaryField f(m);
    const std::uint64_t q = f.q();
    std::uint64_t exterior = 0, secant = 0, tangent = 0;
    for_all_lines(f, [&](elem a0, elem a1, elem a2) {
      const unsigned hits = oracle::conic_incidences(a0, a1, a2, f);
      const LineClass got = classify_line(a0, a1, a2, f);
      switch (got) {
        case LineClass::Exterior:
          CHECK(hits == 0);
          ++exterior;
          break;
        case LineClass::Tangent:
          CHECK(hits == 1);
          ++tangent;
          break;
        case LineClass::Secant:
          CHECK(hits == 2);
          ++secant;
          break;
      }
      if (a0 != 0) {
        // Normalized (1, x, y): exterior iff Tr(xy) = 1; never tangent.
        const elem x = f.mul(a1, f.inv(a0)), y = f.mul(a2, f.inv(a0));
        CHECK(got == (f.trace(f.mul(x, y)) ? LineClass::Exterior : LineClass::Secant));
      } else {
        CHECK(got == LineClass::Tangent);
        // The nucleus (1,0,0) lies on every tangent: a0 * 1 = 0.
      }
    });
    CHECK(exterior == q * (q - 1) / 2);
    CHECK(secant == q * (q + 1) / 2);
    CHECK(tangent == q + 1);
  }
}

TEST_CASE("exterior line counts") {
  CHECK(exterior_lines(BinaryField(2)).size() == 6);
  CHECK(exterior_lines(BinaryField(3)).size() == 28);
  CHECK(exterior_lines(BinaryField(5)).size() == 496);
  const auto lines = exterior_lines(BinaryField(3));
  const BinaryField f(3);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const auto key = [](const ExteriorLine& l) { return (std::uint64_t{l.x} << 32) | l.y; };
    CHECK(key(lines[i]) < key(lines[i + 1]));  // canonical (x, y) order
  }
  for (const auto& l : lines) CHECK(f.trace(f.mul(l.x, l.y)) == 1);
}

TEST_CASE("rho_hat values, symmetry and class structure") {
  const BinaryField f(3);
  CHECK(rho_hat({1, 1}, {1, 1}, f) == 0);
  CHECK(rho_hat({1, 1}, {2, 5}, f) == 4);
  // Second evaluation order for the same value.
  {
    const elem t3 = f.mul(elem{1} ^ 2, elem{1} ^ 5);
    const elem t1 = f.square(f.mul(1, 5)), t2 = f.square(f.mul(1, 2));
    CHECK((t1 ^ t2 ^ t3) == 4);
  }

  for (unsigned m : {2u, 3u, 4u, 5u}) {
    const BinaryField g(m);
    const auto lines = exterior_lines(g);
    std::set<elem> attained;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = 0; j < lines.size(); ++j) {
        const elem r = rho_hat(lines[i], lines[j], g);
        CHECK(r == rho_hat(lines[j], lines[i], g));
        if (i == j) {
          CHECK(r == 0);
        } else {
          CHECK(r != 0);
          CHECK(g.trace(r) == 0);
          attained.insert(r);
        }
      }
    }
    // Every label in T_0^* is attained.
    const auto t0s = g.trace_sphere_nonzero(0);
    CHECK(attained == std::set<elem>(t0s.begin(), t0s.end()));
  }
}

TEST_CASE("rho_hat is Frobenius-equivariant") {
  for (unsigned m : {3u, 4u, 5u}) {
    const BinaryField f(m);
    const auto lines = exterior_lines(f);
    for (std::size_t i = 0; i < lines.size(); i += 3) {
      for (std::size_t j = 0; j < lines.size(); j += 5) {
        const ExteriorLine li{f.square(lines[i].x), f.square(lines[i].y)};
        const ExteriorLine lj{f.square(lines[j].x), f.square(lines[j].y)};
        CHECK(rho_hat(li, lj, f) == f.square(rho_hat(lines[i], lines[j], f)));
      }
    }
  }
}
