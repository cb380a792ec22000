#include "conic/geometry.hpp"

#include <stdexcept>

#include "conic/kernels.hpp"

namespace conic {

std::vector<ConicPoint> conic_points(const BinaryField& f) {
  std::vector<ConicPoint> pts;
  pts.reserve(static_cast<std::size_t>(f.q()) + 1);
  pts.push_back({0, 1, 0});
  pts.push_back({0, 0, 1});  // xi = 0
  for (std::uint64_t xi = 1; xi < f.q(); ++xi) {
    // (xi, xi^2, 1) scaled by xi^{-1}.
    const elem x = static_cast<elem>(xi);
    pts.push_back({1, x, f.inv(x)});
  }
  return pts;
}

LineClass classify_line(elem a0, elem a1, elem a2, const BinaryField& f) {
  if (a0 == 0 && a1 == 0 && a2 == 0)
    throw std::invalid_argument("classify_line: zero vector is not a line");
  // Incidence with (xi, xi^2, 1): a0 xi + a1 xi^2 + a2 = 0, plus the point
  // (0,1,0) which lies on the line iff a1 = 0.
  unsigned hits = (a1 == 0) ? 1u : 0u;
  for (std::uint64_t xi = 0; xi < f.q(); ++xi) {
    const elem x = static_cast<elem>(xi);
    if ((f.mul(a0, x) ^ f.mul(a1, f.square(x)) ^ a2) == 0) ++hits;
  }
  switch (hits) {
    case 0: return LineClass::Exterior;
    case 1: return LineClass::Tangent;
    case 2: return LineClass::Secant;
    default: throw std::logic_error("line meets the conic in more than two points");
  }
}

std::vector<ExteriorLine> exterior_lines(const BinaryField& f) {
  if (f.degree() < 2) throw std::invalid_argument("exterior_lines: need m >= 2");
  const std::size_t q = static_cast<std::size_t>(f.q());
  const auto& ops = kern::active_ops();
  const kern::FieldParams fp = kern::params_of(f);

  std::vector<std::uint32_t> ys(q), prod(q);
  std::vector<std::uint8_t> tr(q);
  for (std::size_t y = 0; y < q; ++y) ys[y] = static_cast<std::uint32_t>(y);

  std::vector<ExteriorLine> lines;
  lines.reserve(q * (q - 1) / 2);
  for (std::size_t x = 0; x < q; ++x) {
    ops.mul_const_batch(prod.data(), static_cast<std::uint32_t>(x), ys.data(), q, fp);
    ops.trace_batch(tr.data(), prod.data(), q, fp);
    for (std::size_t y = 0; y < q; ++y) {
      if (tr[y]) lines.push_back({static_cast<elem>(x), static_cast<elem>(y)});
    }
  }
  return lines;
}

elem rho_hat(const ExteriorLine& l, const ExteriorLine& m, const BinaryField& f) {
  const elem t1 = f.mul(f.square(l.x), f.square(m.y));
  const elem t2 = f.mul(f.square(l.y), f.square(m.x));
  const elem t3 = f.mul(l.x ^ m.x, l.y ^ m.y);
  return t1 ^ t2 ^ t3;
}

}  // namespace conic
