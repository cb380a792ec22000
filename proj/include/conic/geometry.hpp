#pragma once
#include <vector>

#include "conic/fields.hpp"

namespace conic {

// Point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct ConicPoint {
  elem a = 0, b = 0, c = 0;
  friend bool operator==(const ConicPoint&, const ConicPoint&) = default;
};

enum class LineClass { Exterior, Secant, Tangent };

// The line (1,x,y)^perp = {(a0,a1,a2) : a0 + a1 x + a2 y = 0}. Lines not
// through the nucleus all have this form; exterior ones satisfy Tr(xy) = 1.
struct ExteriorLine {
  elem x = 0, y = 0;
  friend bool operator==(const ExteriorLine&, const ExteriorLine&) = default;
};

// The q+1 points of the conic {(xi, xi^2, 1)} u {(0,1,0)}, normalized,
// ordered with (0,1,0) and (0,0,1) first and the xi != 0 points by xi.
std::vector<ConicPoint> conic_points(const BinaryField& f);

// Classification by exact count of incident conic points (0 exterior,
// 1 tangent, 2 secant). Throws on the zero vector.
LineClass classify_line(elem a0, elem a1, elem a2, const BinaryField& f);

// All exterior lines, ordered by (x, y) integer encoding. |E| = q(q-1)/2.
std::vector<ExteriorLine> exterior_lines(const BinaryField& f);

// The pair invariant x^2 u^2 + y^2 z^2 + (x+z)(y+u). Symmetric; 0 iff the
// lines coincide; lands in T_0^* for distinct exterior lines.
elem rho_hat(const ExteriorLine& l, const ExteriorLine& m, const BinaryField& f);

}  // namespace conic
