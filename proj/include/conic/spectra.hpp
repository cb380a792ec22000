#pragma once
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "conic/report.hpp"
#include "conic/scheme.hpp"

namespace conic {

// Numeric eigenmatrices of a scheme. Row 0 of P is (1, n_1, ..., n_d),
// column 0 is all ones, Q = |X| P^{-1} and multiplicities are row 0 of Q.
struct Spectrum {
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  std::vector<double> multiplicities;
  std::uint64_t seed = 0;
  unsigned attempts = 1;
  double grouping_tolerance = 1e-8;
  double tolerance = 1e-6;

  nlohmann::json to_json() const;  // floats rendered as decimal strings
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// (B_j)_{k,i} = p^k_{ij}. B_0 is the identity and the B_j commute pairwise
// (checked exactly; violation throws, the tensor is inconsistent).
std::vector<IntMatrix> intersection_matrices(const SchemeTable& s);

// Diagonalizes a seeded random integer combination of the B_j and reads the
// common eigenvalues off each eigenvector. Retries with fresh coefficients
// on eigenvalue collisions, up to five times.
Spectrum eigenmatrix(const SchemeTable& s, std::uint64_t seed = 0x5EED,
                     double grouping_tolerance = 1e-8, double tolerance = 1e-6);

// Structural checks: P row/column conventions, P Q = |X| I, multiplicities
// positive and summing to |X|.
Certificate spectrum_sanity(const SchemeTable& s, const Spectrum& sp);

// All nontrivial multiplicities agree (within 10x tolerance) and round to a
// common integer t; cross-referenced against the combinatorial criterion.
Certificate check_pseudocyclic_spectral(const SchemeTable& s, const Spectrum& sp);

// For small schemes with a relation map: numeric eigenvalues of each dense
// adjacency matrix match column j of P weighted by the multiplicities.
Certificate check_adjacency_spectrum(const SchemeTable& s, const Spectrum& sp,
                                     double tolerance = 1e-6);

}  // namespace conic
