#include "conic/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conic/refs.hpp"
#include "conic/rng.hpp"

namespace conic {

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(decimal_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json Spectrum::to_json() const {
  nlohmann::json j;
  j["P"] = matrix_to_json(P);
  j["Q"] = matrix_to_json(Q);
  nlohmann::json mult = nlohmann::json::array();
  for (double m : multiplicities) mult.push_back(decimal_string(m));
  j["multiplicities"] = std::move(mult);
  j["seed"] = seed;
  j["tolerance"] = decimal_string(tolerance);
  return j;
}

std::vector<IntMatrix> intersection_matrices(const SchemeTable& s) {
  const unsigned n = s.d + 1;
  std::vector<IntMatrix> b(n);
  for (unsigned j = 0; j < n; ++j) {
    b[j].resize(n, n);
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned i = 0; i < n; ++i) {
        b[j](k, i) = static_cast<std::int64_t>(s.p(k, i, j));
      }
    }
  }
  if (!b[0].isIdentity()) throw std::runtime_error("intersection_matrices: B_0 is not I");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (b[i] * b[j] != b[j] * b[i]) {
        throw std::runtime_error("intersection_matrices: B_" + std::to_string(i) + " and B_" +
                                 std::to_string(j) + " do not commute");
      }
    }
  }
  return b;
}

Spectrum eigenmatrix(const SchemeTable& s, std::uint64_t seed, double grouping_tolerance,
                     double tolerance) {
  const unsigned n = s.d + 1;
  const auto b = intersection_matrices(s);

  Spectrum sp;
  sp.seed = seed;
  sp.grouping_tolerance = grouping_tolerance;
  sp.tolerance = tolerance;

  for (unsigned attempt = 0; attempt < 5; ++attempt) {
    SplitMix64 rng(seed + attempt);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (unsigned j = 1; j < n; ++j) {
      const double c = static_cast<double>(1 + rng.below(1u << 16));
      combo += c * b[j].cast<double>();
    }
    if (n == 1) combo = Eigen::MatrixXd::Identity(1, 1);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
    const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());

    // All eigenvalues must be (numerically) real and pairwise separated;
    // otherwise the random combination collided and we redraw.
    bool usable = true;
    std::vector<double> evals(n);
    for (unsigned i = 0; i < n; ++i) {
      if (std::abs(solver.eigenvalues()(i).imag()) > grouping_tolerance * scale) usable = false;
      evals[i] = solver.eigenvalues()(i).real();
    }
    if (usable) {
      auto sorted = evals;
      std::sort(sorted.begin(), sorted.end());
      for (unsigned i = 0; i + 1 < n; ++i) {
        if (sorted[i + 1] - sorted[i] <= grouping_tolerance * scale) usable = false;
      }
    }
    if (!usable) continue;

    // Rayleigh quotients read every B_j eigenvalue off each eigenvector.
    Eigen::MatrixXd rows(n, n);
    for (unsigned i = 0; i < n; ++i) {
      Eigen::VectorXd v = solver.eigenvectors().col(i).real();
      const double denom = v.dot(v);
      for (unsigned j = 0; j < n; ++j) {
        rows(i, j) = v.dot(b[j].cast<double>() * v) / denom;
      }
    }

    // The valency row comes first; the rest sort lexicographically.
    std::vector<unsigned> order(n);
    int valency_row = -1;
    for (unsigned i = 0; i < n; ++i) {
      bool match = true;
      for (unsigned j = 0; j < n; ++j) {
        const double expect = static_cast<double>(s.valencies[j]);
        if (std::abs(rows(i, j) - expect) > tolerance * (1.0 + expect)) match = false;
      }
      if (match) {
        valency_row = static_cast<int>(i);
        break;
      }
    }
    if (valency_row < 0) continue;
    unsigned pos = 0;
    order[pos++] = static_cast<unsigned>(valency_row);
    std::vector<unsigned> rest;
    for (unsigned i = 0; i < n; ++i) {
      if (static_cast<int>(i) != valency_row) rest.push_back(i);
    }
    std::sort(rest.begin(), rest.end(), [&](unsigned a, unsigned c) {
      for (unsigned j = 0; j < n; ++j) {
        if (rows(a, j) != rows(c, j)) return rows(a, j) < rows(c, j);
      }
      return false;
    });
    for (unsigned i : rest) order[pos++] = i;

    sp.P.resize(n, n);
    for (unsigned i = 0; i < n; ++i) sp.P.row(i) = rows.row(order[i]);
    sp.Q = static_cast<double>(s.n_points) * sp.P.inverse();
    sp.multiplicities.assign(n, 0.0);
    for (unsigned j = 0; j < n; ++j) sp.multiplicities[j] = sp.Q(0, j);
    sp.attempts = attempt + 1;
    return sp;
  }
  throw std::runtime_error("eigenmatrix: no usable random combination after 5 attempts");
}

Certificate spectrum_sanity(const SchemeTable& s, const Spectrum& sp) {
  Certificate cert("eigenmatrix structure");
  const unsigned n = s.d + 1;
  const double tol = sp.tolerance;

  double row0_err = 0.0, col0_err = 0.0;
  for (unsigned j = 0; j < n; ++j) {
    row0_err = std::max(row0_err, std::abs(sp.P(0, j) - static_cast<double>(s.valencies[j])));
    col0_err = std::max(col0_err, std::abs(sp.P(j, 0) - 1.0));
  }
  cert.add_check("row 0 of P is the valency vector", refs::kEigenmatrix,
                 "max deviation <= " + decimal_string(tol),
                 "max deviation = " + decimal_string(row0_err), row0_err <= tol);
  cert.add_check("column 0 of P is all ones", refs::kEigenmatrix,
                 "max deviation <= " + decimal_string(tol),
                 "max deviation = " + decimal_string(col0_err), col0_err <= tol);

  const Eigen::MatrixXd pq = sp.P * sp.Q;
  const double target = static_cast<double>(s.n_points);
  double pq_err = 0.0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      pq_err = std::max(pq_err, std::abs(pq(i, j) - (i == j ? target : 0.0)));
    }
  }
  cert.add_check("P Q = |X| I", refs::kEigenmatrix,
                 "max deviation <= " + decimal_string(tol * target),
                 "max deviation = " + decimal_string(pq_err), pq_err <= tol * target);

  double sum = 0.0;
  bool positive = true;
  for (double m : sp.multiplicities) {
    sum += m;
    positive = positive && m > 0.0;
  }
  const double sum_err = std::abs(sum - target);
  cert.add_check("multiplicities positive, m_0 = 1, sum = |X|", refs::kEigenmatrix,
                 "sum deviation <= " + decimal_string(tol * target),
                 "sum deviation = " + decimal_string(sum_err) + (positive ? "" : ", nonpositive"),
                 positive && sum_err <= tol * target &&
                     std::abs(sp.multiplicities[0] - 1.0) <= tol);
  return cert;
}

Certificate check_pseudocyclic_spectral(const SchemeTable& s, const Spectrum& sp) {
  Certificate cert("pseudocyclicity (spectral)");
  const unsigned n = s.d + 1;
  const double tol = 10.0 * sp.tolerance;

  bool spectral = n > 1;
  std::uint64_t t = 0;
  if (n > 1) {
    const double first = sp.multiplicities[1];
    t = static_cast<std::uint64_t>(std::llround(first));
    for (unsigned j = 1; j < n; ++j) {
      if (std::abs(sp.multiplicities[j] - static_cast<double>(t)) > tol) spectral = false;
    }
  }
  cert.add_check("all nontrivial multiplicities equal an integer t", refs::kSpectralPseudo,
                 "common integer within " + decimal_string(tol),
                 spectral ? "t = " + std::to_string(t) : "multiplicities differ", spectral);

  const auto combinatorial = check_pseudocyclic(s);
  const bool agree = spectral == combinatorial.t.has_value() &&
                     (!spectral || *combinatorial.t == t);
  cert.add_check("spectral and combinatorial verdicts agree", refs::kSpectralPseudo,
                 "same verdict and same t",
                 std::string(spectral ? "spectral yes" : "spectral no") + ", combinatorial " +
                     (combinatorial.t ? "yes (t = " + std::to_string(*combinatorial.t) + ")"
                                      : "no"),
                 agree);
  return cert;
}

Certificate check_adjacency_spectrum(const SchemeTable& s, const Spectrum& sp,
                                     double tolerance) {
  Certificate cert("adjacency spectra vs eigenmatrix columns");
  if (!s.has_relation_map())
    throw std::invalid_argument("check_adjacency_spectrum: scheme has no relation map");
  if (s.n_points > 128)
    throw std::invalid_argument("check_adjacency_spectrum: intended for |X| <= 128");

  const std::size_t n = s.n_points;
  const unsigned classes = s.d + 1;
  double worst = 0.0;
  for (unsigned j = 0; j < classes; ++j) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (s.cls(x, y) == j) a(x, y) = 1.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> observed(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

    std::vector<double> expected;
    expected.reserve(n);
    for (unsigned i = 0; i < classes; ++i) {
      const auto copies = static_cast<std::size_t>(std::llround(sp.multiplicities[i]));
      for (std::size_t r = 0; r < copies; ++r) expected.push_back(sp.P(i, j));
    }
    if (expected.size() != n) {
      cert.add_check("class " + std::to_string(j) + " spectrum", refs::kEigenmatrix,
                     "multiplicities sum to |X|", "rounded multiplicities do not", false);
      return cert;
    }
    std::sort(observed.begin(), observed.end());
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(observed[i] - expected[i]));
    }
  }
  cert.add_check("adjacency eigenvalues match P columns with multiplicity", refs::kEigenmatrix,
                 "max deviation <= " + decimal_string(tolerance),
                 "max deviation = " + decimal_string(worst), worst <= tolerance);
  return cert;
}

}  // namespace conic
