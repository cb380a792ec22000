// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Time-bounded criteria measure wall time and fail when over budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "conic/cyclotomic.hpp"
#include "conic/elliptic.hpp"
#include "conic/fields.hpp"
#include "conic/permpoly.hpp"
#include "conic/rng.hpp"
#include "conic/scheme.hpp"
#include "conic/spectra.hpp"
#include "conic/srg.hpp"

namespace {

using conic::BinaryField;
using conic::CheckMode;
using conic::elem;
using conic::EllipticScheme;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::map<unsigned, EllipticScheme> g_elliptic;

const EllipticScheme& elliptic(unsigned m) {
  auto it = g_elliptic.find(m);
  if (it == g_elliptic.end()) {
    it = g_elliptic.emplace(m, conic::build_elliptic_scheme(BinaryField(m))).first;
  }
  return it->second;
}

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0) {
    outcome.require(seconds <= budget_seconds,
                    "over time budget (" + std::to_string(seconds) + " s > " +
                        std::to_string(budget_seconds) + " s)");
  }
  if (!outcome.pass) ++g_failures;
  std::printf("[%s] criterion %02d (%6.2f s): %s%s%s\n", outcome.pass ? "PASS" : "FAIL", id,
              seconds, label.c_str(), outcome.detail.empty() ? "" : " — ",
              outcome.detail.c_str());
  std::fflush(stdout);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  run_criterion(1, "elliptic scheme construction, q in {4,8,16,32}, exhaustive", 5.0,
                [](Outcome& o) {
                  for (unsigned m : {2u, 3u, 4u, 5u}) {
                    const auto& es = elliptic(m);
                    const std::uint64_t q = es.field.q();
                    o.require(es.lines.size() == q * (q - 1) / 2, "wrong |E|");
                    o.require(es.table.d == (q - 2) / 2, "wrong class count");
                    for (unsigned i = 1; i <= es.table.d; ++i) {
                      o.require(es.table.valencies[i] == q + 1, "wrong valency");
                    }
                    o.require(conic::verify_axioms(es.table).pass(), "axioms failed");
                  }
                });

  run_criterion(2, "closed-form intersection numbers equal brute force, q in {8,16,32}", 30.0,
                [](Outcome& o) {
                  for (unsigned m : {3u, 4u, 5u}) {
                    o.require(conic::verify_formula_vs_bruteforce(elliptic(m)).pass(),
                              "mismatch at q = " + std::to_string(1u << m));
                  }
                });

  run_criterion(
      3, "diagonal intersection sums equal q, q in {8,32,128}", 60.0, [](Outcome& o) {
        for (unsigned m : {3u, 5u}) {
          const auto& es = elliptic(m);
          for (elem b : es.labels) {
            o.require(conic::diagonal_intersection_sum(b, es.field) == es.field.q(),
                      "formula sum wrong at q = " + std::to_string(es.field.q()));
            std::uint64_t geometric = 0;
            for (elem a : es.labels) {
              const unsigned ca = es.class_of_label(a);
              geometric += es.table.p(ca, ca, es.class_of_label(b));
            }
            o.require(geometric == es.field.q(), "geometric sum wrong");
          }
        }
        // q = 128 through the (already verified) closed form, with a
        // geometric spot check on 10 sampled labels.
        const auto& big = elliptic(7);
        for (elem b : big.labels) {
          o.require(conic::diagonal_intersection_sum(b, big.field) == 128, "q=128 formula sum");
        }
        conic::SplitMix64 rng(0x5EED);
        for (int i = 0; i < 10; ++i) {
          const elem b = big.labels[rng.below(big.labels.size())];
          std::uint64_t geometric = 0;
          for (elem a : big.labels) {
            const unsigned ca = big.class_of_label(a);
            geometric += big.table.p(ca, ca, big.class_of_label(b));
          }
          o.require(geometric == 128, "q=128 geometric spot check");
        }
      });

  run_criterion(4, "Frobenius-twisted sums equal q+1, m in {3,5,7}, all coprime k", 0,
                [](Outcome& o) {
                  for (unsigned m : {3u, 5u, 7u}) {
                    const BinaryField f(m);
                    for (unsigned k = 1; k < m; ++k) {
                      if (std::gcd(k, m) != 1) continue;
                      for (elem b : f.trace_sphere_nonzero(0)) {
                        o.require(conic::frobenius_twist_sum(b, k, f) == f.q() + 1,
                                  "sum wrong at m = " + std::to_string(m));
                      }
                    }
                  }
                });

  run_criterion(5, "twisted pair counts q/2, q/2-3, q/2-1, m in {3,5,7}", 0, [](Outcome& o) {
    for (unsigned m : {3u, 5u, 7u}) {
      const BinaryField f(m);
      const std::uint64_t q = f.q();
      for (unsigned k = 1; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        for (elem b : f.trace_sphere_nonzero(0)) {
          o.require(conic::twisted_pair_count(b, k, 1, 1, f) == q / 2, "N_{k,1,1}");
          o.require(conic::twisted_pair_count(b, k, 0, 0, f) == q / 2 - 3, "N_{k,0,0}");
          o.require(conic::twisted_pair_count(b, k, 1, 0, f) == q / 2 - 1, "N_{k,1,0}");
        }
      }
    }
  });

  run_criterion(6, "trace-sphere bijectivity and parity criterion, 2 <= m <= 8", 0,
                [](Outcome& o) {
                  for (unsigned m = 2; m <= 8; ++m) {
                    const BinaryField f(m);
                    for (unsigned k = 1; k < m; ++k) {
                      if (std::gcd(k, m) != 1) continue;
                      for (int a : {0, 1}) {
                        for (int g : {0, 1}) {
                          const auto spec = conic::make_perm_poly_spec(m, k, a, g);
                          o.require(conic::check_trace_sphere_bijectivity(spec, f).pass(),
                                    "failed at m=" + std::to_string(m) +
                                        " k=" + std::to_string(k));
                        }
                      }
                    }
                  }
                });

  run_criterion(
      7, "fusion schemes pseudocyclic with t = m(q+1), m in {3,5,7}; design checks", 0,
      [](Outcome& o) {
        for (unsigned m : {3u, 5u, 7u}) {
          const auto& es = elliptic(m);
          auto fused = conic::build_fusion_scheme(es);
          o.require(fused.ok(), "fusion construction failed");
          if (!fused.ok()) continue;
          auto pc = conic::check_pseudocyclic(*fused.table);
          o.require(pc.t.has_value() && *pc.t == m * (es.field.q() + 1),
                    "t wrong at m = " + std::to_string(m));
          const CheckMode mode = (m == 7) ? CheckMode::Sampled : CheckMode::Exhaustive;
          o.require(conic::check_design(*fused.table, mode, 10000, 0x5EED).pass(),
                    "design check failed at m = " + std::to_string(m));
        }
      });

  run_criterion(
      8, "spectral multiplicities within 1e-6 of t; P Q = |X| I; verdicts agree", 0,
      [](Outcome& o) {
        std::vector<std::pair<std::string, conic::SchemeTable>> schemes;
        schemes.emplace_back("elliptic q=8", elliptic(3).table);
        schemes.emplace_back("elliptic q=32", elliptic(5).table);
        {
          auto fused = conic::build_fusion_scheme(elliptic(5));
          o.require(fused.ok(), "fusion q=32");
          schemes.emplace_back("fusion q=32", std::move(*fused.table));
        }
        for (auto [p, e] : {std::pair<std::uint32_t, std::uint64_t>{7, 3}, {11, 5}}) {
          auto built =
              conic::build_cyclotomic_scheme(conic::make_cyclotomic_spec_prime(p, e));
          o.require(built.ok(), "cyclotomic build");
          schemes.emplace_back("cyclotomic F_" + std::to_string(p), std::move(*built.table));
        }
        for (const auto& [name, table] : schemes) {
          const auto sp = conic::eigenmatrix(table);
          o.require(conic::spectrum_sanity(table, sp).pass(), name + ": P/Q structure");
          o.require(conic::check_pseudocyclic_spectral(table, sp).pass(),
                    name + ": spectral pseudocyclicity");
          auto pc = conic::check_pseudocyclic(table);
          o.require(pc.t.has_value(), name + ": combinatorial verdict");
          if (pc.t) {
            for (unsigned i = 1; i <= table.d; ++i) {
              o.require(std::abs(sp.multiplicities[i] - static_cast<double>(*pc.t)) <= 1e-6,
                        name + ": multiplicity deviates");
            }
          }
        }
      });

  run_criterion(
      9, "cyclotomic schemes: t = f, Gauss periods, eigenvalue multisets", 0, [](Outcome& o) {
        struct Row {
          std::uint32_t p;
          unsigned m;
          std::uint64_t e;
        };
        for (const Row row : {Row{7, 0, 3}, Row{11, 0, 5}, Row{13, 0, 3}, Row{0, 3, 7}}) {
          const auto spec = row.p ? conic::make_cyclotomic_spec_prime(row.p, row.e)
                                  : conic::make_cyclotomic_spec_binary(row.m, row.e);
          auto built = conic::build_cyclotomic_scheme(spec);
          o.require(built.ok(), "construction failed");
          if (!built.ok()) continue;
          o.require(conic::check_cyclotomic_pseudocyclic(spec, *built.table).pass(),
                    "t != f");
          const auto periods = conic::gauss_periods(spec);
          std::complex<double> sum = 0.0;
          for (const auto& eta : periods) sum += eta;
          o.require(std::abs(sum + 1.0) <= 1e-9, "period sum");
          o.require(conic::check_eigenvalue_multiset(spec, *built.table, 1e-6).pass(),
                    "eigenvalue multiset");
        }
      });

  run_criterion(
      10, "exact SRG certification at q=8: (784,243,82,72) and (784,729,676,702)", 60.0,
      [](Outcome& o) {
        {
          const conic::TensorSrg g(elliptic(3).table);
          o.require(g.claimed() == conic::latin_square_params(28, 9), "claimed params");
          o.require(conic::certify_srg(g, CheckMode::Exhaustive).pass(), "elliptic graph");
        }
        {
          auto fused = conic::build_fusion_scheme(elliptic(3));
          o.require(fused.ok(), "fusion build");
          const conic::TensorSrg g(*fused.table);
          o.require(g.claimed() == conic::SrgParams{784, 729, 676, 702, false},
                    "fusion claimed params");
          o.require(conic::certify_srg(g, CheckMode::Exhaustive).pass(), "fusion graph");
        }
      });

  run_criterion(
      11, "sampled SRG certification at q=32, m=5: 10^5 stratified pairs", 600.0,
      [](Outcome& o) {
        auto fused = conic::build_fusion_scheme(elliptic(5));
        o.require(fused.ok(), "fusion build");
        const conic::TensorSrg g(*fused.table);
        const auto want = conic::fusion_srg_params(32, 5);
        o.require(g.claimed() == want, "claimed params");
        o.require(want.k == 81675 && want.lambda == 27226 && want.mu == 27060,
                  "closed-form params");
        o.require(conic::certify_srg(g, CheckMode::Sampled, 100000, 0x5EED).pass(),
                  "sampled violations found");
      });

  run_criterion(12, "certificates flag the published vertex count (784 vs 1568 at q=8)", 0,
                [](Outcome& o) {
                  const auto c8 = conic::printed_vertex_count_erratum(8, 784);
                  o.require(c8.pass, "q=8 erratum not flagged");
                  o.require(c8.observed.find("1568") != std::string::npos, "q=8 value");
                  const auto c32 = conic::printed_vertex_count_erratum(32, 246016);
                  o.require(c32.pass, "q=32 erratum not flagged");
                });

  run_criterion(
      13, "byte-identical certificates on repeated runs (CLI)", 0, [](Outcome& o) {
        namespace fs = std::filesystem;
        const std::string cli = CONIC_CLI_PATH;
        const std::string cases[] = {
            "elliptic verify --m 3",
            "fusion verify --m 3",
            "cyclotomic verify --p 7 --e 3",
            "spectra --scheme elliptic --m 3",
            "srg build --scheme elliptic --m 3 --certify sampled --samples 500",
        };
        int idx = 0;
        for (const std::string& args : cases) {
          const fs::path a = fs::temp_directory_path() /
                             ("conic_accept_a_" + std::to_string(idx));
          const fs::path b = fs::temp_directory_path() /
                             ("conic_accept_b_" + std::to_string(idx));
          ++idx;
          const int ra = std::system((cli + " " + args + " --out " + a.string()).c_str());
          const int rb = std::system((cli + " " + args + " --out " + b.string()).c_str());
          o.require(WEXITSTATUS(ra) == 0 && WEXITSTATUS(rb) == 0, args + ": nonzero exit");
          const std::string bytes_a = slurp(a), bytes_b = slurp(b);
          o.require(!bytes_a.empty() && bytes_a == bytes_b, args + ": output differs");
          fs::remove(a);
          fs::remove(b);
        }
      });

  if (g_failures == 0) {
    std::printf("all 13 acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
