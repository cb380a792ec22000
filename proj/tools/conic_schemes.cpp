// Command-line surface: builds the schemes, runs the verification suites and
// writes machine-readable JSON certificates.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (witness
// included in the bundle), 2 usage or configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conic/cyclotomic.hpp"
#include "conic/elliptic.hpp"
#include "conic/fields.hpp"
#include "conic/geometry.hpp"
#include "conic/kernels.hpp"
#include "conic/parallel.hpp"
#include "conic/permpoly.hpp"
#include "conic/refs.hpp"
#include "conic/report.hpp"
#include "conic/scheme.hpp"
#include "conic/spectra.hpp"
#include "conic/srg.hpp"
#include "conic/version.hpp"

namespace {

using conic::Certificate;
using conic::CheckMode;
using conic::CheckResult;
using nlohmann::json;

struct Options {
  unsigned m = 0;
  std::uint32_t p = 0;
  std::uint64_t e = 0;
  int k = -1;
  int alpha = -1;
  int gamma = -1;
  std::string modulus;
  std::string scheme;
  std::string mode;  // "", "exact", "sampled"
  std::size_t samples = 100000;
  std::uint64_t seed = 0x5EED;
  double tolerance = 1e-6;
  std::string out;
  std::string edges;
};

int write_bundle(const Options& opt, const std::string& command, json config,
                 const std::vector<Certificate>& certs, json extra = json::object()) {
  config["command"] = command;
  config["seed"] = opt.seed;
  config["threads"] = conic::thread_cap();
  config["kernel"] = conic::kern::active_ops().name;
  json bundle = conic::report_bundle(config, certs);
  for (auto& [key, value] : extra.items()) bundle[key] = value;

  const std::string text = bundle.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
    f << text;
  }
  return bundle["pass"].get<bool>() ? 0 : 1;
}

std::uint64_t parse_modulus(const std::string& bits) {
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("modulus must be a binary string");
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

conic::BinaryField make_field(const Options& opt) {
  if (opt.m < 2) throw std::invalid_argument("--m is required (m >= 2)");
  if (!opt.modulus.empty()) return {opt.m, parse_modulus(opt.modulus)};
  return conic::BinaryField(opt.m);
}

CheckMode resolve_mode(const Options& opt, std::size_t n_points) {
  if (opt.mode == "exact") return CheckMode::Exhaustive;
  if (opt.mode == "sampled") return CheckMode::Sampled;
  return n_points <= 1000 ? CheckMode::Exhaustive : CheckMode::Sampled;
}

Certificate elliptic_shape_certificate(const conic::EllipticScheme& es) {
  const auto& f = es.field;
  const std::uint64_t q = f.q();
  Certificate cert("elliptic scheme shape");
  cert.add_check("point count |E| = q(q-1)/2", conic::refs::kExteriorLines,
                 std::to_string(q * (q - 1) / 2), std::to_string(es.lines.size()),
                 es.lines.size() == q * (q - 1) / 2);
  cert.add_check("class count d = (q-2)/2", conic::refs::kOrbitals,
                 std::to_string((q - 2) / 2), std::to_string(es.table.d),
                 es.table.d == (q - 2) / 2);
  bool valencies_ok = true;
  for (unsigned i = 1; i <= es.table.d; ++i) {
    valencies_ok = valencies_ok && es.table.valencies[i] == q + 1;
  }
  cert.add_check("valencies n_a = q+1", conic::refs::kEllipticValency, std::to_string(q + 1),
                 valencies_ok ? "holds for all classes" : "violated", valencies_ok);
  return cert;
}

Certificate diagonal_sum_certificate(const conic::EllipticScheme& es) {
  const auto& f = es.field;
  const std::uint64_t q = f.q();
  Certificate cert("diagonal intersection sums");
  std::optional<json> witness;
  for (conic::elem b : es.labels) {
    const std::uint64_t formula = conic::diagonal_intersection_sum(b, f);
    std::uint64_t geometric = 0;
    for (conic::elem a : es.labels) {
      const unsigned ca = es.class_of_label(a);
      geometric += es.table.p(ca, ca, es.class_of_label(b));
    }
    if ((formula != q || geometric != q) && !witness) {
      witness = json{{"b", b}, {"formula", formula}, {"geometric", geometric}};
    }
  }
  cert.add_check("sum over a of p^a_ab = q for every b (formula and geometric)",
                 conic::refs::kDiagonalSum, std::to_string(q), witness ? "violated" : "holds",
                 !witness, witness);
  return cert;
}

Certificate twisted_sum_certificate(const conic::EllipticScheme& es) {
  const auto& f = es.field;
  const unsigned m = f.degree();
  const std::uint64_t q = f.q();
  Certificate cert("Frobenius-twisted sums");
  std::optional<json> witness;
  std::size_t checked = 0;
  for (unsigned k = 1; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    for (conic::elem b : es.labels) {
      ++checked;
      const std::uint64_t sum = conic::frobenius_twist_sum(b, k, f);
      if (sum != q + 1 && !witness) witness = json{{"k", k}, {"b", b}, {"sum", sum}};
    }
  }
  cert.add_check("sum over c of p^b_{c,c^sigma} = q+1 (" + std::to_string(checked) + " cases)",
                 conic::refs::kTwistSum, std::to_string(q + 1), witness ? "violated" : "holds",
                 !witness, witness);
  return cert;
}

Certificate twisted_pair_certificate(const conic::EllipticScheme& es) {
  const auto& f = es.field;
  const unsigned m = f.degree();
  const std::uint64_t q = f.q();
  Certificate cert("twisted pair counts");
  struct Row {
    int e, fbit;
    std::uint64_t expected;
    const char* ref;
  };
  const Row rows[] = {{1, 1, q / 2, conic::refs::kTwistedPairs},
                      {0, 0, q / 2 - 3, conic::refs::kTwistedPairs},
                      {1, 0, q / 2 - 1, conic::refs::kTwistedPairs},
                      {0, 1, q / 2, conic::refs::kTwistedPairsComplement}};
  for (const Row& row : rows) {
    std::optional<json> witness;
    for (unsigned k = 1; k < m && !witness; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (conic::elem b : es.labels) {
        const std::uint64_t n = conic::twisted_pair_count(b, k, row.e, row.fbit, f);
        if (n != row.expected) {
          witness = json{{"k", k}, {"b", b}, {"count", n}};
          break;
        }
      }
    }
    cert.add_check("N_{k," + std::to_string(row.e) + "," + std::to_string(row.fbit) +
                       "} for all valid (b, k)",
                   row.ref, std::to_string(row.expected), witness ? "violated" : "holds",
                   !witness, witness);
  }
  return cert;
}

conic::SchemeTable build_scheme_for(const Options& opt, std::string* subject) {
  conic::VerifyOptions vopts;
  vopts.seed = opt.seed;
  if (opt.scheme == "elliptic") {
    const conic::BinaryField f = make_field(opt);
    *subject = "elliptic scheme, q = " + std::to_string(f.q());
    return conic::build_elliptic_scheme(f, vopts).table;
  }
  if (opt.scheme == "fusion") {
    const conic::BinaryField f = make_field(opt);
    *subject = "fusion scheme, q = " + std::to_string(f.q());
    const auto es = conic::build_elliptic_scheme(f, vopts);
    auto fused = conic::build_fusion_scheme(es, vopts);
    if (!fused.ok()) throw std::runtime_error("fusion scheme construction failed");
    return std::move(*fused.table);
  }
  if (opt.scheme == "cyclotomic") {
    if (opt.e == 0) throw std::invalid_argument("--e is required for cyclotomic schemes");
    const auto spec = opt.p ? conic::make_cyclotomic_spec_prime(opt.p, opt.e)
                            : conic::make_cyclotomic_spec_binary(opt.m, opt.e);
    *subject = "cyclotomic scheme, q = " + std::to_string(spec.q) +
               ", e = " + std::to_string(spec.e);
    conic::VerifyOptions copts;
    copts.seed = opt.seed;
    auto built = conic::build_cyclotomic_scheme(spec, copts);
    if (!built.ok()) throw std::runtime_error("cyclotomic scheme construction failed");
    return std::move(*built.table);
  }
  throw std::invalid_argument("--scheme must be elliptic, fusion or cyclotomic");
}

int run_field(const Options& opt) {
  const conic::BinaryField f = make_field(opt);
  Certificate cert("binary field context");
  {
    std::string bits;
    for (int i = static_cast<int>(f.degree()); i >= 0; --i) {
      bits += ((f.modulus() >> i) & 1) ? '1' : '0';
    }
    cert.add_pass("modulus " + bits + " is irreducible of degree " + std::to_string(f.degree()),
                  "element encoding: bit i is the coefficient of alpha^i", "irreducible",
                  "irreducible");
  }
  if (f.degree() <= 16) {
    const auto t0 = f.trace_sphere(0), t1 = f.trace_sphere(1);
    cert.add_check("trace spheres balance: |T_0| = |T_1| = q/2",
                   "T_e = {x : Tr(x) = e}", std::to_string(f.q() / 2),
                   std::to_string(t0.members.size()) + " and " + std::to_string(t1.members.size()),
                   t0.members.size() == f.q() / 2 && t1.members.size() == f.q() / 2);
    bool as_ok = true;
    for (conic::elem w : t0.members) {
      const auto sol = f.artin_schreier_solve(w);
      as_ok = as_ok && sol.size() == 2 && f.square(sol[0]) == (sol[0] ^ w) &&
              sol[1] == (sol[0] ^ 1);
    }
    for (conic::elem w : t1.members) as_ok = as_ok && f.artin_schreier_solve(w).empty();
    cert.add_check("z^2 + z = w solvable exactly on T_0, solutions differ by 1",
                   "Artin-Schreier equations in characteristic 2", "holds",
                   as_ok ? "holds" : "violated", as_ok);
  }
  json config{{"m", f.degree()}, {"modulus", f.modulus()}};
  return write_bundle(opt, "field", config, {cert});
}

int run_elliptic(const Options& opt, bool verify) {
  conic::VerifyOptions vopts;
  vopts.seed = opt.seed;
  const conic::BinaryField f = make_field(opt);
  const auto es = conic::build_elliptic_scheme(f, vopts);

  std::vector<Certificate> certs;
  certs.push_back(elliptic_shape_certificate(es));
  certs.push_back(conic::verify_axioms(es.table));
  json extra = json::object();
  if (verify) {
    certs.push_back(conic::verify_formula_vs_bruteforce(es));
    certs.push_back(diagonal_sum_certificate(es));
    auto pc = conic::check_pseudocyclic(es.table);
    certs.push_back(std::move(pc.certificate));
    certs.push_back(conic::check_design(es.table, resolve_mode(opt, es.table.n_points),
                                        opt.samples, opt.seed));
  } else {
    extra["scheme"] = es.table.to_json();
  }
  json config{{"m", opt.m}};
  return write_bundle(opt, verify ? "elliptic verify" : "elliptic build", config, certs, extra);
}

int run_fusion(const Options& opt, bool verify) {
  conic::VerifyOptions vopts;
  vopts.seed = opt.seed;
  const conic::BinaryField f = make_field(opt);
  const auto es = conic::build_elliptic_scheme(f, vopts);
  const auto orbits = conic::frobenius_orbits(f);
  auto fused = conic::build_fusion_scheme(es, vopts);

  std::vector<Certificate> certs;
  {
    Certificate cert("Frobenius orbits of T_0^*");
    bool sizes_ok = true;
    std::size_t total = 0;
    for (const auto& orbit : orbits.orbits) {
      sizes_ok = sizes_ok && (f.degree() % orbit.size() == 0);
      total += orbit.size();
    }
    cert.add_check("orbits partition T_0^* with sizes dividing m",
                   "orbits of x -> x^2 acting on T_0^*",
                   std::to_string(es.labels.size()) + " elements",
                   std::to_string(total) + " elements in " + std::to_string(orbits.orbits.size()) +
                       " orbits",
                   sizes_ok && total == es.labels.size());
    certs.push_back(std::move(cert));
  }
  certs.push_back(fused.certificate);
  json extra = json::object();
  if (fused.ok()) {
    if (verify) {
      certs.push_back(conic::verify_axioms(*fused.table));
      certs.push_back(conic::verify_fusion_pseudocyclic(es, *fused.table));
      if (f.degree() % 2 == 1) certs.push_back(twisted_sum_certificate(es));
      if (f.degree() % 2 == 1 && f.q() >= 8) certs.push_back(twisted_pair_certificate(es));
      certs.push_back(conic::check_design(*fused.table, resolve_mode(opt, fused.table->n_points),
                                          opt.samples, opt.seed));
    } else {
      extra["scheme"] = fused.table->to_json();
    }
  }
  json config{{"m", opt.m}, {"samples", opt.samples}};
  return write_bundle(opt, verify ? "fusion verify" : "fusion build", config, certs, extra);
}

int run_permpoly(const Options& opt) {
  const conic::BinaryField f = make_field(opt);
  std::vector<unsigned> ks;
  if (opt.k >= 1) {
    ks.push_back(static_cast<unsigned>(opt.k));
  } else {
    for (unsigned k = 1; k < opt.m; ++k) {
      if (std::gcd(k, opt.m) == 1) ks.push_back(k);
    }
  }
  std::vector<int> alphas = opt.alpha >= 0 ? std::vector<int>{opt.alpha} : std::vector<int>{0, 1};
  std::vector<int> gammas = opt.gamma >= 0 ? std::vector<int>{opt.gamma} : std::vector<int>{0, 1};

  std::vector<Certificate> certs;
  json reports = json::array();
  for (unsigned k : ks) {
    for (int a : alphas) {
      for (int g : gammas) {
        const auto spec = conic::make_perm_poly_spec(opt.m, k, a, g);
        certs.push_back(conic::check_trace_sphere_bijectivity(spec, f));
        if (a == 0 && g == 0) certs.push_back(conic::check_composition_identities(spec, f));
        reports.push_back(conic::perm_poly_report(spec, f));
      }
    }
  }
  json config{{"m", opt.m}, {"k", opt.k}, {"alpha", opt.alpha}, {"gamma", opt.gamma}};
  return write_bundle(opt, "permpoly check", config, certs, json{{"reports", reports}});
}

int run_cyclotomic(const Options& opt, bool verify) {
  if (opt.e == 0) throw std::invalid_argument("--e is required");
  if ((opt.p == 0) == (opt.m == 0))
    throw std::invalid_argument("give exactly one of --p (prime field) or --m (binary field)");
  const auto spec = opt.p ? conic::make_cyclotomic_spec_prime(opt.p, opt.e)
                          : conic::make_cyclotomic_spec_binary(opt.m, opt.e);
  conic::VerifyOptions vopts;
  vopts.seed = opt.seed;
  auto built = conic::build_cyclotomic_scheme(spec, vopts);

  std::vector<Certificate> certs;
  certs.push_back(built.certificate);
  json extra = json::object();
  if (built.ok()) {
    if (verify) {
      certs.push_back(conic::verify_axioms(*built.table));
      certs.push_back(conic::check_cyclotomic_pseudocyclic(spec, *built.table));
      certs.push_back(conic::check_cyclotomic_numbers(spec, *built.table, 50, opt.seed));
      {
        Certificate cert("Gauss periods");
        const auto periods = conic::gauss_periods(spec);
        std::complex<double> sum = 0.0;
        json listed = json::array();
        for (const auto& eta : periods) {
          sum += eta;
          listed.push_back(json{{"re", conic::decimal_string(eta.real())},
                                {"im", conic::decimal_string(eta.imag())}});
        }
        const double err = std::abs(sum + 1.0);
        CheckResult r;
        r.name = "periods sum to -1";
        r.reference = conic::refs::kGaussPeriods;
        r.expected = "deviation <= 1e-09";
        r.observed = "deviation = " + conic::decimal_string(err);
        r.pass = err <= 1e-9;
        r.parameters = json{{"periods", listed}};
        cert.add(std::move(r));
        certs.push_back(std::move(cert));
      }
      certs.push_back(conic::check_eigenvalue_multiset(spec, *built.table, opt.tolerance));
    } else {
      extra["scheme"] = built.table->to_json();
    }
  }
  json config{{"p", opt.p}, {"m", opt.m}, {"e", opt.e}};
  return write_bundle(opt, verify ? "cyclotomic verify" : "cyclotomic build", config, certs,
                      extra);
}

int run_spectra(const Options& opt) {
  std::string subject;
  const auto table = build_scheme_for(opt, &subject);
  const auto sp = conic::eigenmatrix(table, opt.seed, 1e-8, opt.tolerance);
  std::vector<Certificate> certs;
  certs.push_back(conic::spectrum_sanity(table, sp));
  certs.push_back(conic::check_pseudocyclic_spectral(table, sp));
  json config{{"scheme", opt.scheme}, {"m", opt.m},
              {"p", opt.p},           {"e", opt.e},
              {"tolerance", conic::decimal_string(opt.tolerance)}};
  return write_bundle(opt, "spectra", config, certs,
                      json{{"spectrum", sp.to_json()}, {"subject", subject}});
}

int run_srg(const Options& opt, bool certify_only) {
  std::string subject;
  const auto table = build_scheme_for(opt, &subject);
  const conic::TensorSrg graph(table);

  std::vector<Certificate> certs;
  const bool run_certification = certify_only || !opt.mode.empty();
  if (run_certification) {
    const CheckMode mode = opt.mode == "sampled"
                               ? CheckMode::Sampled
                               : (opt.mode == "exact" || graph.packed() ? CheckMode::Exhaustive
                                                                        : CheckMode::Sampled);
    certs.push_back(conic::certify_srg(graph, mode, opt.samples, opt.seed));
  } else {
    Certificate cert("tensor graph parameters");
    const auto& p = graph.claimed();
    cert.add_pass("claimed Latin-square-type parameters", conic::refs::kLatinSquare,
                  "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " +
                      std::to_string(p.lambda) + ", " + std::to_string(p.mu) + ")",
                  "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " +
                      std::to_string(p.lambda) + ", " + std::to_string(p.mu) + ")");
    certs.push_back(std::move(cert));
  }
  if (opt.scheme == "elliptic" || opt.scheme == "fusion") {
    const conic::BinaryField f = make_field(opt);
    Certificate cert("published parameter comparison");
    cert.add(conic::printed_vertex_count_erratum(f.q(), graph.v()));
    certs.push_back(std::move(cert));
  }
  if (!opt.edges.empty()) {
    std::ofstream out(opt.edges, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write edge list to " + opt.edges);
    graph.write_edge_list(out);
  }
  json config{{"scheme", opt.scheme}, {"m", opt.m},       {"p", opt.p},
              {"e", opt.e},           {"mode", opt.mode}, {"samples", opt.samples}};
  return write_bundle(opt, certify_only ? "srg certify" : "srg build", config, certs,
                      json{{"subject", subject}, {"v", graph.v()}, {"t", graph.t()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Association schemes on exterior lines to a conic: construction and certification"};
  app.set_version_flag("--version", conic::kToolVersion);
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    cmd->add_option("--tolerance", opt.tolerance, "numeric tolerance");
    cmd->add_option("--out", opt.out, "write the JSON bundle here instead of stdout");
  };

  CLI::App* field = app.add_subcommand("field", "build a field context and certify its basics");
  field->add_option("--m", opt.m, "extension degree")->required();
  field->add_option("--modulus", opt.modulus, "modulus coefficient bits, high degree first");
  add_common(field);

  CLI::App* elliptic = app.add_subcommand("elliptic", "the scheme on exterior lines");
  CLI::App* elliptic_build = elliptic->add_subcommand("build", "construct and export");
  CLI::App* elliptic_verify = elliptic->add_subcommand("verify", "run the identity suite");
  for (CLI::App* cmd : {elliptic_build, elliptic_verify}) {
    cmd->add_option("--m", opt.m, "extension degree")->required();
    cmd->add_option("--modulus", opt.modulus, "modulus bits");
    cmd->add_option("--samples", opt.samples, "sample count for sampled checks");
    cmd->add_option("--mode", opt.mode, "exact|sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    add_common(cmd);
  }

  CLI::App* fusion = app.add_subcommand("fusion", "the Frobenius fusion scheme");
  CLI::App* fusion_build = fusion->add_subcommand("build", "construct and export");
  CLI::App* fusion_verify = fusion->add_subcommand("verify", "run the identity suite");
  for (CLI::App* cmd : {fusion_build, fusion_verify}) {
    cmd->add_option("--m", opt.m, "extension degree")->required();
    cmd->add_option("--modulus", opt.modulus, "modulus bits");
    cmd->add_option("--samples", opt.samples, "sample count for sampled checks");
    cmd->add_option("--mode", opt.mode, "exact|sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    add_common(cmd);
  }

  CLI::App* permpoly = app.add_subcommand("permpoly", "the polynomial family H_{alpha,gamma}");
  CLI::App* permpoly_check = permpoly->add_subcommand("check", "trace-sphere bijectivity");
  permpoly_check->add_option("--m", opt.m, "extension degree")->required();
  permpoly_check->add_option("--k", opt.k, "Frobenius exponent (default: all coprime k)");
  permpoly_check->add_option("--alpha", opt.alpha, "alpha bit (default: both)");
  permpoly_check->add_option("--gamma", opt.gamma, "gamma bit (default: both)");
  add_common(permpoly_check);

  CLI::App* cyclotomic = app.add_subcommand("cyclotomic", "cyclotomic schemes");
  CLI::App* cyclotomic_build = cyclotomic->add_subcommand("build", "construct and export");
  CLI::App* cyclotomic_verify = cyclotomic->add_subcommand("verify", "run the identity suite");
  for (CLI::App* cmd : {cyclotomic_build, cyclotomic_verify}) {
    cmd->add_option("--p", opt.p, "odd prime field size");
    cmd->add_option("--m", opt.m, "binary field degree");
    cmd->add_option("--e", opt.e, "coset count, e | q-1")->required();
    add_common(cmd);
  }

  CLI::App* spectra = app.add_subcommand("spectra", "numeric eigenmatrices and multiplicities");
  spectra->add_option("--scheme", opt.scheme, "elliptic|fusion|cyclotomic")->required();
  spectra->add_option("--m", opt.m, "field degree");
  spectra->add_option("--p", opt.p, "prime field size");
  spectra->add_option("--e", opt.e, "coset count for cyclotomic");
  add_common(spectra);

  CLI::App* srg = app.add_subcommand("srg", "Latin-square-type strongly regular graphs");
  CLI::App* srg_build = srg->add_subcommand("build", "construct the tensor graph");
  CLI::App* srg_certify = srg->add_subcommand("certify", "certify the parameters");
  for (CLI::App* cmd : {srg_build, srg_certify}) {
    cmd->add_option("--scheme", opt.scheme, "elliptic|fusion|cyclotomic")->required();
    cmd->add_option("--m", opt.m, "field degree");
    cmd->add_option("--p", opt.p, "prime field size");
    cmd->add_option("--e", opt.e, "coset count for cyclotomic");
    cmd->add_option("--mode,--certify", opt.mode, "exact|sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    cmd->add_option("--samples", opt.samples, "pair sample count");
    cmd->add_option("--edges", opt.edges, "write a plain-text edge list here");
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (field->parsed()) return run_field(opt);
    if (elliptic_build->parsed()) return run_elliptic(opt, false);
    if (elliptic_verify->parsed()) return run_elliptic(opt, true);
    if (fusion_build->parsed()) return run_fusion(opt, false);
    if (fusion_verify->parsed()) return run_fusion(opt, true);
    if (permpoly_check->parsed()) return run_permpoly(opt);
    if (cyclotomic_build->parsed()) return run_cyclotomic(opt, false);
    if (cyclotomic_verify->parsed()) return run_cyclotomic(opt, true);
    if (spectra->parsed()) return run_spectra(opt);
    if (srg_build->parsed()) return run_srg(opt, false);
    if (srg_certify->parsed()) return run_srg(opt, true);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
