#include "conic/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "conic/parallel.hpp"
#include "conic/refs.hpp"
#include "conic/rng.hpp"

namespace conic {

namespace {

constexpr std::size_t kDenseCutoff = 10000;

nlohmann::json pair_witness(std::size_t x, std::size_t y) {
  return nlohmann::json{{"x", x}, {"y", y}};
}

// Per-pair triangle count table with a touched-cell list so the scratch
// space is cleared in O(touched) rather than O(d^2).
struct CountScratch {
  std::vector<std::uint32_t> table;
  std::vector<std::uint32_t> touched;

  explicit CountScratch(unsigned d) : table((d + 1) * std::size_t{d + 1}, 0) {
    touched.reserve(table.size());
  }

  void bump(unsigned i, unsigned j, unsigned d) {
    const std::uint32_t idx = i * (d + 1) + j;
    if (table[idx]++ == 0) touched.push_back(idx);
  }

  void clear() {
    for (std::uint32_t idx : touched) table[idx] = 0;
    touched.clear();
  }
};

// Compares the triangle counts of pair (x, y) in class k against the tensor.
// Returns the first mismatching (i, j) if any. Total count over all cells is
// n for both sides, so agreement on touched cells implies full agreement.
std::optional<std::pair<unsigned, unsigned>> pair_mismatch(const SchemeTable& t,
                                                           std::size_t x, std::size_t y,
                                                           unsigned k, CountScratch& scratch) {
  const unsigned s = t.d + 1;
  for (std::size_t z = 0; z < t.n_points; ++z) scratch.bump(t.cls(x, z), t.cls(z, y), t.d);
  std::optional<std::pair<unsigned, unsigned>> bad;
  std::sort(scratch.touched.begin(), scratch.touched.end());
  for (std::uint32_t idx : scratch.touched) {
    const unsigned i = idx / s, j = idx % s;
    if (scratch.table[idx] != t.p(k, i, j)) {
      bad = {i, j};
      break;
    }
  }
  scratch.clear();
  return bad;
}

struct ConstancyViolation {
  std::size_t x, y;
  unsigned k, i, j;
  bool operator<(const ConstancyViolation& o) const {
    return std::pair{x, y} < std::pair{o.x, o.y};
  }
};

// Exhaustive constancy over ordered pairs with x <= y. Together with tensor
// symmetry p^k_ij = p^k_ji this covers all ordered pairs.
std::optional<ConstancyViolation> constancy_exhaustive(const SchemeTable& t) {
  const std::size_t n = t.n_points;
  std::vector<std::optional<ConstancyViolation>> found(64);
  parallel_chunks(n, [&](unsigned chunk, std::size_t lo, std::size_t hi) {
    CountScratch scratch(t.d);
    for (std::size_t x = lo; x < hi && !found[chunk]; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        const unsigned k = t.cls(x, y);
        if (auto bad = pair_mismatch(t, x, y, k, scratch)) {
          found[chunk] = ConstancyViolation{x, y, k, bad->first, bad->second};
          break;
        }
      }
    }
  });
  std::optional<ConstancyViolation> best;
  for (const auto& f : found) {
    if (f && (!best || *f < *best)) best = f;
  }
  return best;
}

std::optional<ConstancyViolation> constancy_sampled(const SchemeTable& t,
                                                    const VerifyOptions& opts) {
  const std::size_t n = t.n_points;
  std::vector<std::optional<ConstancyViolation>> found(t.d + 1);
  parallel_chunks(t.d + 1, [&](unsigned, std::size_t lo, std::size_t hi) {
    CountScratch scratch(t.d);
    for (std::size_t k = lo; k < hi; ++k) {
      SplitMix64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * (k + 1)));
      std::size_t accepted = 0, attempts = 0;
      const std::size_t max_attempts = opts.samples_per_class * n;
      while (accepted < opts.samples_per_class && attempts < max_attempts) {
        ++attempts;
        const std::size_t x = rng.below(n), y = rng.below(n);
        if (t.cls(x, y) != k) continue;
        ++accepted;
        if (auto bad = pair_mismatch(t, x, y, static_cast<unsigned>(k), scratch)) {
          found[k] = ConstancyViolation{x, y, static_cast<unsigned>(k), bad->first, bad->second};
          break;
        }
      }
    }
  });
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

// Fills valencies and the tensor from one representative pair per class.
// Returns the index of a class with no representative, if any.
std::optional<unsigned> compute_tensor(SchemeTable& t) {
  const std::size_t n = t.n_points;
  const unsigned s = t.d + 1;
  std::vector<std::pair<std::size_t, std::size_t>> reps(s, {n, n});
  unsigned found = 0;
  for (std::size_t x = 0; x < n && found < s; ++x) {
    for (std::size_t y = 0; y < n && found < s; ++y) {
      const unsigned k = t.cls(x, y);
      if (k < s && reps[k].first == n) {
        reps[k] = {x, y};
        ++found;
      }
    }
  }
  for (unsigned k = 0; k < s; ++k) {
    if (reps[k].first == n) return k;
  }

  t.p_tensor.assign(static_cast<std::size_t>(s) * s * s, 0);
  parallel_chunks(s, [&](unsigned, std::size_t klo, std::size_t khi) {
    for (std::size_t k = klo; k < khi; ++k) {
      const auto [x, y] = reps[k];
      for (std::size_t z = 0; z < n; ++z) {
        const unsigned i = t.cls(x, z), j = t.cls(z, y);
        ++t.p_tensor[(k * s + i) * s + j];
      }
    }
  });
  t.valencies.assign(s, 0);
  for (unsigned j = 0; j < s; ++j) t.valencies[j] = t.p(0, j, j);
  return std::nullopt;
}

// Relational sanity shared by construction: diagonal exactly class 0,
// symmetry, class values in range. Exhaustive when dense storage exists.
void relational_checks(const SchemeTable& t, Certificate& cert) {
  const std::size_t n = t.n_points;

  std::optional<std::size_t> bad_diag;
  for (std::size_t x = 0; x < n; ++x) {
    if (t.cls(x, x) != 0) {
      bad_diag = x;
      break;
    }
  }
  cert.add_check("diagonal relation", refs::kAxioms, "class(x,x) = 0 for all x",
                 bad_diag ? "violated" : "holds", !bad_diag,
                 bad_diag ? std::optional<nlohmann::json>(pair_witness(*bad_diag, *bad_diag))
                          : std::nullopt);

  struct PairBad {
    std::size_t x, y;
    const char* what;
  };
  std::vector<std::optional<PairBad>> found(64);
  parallel_chunks(n, [&](unsigned chunk, std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi && !found[chunk]; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const unsigned a = t.cls(x, y), b = t.cls(y, x);
        if (a > t.d || b > t.d) {
          found[chunk] = PairBad{x, y, "class index out of range"};
          break;
        }
        if (a != b) {
          found[chunk] = PairBad{x, y, "classifier not symmetric"};
          break;
        }
        if (a == 0) {
          found[chunk] = PairBad{x, y, "off-diagonal pair in the diagonal class"};
          break;
        }
      }
    }
  });
  std::optional<PairBad> best;
  for (const auto& f : found) {
    if (f && (!best || std::pair{f->x, f->y} < std::pair{best->x, best->y})) best = f;
  }
  cert.add_check("symmetric relations", refs::kAxioms,
                 "class(x,y) = class(y,x) in 1..d for all x != y",
                 best ? best->what : "holds", !best,
                 best ? std::optional<nlohmann::json>(pair_witness(best->x, best->y))
                      : std::nullopt);
}

}  // namespace

nlohmann::json SchemeTable::to_json() const {
  const unsigned s = d + 1;
  nlohmann::json j;
  j["n_points"] = n_points;
  j["d"] = d;
  j["class_labels"] = class_labels;
  j["valencies"] = valencies;
  nlohmann::json tensor = nlohmann::json::array();
  for (unsigned k = 0; k < s; ++k) {
    nlohmann::json mk = nlohmann::json::array();
    for (unsigned i = 0; i < s; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (unsigned jj = 0; jj < s; ++jj) row.push_back(p(k, i, jj));
      mk.push_back(std::move(row));
    }
    tensor.push_back(std::move(mk));
  }
  j["p_tensor"] = std::move(tensor);
  return j;
}

SchemeTable SchemeTable::from_json(const nlohmann::json& j) {
  SchemeTable t;
  t.n_points = j.at("n_points").get<std::size_t>();
  t.d = j.at("d").get<unsigned>();
  t.class_labels = j.at("class_labels").get<std::vector<std::int64_t>>();
  t.valencies = j.at("valencies").get<std::vector<std::uint64_t>>();
  const unsigned s = t.d + 1;
  const auto& tensor = j.at("p_tensor");
  if (tensor.size() != s) throw std::invalid_argument("p_tensor has wrong shape");
  t.p_tensor.assign(static_cast<std::size_t>(s) * s * s, 0);
  for (unsigned k = 0; k < s; ++k) {
    for (unsigned i = 0; i < s; ++i) {
      for (unsigned jj = 0; jj < s; ++jj) {
        t.p_tensor[(static_cast<std::size_t>(k) * s + i) * s + jj] =
            tensor.at(k).at(i).at(jj).get<std::uint64_t>();
      }
    }
  }
  return t;
}

namespace {

// Shared tail of construction: relational checks, tensor, constancy.
SchemeBuildResult build_and_verify(SchemeTable t, const VerifyOptions& opts,
                                   Certificate cert) {
  relational_checks(t, cert);
  if (!cert.pass()) return {std::nullopt, std::move(cert)};

  if (auto missing = compute_tensor(t)) {
    cert.add_check("class representatives", refs::kAxioms, "every class nonempty",
                   "class " + std::to_string(*missing) + " has no pair", false,
                   nlohmann::json{{"class", *missing}});
    return {std::nullopt, std::move(cert)};
  }

  // Tensor symmetry first: the half-range constancy sweep relies on it.
  const unsigned s = t.d + 1;
  bool sym = true;
  nlohmann::json sym_witness;
  for (unsigned k = 0; k < s && sym; ++k) {
    for (unsigned i = 0; i < s && sym; ++i) {
      for (unsigned j = i + 1; j < s; ++j) {
        if (t.p(k, i, j) != t.p(k, j, i)) {
          sym = false;
          sym_witness = nlohmann::json{{"k", k}, {"i", i}, {"j", j}};
          break;
        }
      }
    }
  }
  cert.add_check("tensor symmetry", refs::kIdentities, "p^k_ij = p^k_ji", sym ? "holds" : "violated",
                 sym, sym ? std::nullopt : std::optional<nlohmann::json>(sym_witness));
  if (!sym) return {std::nullopt, std::move(cert)};

  const bool exhaustive = t.n_points <= opts.exhaustive_cutoff;
  const auto violation =
      exhaustive ? constancy_exhaustive(t) : constancy_sampled(t, opts);
  const std::string strategy =
      exhaustive ? "exhaustive over all pairs"
                 : "sampled, " + std::to_string(opts.samples_per_class) +
                       " pairs per class, seed " + std::to_string(opts.seed);
  std::optional<nlohmann::json> witness;
  if (violation) {
    witness = nlohmann::json{{"x", violation->x},     {"y", violation->y}, {"class", violation->k},
                             {"i", violation->i},     {"j", violation->j},
                             {"expected", t.p(violation->k, violation->i, violation->j)}};
  }
  cert.add_check("constant intersection numbers (" + strategy + ")", refs::kAxioms,
                 "triangle counts constant on every class", violation ? "violated" : "holds",
                 !violation, witness);
  if (violation) return {std::nullopt, std::move(cert)};

  return {std::move(t), std::move(cert)};
}

}  // namespace

SchemeBuildResult from_relation_map(std::size_t n_points, unsigned d,
                                    std::vector<std::int64_t> class_labels,
                                    std::function<unsigned(std::size_t, std::size_t)> classifier,
                                    const VerifyOptions& opts) {
  if (d == 0 || d > 255) throw std::invalid_argument("from_relation_map: d must be in 1..255");
  if (class_labels.size() != d + 1)
    throw std::invalid_argument("from_relation_map: need d+1 class labels");

  SchemeTable t;
  t.n_points = n_points;
  t.d = d;
  t.class_labels = std::move(class_labels);
  if (n_points <= kDenseCutoff) {
    auto dense = std::make_shared<std::vector<std::uint8_t>>(n_points * n_points);
    parallel_chunks(n_points, [&](unsigned, std::size_t lo, std::size_t hi) {
      for (std::size_t x = lo; x < hi; ++x) {
        for (std::size_t y = 0; y < n_points; ++y) {
          (*dense)[x * n_points + y] = static_cast<std::uint8_t>(classifier(x, y));
        }
      }
    });
    t.dense = std::move(dense);
  } else {
    t.classifier = std::move(classifier);
  }
  return build_and_verify(std::move(t), opts, Certificate("scheme construction"));
}

SchemeBuildResult from_dense_matrix(std::size_t n_points, unsigned d,
                                    std::vector<std::int64_t> class_labels,
                                    std::shared_ptr<const std::vector<std::uint8_t>> dense,
                                    const VerifyOptions& opts) {
  if (d == 0 || d > 255) throw std::invalid_argument("from_dense_matrix: d must be in 1..255");
  if (class_labels.size() != d + 1)
    throw std::invalid_argument("from_dense_matrix: need d+1 class labels");
  if (!dense || dense->size() != n_points * n_points)
    throw std::invalid_argument("from_dense_matrix: matrix size mismatch");

  SchemeTable t;
  t.n_points = n_points;
  t.d = d;
  t.class_labels = std::move(class_labels);
  t.dense = std::move(dense);
  return build_and_verify(std::move(t), opts, Certificate("scheme construction"));
}

Certificate verify_axioms(const SchemeTable& t) {
  Certificate cert("scheme axioms");
  const unsigned s = t.d + 1;
  const std::size_t n = t.n_points;

  if (t.has_relation_map()) relational_checks(t, cert);

  {
    std::uint64_t sum = 0;
    for (auto v : t.valencies) sum += v;
    cert.add_check("valency normalization", refs::kIdentities, "n_0 = 1 and sum n_i = |X|",
                   "n_0 = " + std::to_string(t.valencies[0]) + ", sum = " + std::to_string(sum),
                   t.valencies[0] == 1 && sum == n);
  }

  auto scan = [&](const char* name, const char* expected, auto&& violated) {
    std::optional<nlohmann::json> witness;
    for (unsigned k = 0; k < s && !witness; ++k) {
      for (unsigned i = 0; i < s && !witness; ++i) {
        for (unsigned j = 0; j < s; ++j) {
          if (violated(k, i, j)) {
            witness = nlohmann::json{{"k", k}, {"i", i}, {"j", j}};
            break;
          }
        }
      }
    }
    cert.add_check(name, refs::kIdentities, expected, witness ? "violated" : "holds", !witness,
                   witness);
  };

  scan("diagonal tensor slice", "p^0_ij = delta_ij n_j", [&](unsigned k, unsigned i, unsigned j) {
    return k == 0 && t.p(0, i, j) != (i == j ? t.valencies[j] : 0);
  });
  scan("identity column", "p^k_0j = delta_jk", [&](unsigned k, unsigned i, unsigned j) {
    return i == 0 && t.p(k, 0, j) != (j == k ? 1u : 0u);
  });
  scan("tensor symmetry", "p^k_ij = p^k_ji", [&](unsigned k, unsigned i, unsigned j) {
    return t.p(k, i, j) != t.p(k, j, i);
  });
  scan("valency exchange", "n_k p^k_ij = n_j p^j_ik", [&](unsigned k, unsigned i, unsigned j) {
    return t.p(k, i, j) * t.valencies[k] != t.p(j, i, k) * t.valencies[j];
  });
  {
    std::optional<nlohmann::json> witness;
    for (unsigned k = 0; k < s && !witness; ++k) {
      for (unsigned i = 0; i < s; ++i) {
        std::uint64_t sum = 0;
        for (unsigned j = 0; j < s; ++j) sum += t.p(k, i, j);
        if (sum != t.valencies[i]) {
          witness = nlohmann::json{{"k", k}, {"i", i}, {"sum", sum}};
          break;
        }
      }
    }
    cert.add_check("row sums", refs::kIdentities, "sum_j p^k_ij = n_i",
                   witness ? "violated" : "holds", !witness, witness);
  }

  if (t.has_relation_map()) {
    // Recount one representative pair per class against the stored tensor.
    CountScratch scratch(t.d);
    std::optional<nlohmann::json> witness;
    std::vector<bool> done(s, false);
    unsigned remaining = s;
    for (std::size_t x = 0; x < n && remaining && !witness; ++x) {
      for (std::size_t y = 0; y < n && remaining; ++y) {
        const unsigned k = t.cls(x, y);
        if (done[k]) continue;
        done[k] = true;
        --remaining;
        if (auto bad = pair_mismatch(t, x, y, k, scratch)) {
          witness = nlohmann::json{{"x", x}, {"y", y}, {"class", k},
                                   {"i", bad->first},  {"j", bad->second}};
          break;
        }
      }
    }
    cert.add_check("tensor matches relation recount", refs::kAxioms,
                   "stored p^k_ij equals a fresh triangle count", witness ? "violated" : "holds",
                   !witness, witness);
  }
  return cert;
}

PseudocyclicResult check_pseudocyclic(const SchemeTable& t) {
  Certificate cert("pseudocyclicity (combinatorial)");
  const unsigned s = t.d + 1;

  bool const_valency = true;
  const std::uint64_t tv = t.valencies.size() > 1 ? t.valencies[1] : 0;
  for (unsigned i = 1; i < s; ++i) const_valency = const_valency && t.valencies[i] == tv;
  cert.add_check("constant valency", refs::kPseudocyclic, "n_j = t for all j >= 1",
                 const_valency ? "t = " + std::to_string(tv) : "valencies differ", const_valency);

  bool sums_ok = const_valency;
  std::optional<nlohmann::json> witness;
  if (const_valency) {
    for (unsigned j = 1; j < s; ++j) {
      std::uint64_t sum = 0;
      for (unsigned k = 1; k < s; ++k) sum += t.p(k, k, j);
      if (sum != tv - 1) {
        sums_ok = false;
        witness = nlohmann::json{{"j", j}, {"sum", sum}, {"expected", tv - 1}};
        break;
      }
    }
  }
  cert.add_check("diagonal column sums", refs::kPseudocyclic, "sum_k p^k_kj = t - 1 for all j >= 1",
                 sums_ok ? "holds" : "violated", sums_ok, witness);

  PseudocyclicResult r{std::move(cert), std::nullopt};
  if (const_valency && sums_ok) r.t = tv;
  return r;
}

Certificate check_design(const SchemeTable& t, CheckMode mode, std::size_t sample_pairs,
                         std::uint64_t seed) {
  Certificate cert("2-design property of associate blocks");
  const std::size_t n = t.n_points;
  const unsigned s = t.d + 1;

  std::uint64_t tv = t.valencies.size() > 1 ? t.valencies[1] : 0;
  for (unsigned i = 1; i < s; ++i) {
    if (t.valencies[i] != tv)
      throw std::invalid_argument("check_design: nontrivial valencies are not constant");
  }
  const std::uint64_t lambda = tv - 1;
  const std::string design = "2-(" + std::to_string(n) + ", " + std::to_string(tv) + ", " +
                             std::to_string(lambda) + ")";

  std::optional<nlohmann::json> witness;
  std::string strategy;
  if (mode == CheckMode::Exhaustive) {
    strategy = "exhaustive over all point pairs";
    // count[u*n + w] for u < w, accumulated per x-range then merged. Ranges
    // are fixed up front so each slot is owned by exactly one worker.
    const std::size_t nslots = std::min<std::size_t>({thread_cap(), n, 8});
    std::vector<std::pair<std::size_t, std::size_t>> ranges(nslots);
    for (std::size_t r = 0; r < nslots; ++r) {
      ranges[r] = {n * r / nslots, n * (r + 1) / nslots};
    }
    std::vector<std::vector<std::uint32_t>> counts(nslots);
    parallel_chunks(nslots, [&](unsigned, std::size_t rlo, std::size_t rhi) {
      for (std::size_t slot = rlo; slot < rhi; ++slot) {
        counts[slot].assign(n * n, 0);
        std::vector<std::vector<std::uint32_t>> members(s);
        for (std::size_t x = ranges[slot].first; x < ranges[slot].second; ++x) {
          for (auto& mv : members) mv.clear();
          for (std::size_t y = 0; y < n; ++y) members[t.cls(x, y)].push_back(y);
          for (unsigned i = 1; i < s; ++i) {
            const auto& mv = members[i];
            for (std::size_t a = 0; a < mv.size(); ++a) {
              for (std::size_t b = a + 1; b < mv.size(); ++b) {
                ++counts[slot][static_cast<std::size_t>(mv[a]) * n + mv[b]];
              }
            }
          }
        }
      }
    });
    for (std::size_t u = 0; u < n && !witness; ++u) {
      for (std::size_t w = u + 1; w < n; ++w) {
        std::uint64_t total = 0;
        for (const auto& c : counts) {
          if (!c.empty()) total += c[u * n + w];
        }
        if (total != lambda) {
          witness = nlohmann::json{{"u", u}, {"w", w}, {"blocks", total}, {"expected", lambda}};
          break;
        }
      }
    }
  } else {
    strategy = std::to_string(sample_pairs) + " sampled pairs, seed " + std::to_string(seed);
    SplitMix64 rng(seed);
    for (std::size_t it = 0; it < sample_pairs && !witness; ++it) {
      std::size_t u = rng.below(n), w = rng.below(n);
      while (u == w) w = rng.below(n);
      // The pair {u, w} lies in block R_i(x) iff cls(x,u) = cls(x,w) = i != 0.
      std::uint64_t total = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const unsigned cu = t.cls(x, u);
        if (cu != 0 && cu == t.cls(x, w)) ++total;
      }
      if (total != lambda) {
        witness = nlohmann::json{{"u", u}, {"w", w}, {"blocks", total}, {"expected", lambda}};
      }
    }
  }
  cert.add_check("pair coverage (" + strategy + ")", refs::kDesign,
                 design + ": every point pair lies in exactly " + std::to_string(lambda) +
                     " blocks",
                 witness ? "violated" : "holds", !witness, witness);
  return cert;
}

namespace {

std::vector<std::uint8_t> partition_remap(unsigned d,
                                          const std::vector<std::vector<unsigned>>& partition,
                                          std::vector<std::size_t>& block_order) {
  std::vector<int> block_of(d + 1, -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw std::invalid_argument("fuse: empty block");
    for (unsigned c : partition[b]) {
      if (c == 0 || c > d) throw std::invalid_argument("fuse: class index out of range");
      if (block_of[c] != -1) throw std::invalid_argument("fuse: blocks are not disjoint");
      block_of[c] = static_cast<int>(b);
    }
  }
  for (unsigned c = 1; c <= d; ++c) {
    if (block_of[c] == -1) throw std::invalid_argument("fuse: partition does not cover class " +
                                                       std::to_string(c));
  }
  std::vector<std::uint8_t> remap(d + 1, 0);
  for (unsigned c = 1; c <= d; ++c) {
    // block_order maps original block position to presented class - 1.
    const auto pos = std::find(block_order.begin(), block_order.end(),
                               static_cast<std::size_t>(block_of[c]));
    remap[c] = static_cast<std::uint8_t>(1 + (pos - block_order.begin()));
  }
  return remap;
}

}  // namespace

SchemeBuildResult fuse(const SchemeTable& t, const std::vector<std::vector<unsigned>>& partition,
                       const VerifyOptions& opts) {
  if (!t.has_relation_map())
    throw std::invalid_argument("fuse: scheme has no relation map (deserialized table?)");
  if (partition.empty() || partition.size() > t.d)
    throw std::invalid_argument("fuse: invalid block count");

  // Present blocks sorted by their minimal member label.
  std::vector<std::size_t> order(partition.size());
  for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
  auto min_label = [&](std::size_t b) {
    std::int64_t m = t.class_labels.at(partition[b].front());
    for (unsigned c : partition[b]) m = std::min(m, t.class_labels.at(c));
    return m;
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return min_label(a) < min_label(b); });

  const auto remap = partition_remap(t.d, partition, order);

  SchemeTable fused;
  fused.n_points = t.n_points;
  fused.d = static_cast<unsigned>(partition.size());
  fused.class_labels.assign(fused.d + 1, 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    fused.class_labels[pos + 1] = min_label(order[pos]);
  }
  fused.dense = t.dense;
  fused.classifier = t.classifier;
  if (t.remap.empty()) {
    fused.remap.assign(remap.begin(), remap.end());
  } else {
    fused.remap.resize(t.remap.size());
    for (std::size_t c = 0; c < t.remap.size(); ++c) fused.remap[c] = remap[t.remap[c]];
  }
  return build_and_verify(std::move(fused), opts, Certificate("fusion scheme construction"));
}

std::uint64_t fused_p_entry(const SchemeTable& t,
                            const std::vector<std::vector<unsigned>>& partition,
                            unsigned a_block, unsigned b_block, unsigned c_block) {
  if (a_block >= partition.size() || b_block >= partition.size() || c_block >= partition.size())
    throw std::invalid_argument("fused_p_entry: block index out of range");
  std::optional<std::uint64_t> value;
  for (unsigned g : partition[c_block]) {
    std::uint64_t sum = 0;
    for (unsigned e : partition[a_block]) {
      for (unsigned f : partition[b_block]) sum += t.p(g, e, f);
    }
    if (value && *value != sum) {
      throw std::runtime_error(std::string("fused_p_entry: sum depends on the representative (") +
                               refs::kFusedEntry + ")");
    }
    value = sum;
  }
  if (!value) throw std::invalid_argument("fused_p_entry: empty block");
  return *value;
}

}  // namespace conic
