#pragma once
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "conic/report.hpp"

namespace conic {

// Verification strategy for relation constancy. Exhaustive over all pairs
// up to the cutoff; above it, a fixed-seed sample per class.
struct VerifyOptions {
  std::size_t exhaustive_cutoff = 1000;
  std::size_t samples_per_class = 200;
  std::uint64_t seed = 0x5EED;
};

// A verified association scheme: point count, class map, valencies and the
// full intersection tensor p^k_{ij}. Class 0 is the diagonal relation.
class SchemeTable {
 public:
  std::size_t n_points = 0;
  unsigned d = 0;                          // nontrivial class count
  std::vector<std::int64_t> class_labels;  // size d+1; class_labels[0] == 0
  std::vector<std::uint64_t> valencies;    // size d+1; valencies[0] == 1
  std::vector<std::uint64_t> p_tensor;     // (d+1)^3, k-major then i then j

  std::uint64_t p(unsigned k, unsigned i, unsigned j) const {
    const std::size_t s = d + 1;
    return p_tensor[(static_cast<std::size_t>(k) * s + i) * s + j];
  }

  // Class of an ordered point pair. Dense byte storage for n <= 10^4;
  // otherwise recomputed through the stored classifier. `remap` lets fusion
  // schemes share the base matrix instead of materializing a second one.
  unsigned cls(std::size_t x, std::size_t y) const {
    const unsigned c = dense ? (*dense)[x * n_points + y]
                             : classifier(x, y);
    return remap.empty() ? c : remap[c];
  }
  bool has_relation_map() const { return dense != nullptr || static_cast<bool>(classifier); }

  nlohmann::json to_json() const;
  // Tensor-level data only; the relation map is not part of the wire format.
  static SchemeTable from_json(const nlohmann::json& j);

  std::shared_ptr<const std::vector<std::uint8_t>> dense;
  std::vector<std::uint8_t> remap;  // raw class -> presented class, may be empty
  std::function<unsigned(std::size_t, std::size_t)> classifier;
};

struct SchemeBuildResult {
  std::optional<SchemeTable> table;
  Certificate certificate;
  bool ok() const { return table.has_value(); }
};

// Builds valencies and the intersection tensor from one representative pair
// per class, then verifies constancy over all pairs (or a seeded sample past
// the cutoff). Classifier must be total, with class 0 exactly the diagonal.
SchemeBuildResult from_relation_map(std::size_t n_points, unsigned d,
                                    std::vector<std::int64_t> class_labels,
                                    std::function<unsigned(std::size_t, std::size_t)> classifier,
                                    const VerifyOptions& opts = {});

// Same, for a prebuilt row-major class matrix with values in 0..d.
SchemeBuildResult from_dense_matrix(std::size_t n_points, unsigned d,
                                    std::vector<std::int64_t> class_labels,
                                    std::shared_ptr<const std::vector<std::uint8_t>> dense,
                                    const VerifyOptions& opts = {});

// Every tensor identity plus, when a relation map is present, the relational
// axioms and a per-class representative recount.
Certificate verify_axioms(const SchemeTable& s);

struct PseudocyclicResult {
  Certificate certificate;
  std::optional<std::uint64_t> t;  // present when the criterion holds
};

// Combinatorial criterion: constant nontrivial valency t and, for every j,
// sum_k p^k_{kj} = t - 1.
PseudocyclicResult check_pseudocyclic(const SchemeTable& s);

enum class CheckMode { Exhaustive, Sampled };

// Verifies that the blocks {R_i(x)} form a 2-(|X|, t, t-1) design.
Certificate check_design(const SchemeTable& s, CheckMode mode = CheckMode::Exhaustive,
                         std::size_t sample_pairs = 10000, std::uint64_t seed = 0x5EED);

// Merges classes along a partition of {1..d} (class 0 never merged) and
// re-verifies scheme-ness; an arbitrary fusion need not be a scheme.
SchemeBuildResult fuse(const SchemeTable& s, const std::vector<std::vector<unsigned>>& partition,
                       const VerifyOptions& opts = {});

// Double sum over a block pair for one fused superclass; checks independence
// of the representative g and throws std::runtime_error if it fails.
std::uint64_t fused_p_entry(const SchemeTable& s,
                            const std::vector<std::vector<unsigned>>& partition,
                            unsigned a_block, unsigned b_block, unsigned c_block);

}  // namespace conic
