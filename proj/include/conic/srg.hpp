#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "conic/report.hpp"
#include "conic/scheme.hpp"

namespace conic {

struct SrgParams {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool degenerate = false;  // t = 0 (empty graph); accepted but flagged
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// (n^2, t(n-1), n+t^2-3t, t^2-t). Throws when t > n+1.
SrgParams latin_square_params(std::uint64_t n, std::uint64_t t);

// Parameters of the fusion-scheme tensor graph at q = 2^m, m an odd prime:
// latin_square_params(q(q-1)/2, m(q+1)), spelled out in closed form.
SrgParams fusion_srg_params(std::uint64_t q, unsigned m);

// Graph on X x X, vertex (x,y) at id x|X|+y; distinct vertices adjacent iff
// class(x,x') = class(y,y') != 0. Adjacency is materialized as packed bit
// rows for v <= 5*10^4 and recomputed from the class map above that.
class TensorSrg {
 public:
  explicit TensorSrg(SchemeTable base);  // throws unless base is pseudocyclic

  std::uint64_t base_points() const { return n_; }
  std::uint64_t t() const { return t_; }
  std::uint64_t v() const { return v_; }
  const SrgParams& claimed() const { return claimed_; }
  bool packed() const { return !bits_.empty(); }
  const SchemeTable& base() const { return base_; }

  bool adjacent(std::uint64_t u, std::uint64_t w) const;
  std::uint64_t degree(std::uint64_t u) const;          // recounted, not assumed
  std::uint64_t common_neighbors(std::uint64_t u, std::uint64_t w) const;

  // Plain-text edge list: first line v, then "u w" per edge. Packed only.
  void write_edge_list(std::ostream& out) const;

 private:
  SchemeTable base_;
  std::uint64_t n_ = 0, t_ = 0, v_ = 0;
  SrgParams claimed_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Exact mode checks every degree and every vertex pair; sampled mode checks
// degrees of a 100-vertex sample plus `samples` stratified pairs (half
// adjacent, half non-adjacent, rejection-sampled with the given seed).
Certificate certify_srg(const TensorSrg& g, CheckMode mode = CheckMode::Exhaustive,
                        std::size_t samples = 100000, std::uint64_t seed = 0x5EED);

// Records the factor-two discrepancy between the published vertex count
// q^2(q-1)^2/2 and the tensor construction's |X|^2.
CheckResult printed_vertex_count_erratum(std::uint64_t q, std::uint64_t v);

}  // namespace conic
