#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klab/setsys.h"

namespace klab {

using VertexId = std::uint32_t;
// Strictly increasing vertex ids.
using Edge = std::vector<VertexId>;

// A partition of [n] into nonempty blocks of at most r-1 elements each.
struct PartSpec {
  std::vector<std::vector<int>> parts;

  // Throws kInvalidPartSpec on overlap, a coverage gap, an empty block, or a
  // block larger than r-1.
  void validate(int n, int r) const;

  // Bit masks of the blocks over [n].
  std::vector<std::uint64_t> masks(int n) const;

  friend bool operator==(const PartSpec&, const PartSpec&) = default;
};

// Explicit hypergraph over k-subsets. Vertex ids are positions in `vertices`
// (colex order for every generator); edges are sorted lexicographically.
struct Hypergraph {
  int n = 0;
  int k = 0;
  int r = 2;
  std::optional<int> stable_s;
  std::optional<PartSpec> parts;
  std::vector<KSubset> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> warnings;

  std::size_t num_vertices() const noexcept { return vertices.size(); }
};

struct GeneratorLimits {
  std::size_t max_vertices = 100'000;
  std::size_t max_edges = 10'000'000;
  int ground_cap = kWordBits;
};

// KG^r(k, n): all k-subsets of [n], hyperedges are the r-tuples of pairwise
// disjoint vertices. For n < r*k the edge set is empty and a warning is
// recorded.
Hypergraph build_kneser_hypergraph(const GroundParams& p,
                                   const GeneratorLimits& limits = {});

// Induced sub-hypergraph on the s-stable vertices (cyclic order on [n]).
Hypergraph build_stable_subhypergraph(const GroundParams& p, int s,
                                      const GeneratorLimits& limits = {});

// Induced sub-hypergraph on the vertices meeting every block of `spec` in at
// most one element.
Hypergraph build_partition_constrained(const GroundParams& p, const PartSpec& spec,
                                       const GeneratorLimits& limits = {});

// Hypergraph with vertices {1}, ..., {v} over [v] and the given edges, used
// for coloring instances that have no set-system origin. Edges are sorted
// and deduplicated; v must not exceed 64.
Hypergraph make_abstract_hypergraph(std::size_t num_vertices, std::vector<Edge> edges,
                                    int uniformity = 2);

// ceil((n - r(k-1)) / (r-1)); requires n >= r*k.
int formula_chi(const GroundParams& p);

// Exact ceiling division, b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace klab
