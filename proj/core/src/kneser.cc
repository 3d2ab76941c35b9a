#include "klab/kneser.h"

#include <algorithm>
#include <functional>

#include "klab/error.h"

namespace klab {
namespace {

void check_vertex_budget(const GroundParams& p, const GeneratorLimits& limits) {
  p.validate(limits.ground_cap);
  if (binomial(p.n, p.k) > limits.max_vertices) {
    fail(Errc::kInstanceTooLarge,
         "C(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = " +
             std::to_string(binomial(p.n, p.k)) + " vertices exceeds limit " +
             std::to_string(limits.max_vertices));
  }
}

// All r-tuples of pairwise disjoint vertices, by ordered backtracking over
// increasing ids. Prunes any vertex that meets the union of the partial tuple.
std::vector<Edge> disjoint_tuples(const std::vector<KSubset>& vertices, int r,
                                  std::size_t max_edges) {
  std::vector<Edge> edges;
  Edge tuple;
  tuple.reserve(r);
  const auto count = static_cast<VertexId>(vertices.size());

  std::function<void(VertexId, std::uint64_t)> extend =
      [&](VertexId start, std::uint64_t used) {
        if (static_cast<int>(tuple.size()) == r) {
          if (edges.size() >= max_edges) {
            fail(Errc::kInstanceTooLarge,
                 "edge count exceeds limit " + std::to_string(max_edges));
          }
          edges.push_back(tuple);
          return;
        }
        for (VertexId v = start; v < count; ++v) {
          const std::uint64_t bits = vertices[v].bits();
          if (bits & used) continue;
          tuple.push_back(v);
          extend(v + 1, used | bits);
          tuple.pop_back();
        }
      };
  extend(0, 0);
  return edges;
}

// Post-pass: every emitted edge must be r pairwise disjoint, increasing ids.
void check_kneser_edges(const Hypergraph& h) {
  for (const Edge& e : h.edges) {
    if (static_cast<int>(e.size()) != h.r) fail(Errc::kInternal, "edge of wrong arity");
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0 && e[i] <= e[i - 1]) fail(Errc::kInternal, "edge ids not increasing");
      const std::uint64_t bits = h.vertices.at(e[i]).bits();
      if (bits & used) fail(Errc::kInternal, "edge members are not pairwise disjoint");
      used |= bits;
    }
  }
}

Hypergraph induced_kneser(const GroundParams& p, std::vector<KSubset> vertices,
                          const GeneratorLimits& limits) {
  Hypergraph h;
  h.n = p.n;
  h.k = p.k;
  h.r = p.r;
  h.vertices = std::move(vertices);
  if (static_cast<std::int64_t>(p.r) * p.k > p.n) {
    h.warnings.push_back("n < r*k: no " + std::to_string(p.r) +
                         " pairwise disjoint k-subsets exist, edge set is empty");
  } else {
    h.edges = disjoint_tuples(h.vertices, p.r, limits.max_edges);
  }
  check_kneser_edges(h);
  return h;
}

}  // namespace

void PartSpec::validate(int n, int r) const {
  std::uint64_t seen = 0;
  for (const auto& part : parts) {
    if (part.empty()) fail(Errc::kInvalidPartSpec, "empty block");
    if (static_cast<int>(part.size()) > r - 1) {
      fail(Errc::kInvalidPartSpec, "block of size " + std::to_string(part.size()) +
                                       " exceeds r-1 = " + std::to_string(r - 1));
    }
    for (int e : part) {
      if (e < 1 || e > n || n > kWordBits) {
        fail(Errc::kInvalidPartSpec, "element " + std::to_string(e) + " outside [1, " +
                                         std::to_string(n) + "]");
      }
      const std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (seen & bit) {
        fail(Errc::kInvalidPartSpec, "element " + std::to_string(e) + " in two blocks");
      }
      seen |= bit;
    }
  }
  const std::uint64_t all = n >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (seen != all) fail(Errc::kInvalidPartSpec, "blocks do not cover [n]");
}

std::vector<std::uint64_t> PartSpec::masks(int n) const {
  std::vector<std::uint64_t> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(KSubset::from_elements(n, part).bits());
  return out;
}

Hypergraph build_kneser_hypergraph(const GroundParams& p, const GeneratorLimits& limits) {
  check_vertex_budget(p, limits);
  return induced_kneser(p, enumerate_k_subsets(p.n, p.k, limits.ground_cap), limits);
}

Hypergraph build_stable_subhypergraph(const GroundParams& p, int s,
                                      const GeneratorLimits& limits) {
  if (s < 1) fail(Errc::kInvalidParams, "stability parameter must be >= 1");
  check_vertex_budget(p, limits);
  std::vector<KSubset> vertices = enumerate_k_subsets(p.n, p.k, limits.ground_cap);
  std::erase_if(vertices, [s](const KSubset& v) { return !is_s_stable(v, s); });
  Hypergraph h = induced_kneser(p, std::move(vertices), limits);
  h.stable_s = s;
  return h;
}

Hypergraph build_partition_constrained(const GroundParams& p, const PartSpec& spec,
                                       const GeneratorLimits& limits) {
  check_vertex_budget(p, limits);
  spec.validate(p.n, p.r);
  const std::vector<std::uint64_t> blocks = spec.masks(p.n);
  std::vector<KSubset> vertices = enumerate_k_subsets(p.n, p.k, limits.ground_cap);
  std::erase_if(vertices, [&](const KSubset& v) {
    return std::any_of(blocks.begin(), blocks.end(), [&](std::uint64_t b) {
      const std::uint64_t hit = v.bits() & b;
      return (hit & (hit - 1)) != 0;
    });
  });
  Hypergraph h = induced_kneser(p, std::move(vertices), limits);
  h.parts = spec;
  return h;
}

Hypergraph make_abstract_hypergraph(std::size_t num_vertices, std::vector<Edge> edges,
                                    int uniformity) {
  if (num_vertices > static_cast<std::size_t>(kWordBits)) {
    fail(Errc::kInstanceTooLarge, "abstract hypergraphs are limited to 64 vertices");
  }
  const int v = static_cast<int>(num_vertices);
  Hypergraph h;
  h.n = v;
  h.k = 1;
  h.r = uniformity;
  h.vertices.reserve(num_vertices);
  for (int i = 0; i < v; ++i) h.vertices.emplace_back(v, std::uint64_t{1} << i);
  for (Edge& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.empty() || e.back() >= num_vertices ||
        std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(Errc::kInvalidParams, "edge has repeated or out-of-range vertex ids");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  h.edges = std::move(edges);
  return h;
}

int formula_chi(const GroundParams& p) {
  if (p.r < 2 || p.k < 1) fail(Errc::kInvalidParams, "formula_chi needs k >= 1, r >= 2");
  if (static_cast<std::int64_t>(p.n) < static_cast<std::int64_t>(p.r) * p.k) {
    fail(Errc::kInvalidParams, "formula_chi needs n >= r*k");
  }
  const std::int64_t num = p.n - static_cast<std::int64_t>(p.r) * (p.k - 1);
  return static_cast<int>(ceil_div(num, p.r - 1));
}

}  // namespace klab
