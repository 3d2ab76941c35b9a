#pragma once

// Naive reference implementations used only by tests. They deliberately
// avoid the pruning and ordering tricks of the library so a shared bug is
// unlikely.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "klab/kneser.h"

namespace klab::oracle {

// Every m-bit mask with popcount k, increasing.
inline std::vector<std::uint64_t> k_subset_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
  }
  return out;
}

// Calls fn on every size-t combination of {0..m-1} in lexicographic order.
inline void for_each_combination(std::size_t m, std::size_t t,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (t > m) return;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == m - t + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t intersection(const std::vector<std::uint64_t>& sets,
                                  const std::vector<std::size_t>& idx) {
  std::uint64_t acc = ~std::uint64_t{0};
  for (std::size_t i : idx) acc &= sets[i];
  return acc;
}

inline bool pairwise_disjoint(const std::vector<std::uint64_t>& sets,
                              const std::vector<std::size_t>& idx) {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (sets[idx[a]] & sets[idx[b]]) return false;
    }
  }
  return true;
}

// All index t-tuples whose sets are pairwise disjoint.
inline std::vector<std::vector<std::size_t>> disjoint_tuples(const std::vector<std::uint64_t>& sets,
                                                             int t) {
  std::vector<std::vector<std::size_t>> out;
  for_each_combination(sets.size(), t, [&](const std::vector<std::size_t>& idx) {
    if (pairwise_disjoint(sets, idx)) out.push_back(idx);
  });
  return out;
}

// Every subfamily of at most r members, checked by subset mask.
inline bool r_wise_intersecting(const std::vector<std::uint64_t>& family, int r) {
  const std::size_t m = family.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) > r) continue;
    std::uint64_t acc = ~std::uint64_t{0};
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) acc &= family[i];
    }
    if (acc == 0) return false;
  }
  return true;
}

// Inclusion-minimal empty-intersection subfamilies of size 2..r.
inline std::vector<std::vector<std::size_t>> minimal_witnesses(const std::vector<std::uint64_t>& sets,
                                                               int r) {
  std::vector<std::vector<std::size_t>> out;
  for (int t = 2; t <= r; ++t) {
    for_each_combination(sets.size(), t, [&](const std::vector<std::size_t>& idx) {
      if (intersection(sets, idx) != 0) return;
      for (std::size_t skip = 0; skip < idx.size(); ++skip) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (j != skip) rest.push_back(idx[j]);
        }
        if (intersection(sets, rest) == 0) return;
      }
      out.push_back(idx);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random hypergraph with up to max_v vertices and edge sizes in [2, max_edge].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int min_v, int max_v, int max_edge,
                                    int max_edges) {
  std::uniform_int_distribution<int> vdist(min_v, max_v);
  const int v = vdist(rng);
  std::uniform_int_distribution<int> edist(0, max_edges);
  std::uniform_int_distribution<int> sdist(2, std::min(max_edge, std::max(v, 2)));
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::vector<Edge> edges;
  if (v >= 2) {
    const int count = edist(rng);
    for (int i = 0; i < count; ++i) {
      const int size = std::min(sdist(rng), v);
      std::vector<VertexId> e;
      while (static_cast<int>(e.size()) < size) {
        const auto u = static_cast<VertexId>(pick(rng));
        if (std::find(e.begin(), e.end(), u) == e.end()) e.push_back(u);
      }
      edges.push_back(std::move(e));
    }
  }
  return make_abstract_hypergraph(v, std::move(edges), max_edge);
}

}  // namespace klab::oracle
