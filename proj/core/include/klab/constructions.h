#pragma once

#include <cstddef>
#include <vector>

#include "klab/certificate.h"
#include "klab/kneser.h"
#include "klab/setsys.h"
#include "klab/verify.h"

namespace klab {

// floor((r*k - 1) / (r - 1)): the largest s for which any r of the k-subsets
// of an s-set share a point.
int tail_size(int k, int r);

// ceil(n - r(k-1)/(r-1)), evaluated as ceil(((r-1)n - r(k-1)) / (r-1)).
// Throws kInadmissibleParams when r*k > (r-1)*n.
int tight_bound(const GroundParams& p);

// Families F_1..F_{n-s} (all k-subsets with minimum element i) followed by
// the k-subsets of the tail S = {n-s+1, ..., n}; tight_bound(p) families.
PartitionCertificate build_tight_partition(const GroundParams& p);

// Blocks C_i = {(i-1)(r-1)+1, ..., i(r-1)} laid out contiguously on the cycle
// of length (r-1)n.
PartSpec contiguous_blocks(int n, int r);

// C(F): the (r-1)^k subsets of the blown-up ground set taking exactly one
// point from each block C_i with i in F.
std::vector<KSubset> transversals(const KSubset& f, int r);

struct BlowupMap {
  struct Origin {
    std::size_t family = 0;
    std::size_t member = 0;
  };

  PartitionCertificate source;
  PartSpec blocks;
  // The constrained vertex set over [(r-1)n] in colex order, and for each
  // vertex the source member F with G in C(F).
  std::vector<KSubset> vertices;
  std::vector<Origin> vertex_origin;

  GroundParams lifted_params() const {
    return {(source.params.r - 1) * source.params.n, source.params.k, source.params.r};
  }
};

struct Blowup {
  ColoringCertificate coloring;
  BlowupMap map;
};

// Lifts a verified partition into r-wise intersecting families to a coloring
// of the partition-constrained Kneser hypergraph on (r-1)n points: G gets
// color i iff G lies in C(F) for some F in family i. Throws
// kInvalidCertificate if `cert` does not verify and kCapExceeded if
// (r-1)n > 64.
Blowup blow_up(const PartitionCertificate& cert);

// Every r-stable k-subset of the (r-1)n-cycle meets each block at most once
// and is therefore a colored vertex of the blow-up.
Report check_stable_embedding(const BlowupMap& map);

}  // namespace klab
