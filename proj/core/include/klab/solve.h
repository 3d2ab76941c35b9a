#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "klab/certificate.h"
#include "klab/kneser.h"
#include "klab/setsys.h"

namespace klab {

// All k-subsets of [n] plus every inclusion-minimal subfamily of at most r
// of them with empty common intersection. A coloring of `base` has only
// r-wise intersecting color classes iff no witness is monochromatic.
struct ConflictHypergraph {
  GroundParams params;
  std::vector<KSubset> base;
  std::vector<Edge> witnesses;

  Hypergraph as_hypergraph() const;
};

// Throws kInstanceTooLarge once more than `max_witnesses` witnesses exist.
ConflictHypergraph build_conflict_hypergraph(const GroundParams& p,
                                             std::size_t max_witnesses = 5'000'000);

struct SolveLimits {
  std::uint64_t max_nodes = 0;      // 0: unlimited
  double time_limit_seconds = 0.0;  // 0: unlimited
  // Above this many vertices only the greedy upper bound and the cheap
  // lower bound are computed.
  std::size_t max_exact_vertices = 40;
  std::size_t max_witnesses = 5'000'000;
  // Portfolio workers; each uses a different vertex tie-break order. The
  // first exact answer wins.
  int workers = 1;
};

enum class SolveStatus { kExact, kBounds, kTimeout };

std::string_view status_name(SolveStatus s);

struct SolveStats {
  std::uint64_t nodes = 0;
  double millis = 0.0;
  int worker = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kBounds;
  int lower = 0;
  int upper = 0;
  // Coloring attaining `upper`, one color per vertex. Verified when exact.
  std::vector<int> coloring;
  // Set by min_partition_number: the color classes as families.
  std::optional<PartitionCertificate> partition;
  SolveStats stats;

  bool exact() const noexcept { return status == SolveStatus::kExact; }
};

// Minimum number of colors with no monochromatic hyperedge. Iterative
// deepening on the color count; each level is a backtracking search with
// most-constrained-first vertex choice (ties by lowest vertex id, i.e. colex
// rank) and color-symmetry breaking.
SolveResult chromatic_number(const Hypergraph& h, const SolveLimits& limits = {});

// Minimum number of r-wise intersecting families partitioning all k-subsets
// of [n]; on an exact answer `partition` holds a verified certificate.
SolveResult min_partition_number(const GroundParams& p, const SolveLimits& limits = {});

// Exhaustive enumeration of colorings with at most `max_colors` colors, with
// only the "colors used form a prefix" reduction. Shares no code with
// chromatic_number. nullopt if no such coloring exists; throws
// kInstanceTooLarge above 16 vertices.
std::optional<int> brute_force_oracle(const Hypergraph& h, int max_colors);

}  // namespace klab
