#pragma once

#include <optional>
#include <vector>

#include "klab/kneser.h"
#include "klab/setsys.h"

namespace klab {

inline constexpr const char* kFormatTag = "kneser-lab/1";

// Claimed partition of all k-subsets of [n] into r-wise intersecting
// families. Families keep construction order, members colex order.
struct PartitionCertificate {
  GroundParams params;
  std::vector<SetFamily> families;

  friend bool operator==(const PartitionCertificate&, const PartitionCertificate&) = default;
};

// A coloring of a generated vertex set. The hypergraph is not stored: it is
// described by (ground_n, k, r) plus at most one of `stable_s` or `parts`, and
// its vertices are implicit in canonical colex order.
struct ColoringCertificate {
  int ground_n = 0;
  int k = 0;
  int r = 2;
  std::optional<int> stable_s;
  std::optional<PartSpec> parts;
  std::vector<int> colors;
  int num_colors = 0;

  GroundParams params() const { return {ground_n, k, r}; }

  friend bool operator==(const ColoringCertificate&, const ColoringCertificate&) = default;
};

}  // namespace klab
