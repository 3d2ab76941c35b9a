#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "klab/certificate.h"
#include "klab/kneser.h"
#include "klab/setsys.h"

// Independent certification. Nothing in here shares code with the
// generators or the solver; it only relies on the set primitives.
namespace klab {

struct Violation {
  // Member indices (family checks) or vertex ids (coloring checks).
  std::vector<std::size_t> members;
  std::string reason;
  std::optional<std::size_t> family;
};

struct Report {
  bool ok = true;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> counters;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
  void bump(const std::string& counter, std::uint64_t by = 1) { counters[counter] += by; }
};

// ok iff every subfamily of at most r members has a common point. On failure
// the single violation is the inclusion-minimal empty-intersection subfamily
// whose colex-sorted member list is lexicographically least.
Report is_r_wise_intersecting(const SetFamily& family, int r);

// Exact cover of all C(n,k) k-subsets by nonempty r-wise intersecting
// families. Throws kMalformedCertificate if the parameters or the member
// ground sets are inconsistent.
Report verify_partition_certificate(const PartitionCertificate& cert);

// ok iff no hyperedge has all of its vertices in one color. Throws
// kLengthMismatch unless there is one color per vertex.
Report verify_coloring(const Hypergraph& h, std::span<const int> colors);

// Rebuilds the certificate's vertex set from its descriptor and checks that
// no color class holds r pairwise disjoint members, that color ids are
// exactly 0..num_colors-1, and that the lengths agree.
Report verify_coloring_certificate(const ColoringCertificate& cert);

}  // namespace klab
