#include "klab/constructions.h"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "klab/error.h"

namespace klab {
namespace {

void require_admissible(const GroundParams& p) {
  p.validate();
  if (!p.admissible()) {
    fail(Errc::kInadmissibleParams,
         "r*k = " + std::to_string(static_cast<long long>(p.r) * p.k) + " exceeds (r-1)*n = " +
             std::to_string(static_cast<long long>(p.r - 1) * p.n));
  }
}

bool meets_each_block_once(std::uint64_t bits, const std::vector<std::uint64_t>& blocks) {
  return std::none_of(blocks.begin(), blocks.end(), [bits](std::uint64_t b) {
    return std::popcount(bits & b) > 1;
  });
}

}  // namespace

int tail_size(int k, int r) {
  if (k < 1 || r < 2) fail(Errc::kInvalidParams, "tail_size needs k >= 1, r >= 2");
  return static_cast<int>((static_cast<std::int64_t>(r) * k - 1) / (r - 1));
}

int tight_bound(const GroundParams& p) {
  require_admissible(p);
  const std::int64_t num = static_cast<std::int64_t>(p.r - 1) * p.n -
                           static_cast<std::int64_t>(p.r) * (p.k - 1);
  return static_cast<int>(ceil_div(num, p.r - 1));
}

PartitionCertificate build_tight_partition(const GroundParams& p) {
  require_admissible(p);
  const int s = tail_size(p.k, p.r);
  const int stars = p.n - s;
  std::vector<std::vector<KSubset>> members(stars + 1);
  // Colex enumeration keeps every family in colex order.
  for (const KSubset& f : enumerate_k_subsets(p.n, p.k)) {
    const int lo = f.min_element();
    members[lo <= stars ? lo - 1 : stars].push_back(f);
  }
  PartitionCertificate cert;
  cert.params = p;
  cert.families.reserve(members.size());
  for (auto& m : members) cert.families.emplace_back(p.n, std::move(m));
  return cert;
}

PartSpec contiguous_blocks(int n, int r) {
  if (n < 1 || r < 2) fail(Errc::kInvalidParams, "contiguous_blocks needs n >= 1, r >= 2");
  PartSpec spec;
  spec.parts.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= r - 1; ++j) spec.parts[i].push_back(i * (r - 1) + j);
  }
  return spec;
}

std::vector<KSubset> transversals(const KSubset& f, int r) {
  const int lifted_n = (r - 1) * f.ground_n();
  if (r < 2) fail(Errc::kInvalidParams, "r must be >= 2");
  if (lifted_n > kWordBits) {
    fail(Errc::kCapExceeded, "blown-up ground set of size " + std::to_string(lifted_n) +
                                 " exceeds 64");
  }
  std::vector<std::uint64_t> out{0};
  for (int i : f.elements()) {
    std::vector<std::uint64_t> next;
    next.reserve(out.size() * (r - 1));
    for (std::uint64_t partial : out) {
      for (int j = 0; j < r - 1; ++j) {
        next.push_back(partial | (std::uint64_t{1} << ((i - 1) * (r - 1) + j)));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  std::vector<KSubset> result;
  result.reserve(out.size());
  for (std::uint64_t bits : out) result.emplace_back(lifted_n, bits);
  return result;
}

Blowup blow_up(const PartitionCertificate& cert) {
  if (!verify_partition_certificate(cert).ok) {
    fail(Errc::kInvalidCertificate, "source partition certificate does not verify");
  }
  const GroundParams& p = cert.params;
  Blowup out;
  out.map.source = cert;
  out.map.blocks = contiguous_blocks(p.n, p.r);
  const GroundParams lifted = out.map.lifted_params();
  if (lifted.n > kWordBits) {
    fail(Errc::kCapExceeded, "blown-up ground set of size " + std::to_string(lifted.n) +
                                 " exceeds 64");
  }

  const std::vector<std::uint64_t> blocks = out.map.blocks.masks(lifted.n);
  std::vector<KSubset>& vertices = out.map.vertices;
  vertices = enumerate_k_subsets(lifted.n, lifted.k);
  std::erase_if(vertices, [&](const KSubset& v) {
    return !meets_each_block_once(v.bits(), blocks);
  });
  std::unordered_map<std::uint64_t, std::size_t> id_of;
  id_of.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) id_of.emplace(vertices[i].bits(), i);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<BlowupMap::Origin> origin(vertices.size(), {kUnset, kUnset});
  std::vector<int> colors(vertices.size(), -1);
  for (std::size_t fam = 0; fam < cert.families.size(); ++fam) {
    const SetFamily& family = cert.families[fam];
    for (std::size_t m = 0; m < family.size(); ++m) {
      for (const KSubset& g : transversals(family[m], p.r)) {
        const auto it = id_of.find(g.bits());
        if (it == id_of.end()) {
          fail(Errc::kInternal, "transversal " + g.to_string() + " is not a constrained vertex");
        }
        // G determines F as the set of blocks it meets, so a second origin
        // means the source was not a partition.
        if (origin[it->second].family != kUnset) {
          fail(Errc::kInternal, "blown-up vertex " + g.to_string() + " has two origins");
        }
        origin[it->second] = {fam, m};
        colors[it->second] = static_cast<int>(fam);
      }
    }
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
    fail(Errc::kInternal, "blow-up does not cover the constrained vertex set");
  }

  out.map.vertex_origin = std::move(origin);
  out.coloring.ground_n = lifted.n;
  out.coloring.k = lifted.k;
  out.coloring.r = lifted.r;
  out.coloring.parts = out.map.blocks;
  out.coloring.colors = std::move(colors);
  out.coloring.num_colors = static_cast<int>(cert.families.size());
  return out;
}

Report check_stable_embedding(const BlowupMap& map) {
  const GroundParams lifted = map.lifted_params();
  const std::vector<std::uint64_t> blocks = map.blocks.masks(lifted.n);
  Report report;
  std::uint64_t stable = 0;
  for (const KSubset& g : enumerate_k_subsets(lifted.n, lifted.k)) {
    if (!is_s_stable(g, lifted.r)) continue;
    ++stable;
    if (!meets_each_block_once(g.bits(), blocks)) {
      report.add({{}, "stable vertex " + g.to_string() + " has two points in one block", {}});
      continue;
    }
    const auto it = std::lower_bound(map.vertices.begin(), map.vertices.end(), g);
    if (it == map.vertices.end() || *it != g ||
        static_cast<std::size_t>(it - map.vertices.begin()) >= map.vertex_origin.size()) {
      report.add({{}, "stable vertex " + g.to_string() + " receives no color", {}});
      continue;
    }
    report.bump("stable_vertices_covered");
  }
  report.counters["stable_vertices"] = stable;
  return report;
}

}  // namespace klab
