#include "klab/verify.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "klab/error.h"

namespace klab {
namespace {

std::string describe(const SetFamily& family, std::span<const std::size_t> idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += ' ';
    out += family[i].to_string();
  }
  return out;
}

// Depth-first search for the lexicographically least inclusion-minimal
// subfamily (size <= r) with empty intersection. `order` lists member indices
// in colex order and `suffix_and[i]` is the intersection of members
// order[i..]: a node whose intersection still meets it cannot lead to an
// empty tuple, so its subtree is skipped.
class WitnessSearch {
 public:
  WitnessSearch(const SetFamily& family, int r) : family_(family), r_(r) {
    order_.resize(family.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return family[a] < family[b];
    });
    suffix_and_.assign(order_.size() + 1, ~std::uint64_t{0});
    for (std::size_t i = order_.size(); i-- > 0;) {
      suffix_and_[i] = suffix_and_[i + 1] & family[order_[i]].bits();
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    extend(0, ~std::uint64_t{0});
    return witness_;
  }

  std::uint64_t tuples_examined() const { return examined_; }

 private:
  bool extend(std::size_t start, std::uint64_t inter) {
    if ((inter & suffix_and_[start]) != 0) return false;
    for (std::size_t i = start; i < order_.size(); ++i) {
      const std::uint64_t next = inter & family_[order_[i]].bits();
      ++examined_;
      tuple_.push_back(order_[i]);
      if (next == 0) {
        if (is_minimal()) {
          witness_ = tuple_;
          return true;
        }
      } else if (static_cast<int>(tuple_.size()) < r_ && extend(i + 1, next)) {
        return true;
      }
      tuple_.pop_back();
    }
    return false;
  }

  bool is_minimal() const {
    for (std::size_t skip = 0; skip < tuple_.size(); ++skip) {
      std::uint64_t acc = ~std::uint64_t{0};
      for (std::size_t j = 0; j < tuple_.size(); ++j) {
        if (j != skip) acc &= family_[tuple_[j]].bits();
      }
      if (acc == 0) return false;
    }
    return true;
  }

  const SetFamily& family_;
  int r_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> suffix_and_;
  std::vector<std::size_t> tuple_;
  std::optional<std::vector<std::size_t>> witness_;
  std::uint64_t examined_ = 0;
};

// True iff `members` contains r pairwise disjoint sets.
bool has_disjoint_r_tuple(const std::vector<std::uint64_t>& members, int r,
                          std::size_t start, std::uint64_t used, int depth,
                          std::uint64_t& examined) {
  if (depth == r) return true;
  for (std::size_t i = start; i < members.size(); ++i) {
    ++examined;
    if (members[i] & used) continue;
    if (has_disjoint_r_tuple(members, r, i + 1, used | members[i], depth + 1, examined)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Report is_r_wise_intersecting(const SetFamily& family, int r) {
  if (r < 2) fail(Errc::kInvalidParams, "r must be >= 2");
  if (family.empty()) fail(Errc::kInvalidParams, "family must be nonempty");
  Report report;
  report.bump("families_checked");
  WitnessSearch search(family, r);
  if (auto witness = search.run()) {
    report.add({*witness,
                "subfamily of size " + std::to_string(witness->size()) +
                    " with empty common intersection: " + describe(family, *witness),
                std::nullopt});
  }
  report.bump("tuples_examined", search.tuples_examined());
  return report;
}

Report verify_partition_certificate(const PartitionCertificate& cert) {
  const GroundParams& p = cert.params;
  try {
    p.validate();
  } catch (const Error& e) {
    fail(Errc::kMalformedCertificate, std::string("bad parameters: ") + e.what());
  }
  Report report;
  // Subset bits -> first family holding it.
  std::unordered_map<std::uint64_t, std::size_t> first_family;
  std::uint64_t covered = 0;
  for (std::size_t f = 0; f < cert.families.size(); ++f) {
    const SetFamily& family = cert.families[f];
    if (family.ground_n() != p.n) {
      fail(Errc::kMalformedCertificate, "family " + std::to_string(f) +
                                            " is over a different ground set");
    }
    if (family.empty()) {
      report.add({{}, "family " + std::to_string(f) + " is empty", f});
      continue;
    }
    bool cardinality_ok = true;
    for (std::size_t m = 0; m < family.size(); ++m) {
      const KSubset& s = family[m];
      if (s.ground_n() != p.n) {
        fail(Errc::kMalformedCertificate, "member over a different ground set");
      }
      if (s.size() != p.k) {
        report.add({{m}, "member " + s.to_string() + " does not have k=" +
                             std::to_string(p.k) + " elements", f});
        cardinality_ok = false;
        continue;
      }
      auto [it, inserted] = first_family.emplace(s.bits(), f);
      if (inserted) {
        ++covered;
      } else {
        report.add({{m}, "duplicated subset " + s.to_string() + " (families " +
                             std::to_string(it->second) + " and " + std::to_string(f) + ")",
                    f});
      }
    }
    if (cardinality_ok) {
      Report sub = is_r_wise_intersecting(family, p.r);
      for (Violation& v : sub.violations) {
        v.family = f;
        v.reason = "family " + std::to_string(f) + " is not " + std::to_string(p.r) +
                   "-wise intersecting: " + v.reason;
        report.add(std::move(v));
      }
      for (const auto& [name, value] : sub.counters) report.bump(name, value);
    }
  }

  const std::uint64_t total = binomial(p.n, p.k);
  report.counters["subsets_expected"] = total;
  report.counters["subsets_covered"] = covered;
  if (covered != total) {
    constexpr std::size_t kMaxListed = 20;
    std::size_t listed = 0;
    // Enumerating is only affordable when the universe is small; otherwise
    // report the shortfall alone.
    if (total <= 1'000'000) {
      for (const KSubset& s : enumerate_k_subsets(p.n, p.k)) {
        if (first_family.contains(s.bits())) continue;
        if (listed++ < kMaxListed) report.add({{}, "uncovered subset " + s.to_string(), {}});
      }
    }
    if (listed > kMaxListed || total > 1'000'000) {
      report.add({{}, std::to_string(total - covered) + " uncovered subsets in total", {}});
    }
  }
  return report;
}

Report verify_coloring(const Hypergraph& h, std::span<const int> colors) {
  if (colors.size() != h.vertices.size()) {
    fail(Errc::kLengthMismatch, "got " + std::to_string(colors.size()) + " colors for " +
                                    std::to_string(h.vertices.size()) + " vertices");
  }
  Report report;
  for (const Edge& e : h.edges) {
    report.bump("edges_checked");
    if (e.empty()) continue;
    const int c = colors[e.front()];
    const bool mono = std::all_of(e.begin(), e.end(),
                                  [&](VertexId v) { return colors[v] == c; });
    if (mono) {
      report.add({std::vector<std::size_t>(e.begin(), e.end()),
                  "edge monochromatic in color " + std::to_string(c), std::nullopt});
    }
  }
  return report;
}

Report verify_coloring_certificate(const ColoringCertificate& cert) {
  const GroundParams p = cert.params();
  try {
    p.validate();
  } catch (const Error& e) {
    fail(Errc::kMalformedCertificate, std::string("bad parameters: ") + e.what());
  }
  if (cert.stable_s && cert.parts) {
    fail(Errc::kMalformedCertificate, "certificate names both a stability and a part spec");
  }
  if (cert.stable_s && *cert.stable_s < 1) {
    fail(Errc::kMalformedCertificate, "stability parameter must be >= 1");
  }

  std::vector<std::uint64_t> blocks;
  if (cert.parts) {
    std::uint64_t seen = 0;
    for (const auto& part : cert.parts->parts) {
      if (part.empty() || static_cast<int>(part.size()) > p.r - 1) {
        fail(Errc::kMalformedCertificate, "block sizes must lie in [1, r-1]");
      }
      std::uint64_t mask = 0;
      for (int e : part) {
        if (e < 1 || e > p.n) fail(Errc::kMalformedCertificate, "block element out of range");
        mask |= std::uint64_t{1} << (e - 1);
      }
      if ((mask & seen) != 0 || std::popcount(mask) != static_cast<int>(part.size())) {
        fail(Errc::kMalformedCertificate, "blocks overlap");
      }
      seen |= mask;
      blocks.push_back(mask);
    }
    const std::uint64_t all =
        p.n == kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << p.n) - 1;
    if (seen != all) {
      fail(Errc::kMalformedCertificate, "blocks do not cover the ground set");
    }
  }

  std::vector<KSubset> vertices = enumerate_k_subsets(p.n, p.k);
  std::erase_if(vertices, [&](const KSubset& v) {
    if (cert.stable_s && !is_s_stable(v, *cert.stable_s)) return true;
    for (std::uint64_t b : blocks) {
      if (std::popcount(v.bits() & b) > 1) return true;
    }
    return false;
  });

  if (cert.colors.size() != vertices.size()) {
    fail(Errc::kLengthMismatch, "got " + std::to_string(cert.colors.size()) +
                                    " colors for " + std::to_string(vertices.size()) +
                                    " vertices");
  }

  Report report;
  report.counters["vertices"] = vertices.size();
  std::vector<std::vector<std::uint64_t>> classes(std::max(cert.num_colors, 0));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const int c = cert.colors[v];
    if (c < 0 || c >= cert.num_colors) {
      report.add({{v}, "color " + std::to_string(c) + " outside [0, num_colors)", {}});
      continue;
    }
    classes[c].push_back(vertices[v].bits());
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      report.add({{}, "color " + std::to_string(c) + " is never used", {}});
      continue;
    }
    std::uint64_t examined = 0;
    if (has_disjoint_r_tuple(classes[c], p.r, 0, 0, 0, examined)) {
      report.add({{}, "color class " + std::to_string(c) + " contains " +
                          std::to_string(p.r) + " pairwise disjoint members", {}});
    }
    report.bump("tuples_examined", examined);
  }
  return report;
}

}  // namespace klab
