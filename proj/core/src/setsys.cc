#include "klab/setsys.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <unordered_set>

#include "klab/error.h"

namespace klab {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kWordBits + 1>, kWordBits + 1>;

// Pascal's triangle up to row 64; C(64, 32) < 2^61 so nothing overflows.
const BinomialTable& binomial_table() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (int n = 0; n <= kWordBits; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

std::uint64_t ground_mask(int n) {
  return n >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Next integer with the same popcount (Gosper). Caller guarantees x is not
// the last such pattern in range.
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return ripple | (((x ^ ripple) >> 2) / lowest);
}

}  // namespace

void GroundParams::validate(int cap) const {
  if (n < 1 || k < 1 || k > n || r < 2) {
    fail(Errc::kInvalidParams,
         "parameters must satisfy 1 <= k <= n and r >= 2 (got n=" +
             std::to_string(n) + " k=" + std::to_string(k) +
             " r=" + std::to_string(r) + ")");
  }
  if (n > cap || n > kWordBits) {
    fail(Errc::kCapExceeded, "ground set size " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(std::min(cap, kWordBits)));
  }
}

KSubset::KSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kWordBits) {
    fail(Errc::kInvalidParams, "ground set size out of range: " + std::to_string(n));
  }
  if ((bits & ~ground_mask(n)) != 0) {
    fail(Errc::kInvalidParams, "subset has elements beyond n=" + std::to_string(n));
  }
}

KSubset KSubset::from_elements(int n, std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      fail(Errc::kInvalidParams, "element " + std::to_string(e) +
                                     " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) {
      fail(Errc::kInvalidParams, "element " + std::to_string(e) + " repeated");
    }
    bits |= bit;
  }
  return KSubset(n, bits);
}

int KSubset::size() const noexcept { return std::popcount(bits_); }

bool KSubset::contains(int element) const noexcept {
  if (element < 1 || element > n_) return false;
  return (bits_ >> (element - 1)) & 1u;
}

int KSubset::min_element() const noexcept {
  return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string KSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

SetFamily::SetFamily(int ground_n, std::vector<KSubset> members)
    : ground_n_(ground_n), members_(std::move(members)) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(members_.size());
  for (const KSubset& m : members_) {
    if (m.ground_n() != ground_n_) {
      fail(Errc::kInvalidParams, "family member " + m.to_string() +
                                     " is not over ground set of size " +
                                     std::to_string(ground_n_));
    }
    if (!seen.insert(m.bits()).second) {
      fail(Errc::kInvalidParams, "family member " + m.to_string() + " repeated");
    }
  }
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kWordBits || k < 0 || k > n) return 0;
  return binomial_table()[n][k];
}

std::vector<KSubset> enumerate_k_subsets(int n, int k, int cap) {
  if (n < 0 || k < 0 || k > n) {
    fail(Errc::kInvalidParams, "enumerate_k_subsets needs 0 <= k <= n (got n=" +
                                   std::to_string(n) + " k=" + std::to_string(k) + ")");
  }
  if (n > cap || n > kWordBits) {
    fail(Errc::kCapExceeded, "ground set size " + std::to_string(n) + " exceeds cap");
  }
  const std::uint64_t count = binomial(n, k);
  std::vector<KSubset> out;
  out.reserve(count);
  std::uint64_t bits = ground_mask(k);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(n, bits);
    if (i + 1 < count) bits = next_same_popcount(bits);
  }
  return out;
}

std::uint64_t colex_rank(const KSubset& subset) {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t b = subset.bits(); b != 0; b &= b - 1, ++i) {
    rank += binomial(std::countr_zero(b), i);
  }
  return rank;
}

std::uint64_t colex_rank(const KSubset& subset, int k) {
  if (subset.size() != k) {
    fail(Errc::kInvalidParams, "subset " + subset.to_string() + " does not have " +
                                   std::to_string(k) + " elements");
  }
  return colex_rank(subset);
}

KSubset unrank_k_subset(int n, int k, std::uint64_t rank) {
  if (n < 0 || n > kWordBits || k < 0 || k > n) {
    fail(Errc::kInvalidParams, "unrank needs 0 <= k <= n <= 64");
  }
  if (rank >= binomial(n, k)) {
    fail(Errc::kInvalidParams, "rank " + std::to_string(rank) + " out of range for C(" +
                                   std::to_string(n) + "," + std::to_string(k) + ")");
  }
  std::uint64_t bits = 0;
  int top = n - 1;
  for (int i = k; i >= 1; --i) {
    // Largest position c with C(c, i) <= rank.
    while (binomial(top, i) > rank) --top;
    bits |= std::uint64_t{1} << top;
    rank -= binomial(top, i);
    --top;
  }
  return KSubset(n, bits);
}

int cyclic_distance(int a, int b, int n) {
  if (n < 1 || a < 1 || a > n || b < 1 || b > n) {
    fail(Errc::kInvalidParams, "cyclic_distance needs 1 <= a, b <= n");
  }
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

bool is_s_stable(const KSubset& subset, int s) {
  if (s < 1) fail(Errc::kInvalidParams, "stability parameter must be >= 1");
  const std::vector<int> elems = subset.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (cyclic_distance(elems[i], elems[j], subset.ground_n()) < s) return false;
    }
  }
  return true;
}

KSubset common_intersection(std::span<const KSubset> family) {
  if (family.empty()) fail(Errc::kEmptyInput, "common_intersection of an empty list");
  KSubset acc = family.front();
  for (const KSubset& m : family.subspan(1)) {
    if (m.ground_n() != acc.ground_n()) {
      fail(Errc::kInvalidParams, "members over different ground sets");
    }
    acc = acc & m;
  }
  return acc;
}

}  // namespace klab
