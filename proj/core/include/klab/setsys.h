#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace klab {

// One machine word per subset; every ground set handled by the library fits.
inline constexpr int kWordBits = 64;

// Problem parameters: all k-subsets of [n], families required to be
// r-wise intersecting.
struct GroundParams {
  int n = 0;
  int k = 0;
  int r = 2;

  // r*k <= (r-1)*n, the regime in which the tight bound applies.
  bool admissible() const noexcept {
    return static_cast<std::int64_t>(r) * k <=
           static_cast<std::int64_t>(r - 1) * n;
  }

  // Throws kInvalidParams unless 1 <= k <= n, r >= 2 and n fits the word
  // budget `cap`.
  void validate(int cap = kWordBits) const;

  friend bool operator==(const GroundParams&, const GroundParams&) = default;
};

// A subset of [n] stored as a bit vector: bit i set iff element i+1 belongs.
class KSubset {
 public:
  KSubset() = default;
  // Throws kInvalidParams if n is outside [0, 64] or bits reach past n.
  KSubset(int n, std::uint64_t bits);

  // Elements are 1-based labels.
  static KSubset from_elements(int n, std::span<const int> elements);
  static KSubset from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
  }

  int ground_n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(int element) const noexcept;
  bool intersects(const KSubset& other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element (1-based); 0 for the empty set.
  int min_element() const noexcept;
  std::vector<int> elements() const;
  std::string to_string() const;

  friend KSubset operator&(const KSubset& a, const KSubset& b) {
    return KSubset(a.n_, a.bits_ & b.bits_, Unchecked{});
  }

  // Colex order on a common ground set is numeric order of the bit pattern.
  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  struct Unchecked {};
  KSubset(int n, std::uint64_t bits, Unchecked) : n_(n), bits_(bits) {}

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// An ordered family of distinct subsets of a common ground set.
class SetFamily {
 public:
  SetFamily() = default;
  // Throws kInvalidParams on a ground-set mismatch or a repeated member.
  SetFamily(int ground_n, std::vector<KSubset> members);

  int ground_n() const noexcept { return ground_n_; }
  const std::vector<KSubset>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const KSubset& operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int ground_n_ = 0;
  std::vector<KSubset> members_;
};

// C(n, k) for 0 <= n <= 64; zero when k is out of range.
std::uint64_t binomial(int n, int k);

// All k-subsets of [n] in colex order. Throws kCapExceeded when n > cap and
// kInvalidParams when k > n or either argument is negative.
std::vector<KSubset> enumerate_k_subsets(int n, int k, int cap = kWordBits);

// Position of `subset` among the |subset|-subsets of its ground set in colex
// order. The inverse is unrank_k_subset.
std::uint64_t colex_rank(const KSubset& subset);
std::uint64_t colex_rank(const KSubset& subset, int k);
KSubset unrank_k_subset(int n, int k, std::uint64_t rank);

// min(|a-b|, n-|a-b|) on the cycle 1..n.
int cyclic_distance(int a, int b, int n);

// True iff every pair of distinct elements sits at cyclic distance >= s.
bool is_s_stable(const KSubset& subset, int s);

// Bitwise intersection of all members. Throws kEmptyInput on an empty list.
KSubset common_intersection(std::span<const KSubset> family);

}  // namespace klab
