#pragma once
// Set partitions of [n] = {1,..,n}, n <= 64, blocks as 64-bit masks.
//
// A Partition is an ordered list of pairwise-disjoint nonempty blocks, sorted
// by minimum element.  It may be "partial" (union a proper subset of [n]); a
// full k-partition of [n] additionally has union [n] and exactly k blocks.
// Text format: {1,4|2|3,5} — blocks separated by '|', elements ascending,
// blocks by minimum element.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosspart {

using Mask = std::uint64_t;

constexpr int kMaxGround = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
// lowest element of a nonempty mask, 1-based
inline int min_element(Mask m) { return __builtin_ctzll(m) + 1; }
inline Mask full_mask(int n) { return n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }
inline Mask element_mask(int e) { return Mask(1) << (e - 1); }

// Validated ground set size for enumerated work.
struct GroundSet {
  int n;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [1,64]");
  }
};

class Partition {
 public:
  Partition() = default;  // empty partial partition

  // Normalizes block order; throws on empty or overlapping blocks.
  static Partition from_blocks(std::vector<Mask> blocks);
  static Partition from_elements(const std::vector<std::vector<int>>& blocks);
  // Parses the {a,b|c|...} text form.
  static Partition parse(const std::string& text);

  const std::vector<Mask>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }
  Mask union_mask() const;
  int max_element() const;  // 0 if empty
  bool contains_block(Mask b) const;
  bool is_full_partition_of(int n) const { return union_mask() == full_mask(n); }

  // Number of common blocks (set intersection of the block sets).
  int shared_count(const Partition& other) const;
  // The common blocks themselves, as a (partial) partition.
  Partition shared_blocks(const Partition& other) const;
  bool subset_of(const Partition& other) const;
  // Blocks of size one, as a partial partition.
  Partition singletons() const;

  std::string str() const;

  // Restricted-growth comparison: order partitions of a common ground set by
  // the sequence (block index of element 1, element 2, ...), block indices by
  // first appearance.  This is the library's canonical enumeration order.
  static bool rgs_less(const Partition& a, const Partition& b);

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  struct Hash {
    std::size_t operator()(const Partition& p) const {
      std::size_t h = 1469598103934665603ull;
      for (Mask m : p.blocks_) {
        h ^= std::hash<Mask>()(m);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

 private:
  std::vector<Mask> blocks_;  // sorted by minimum element, pairwise disjoint, nonempty
};

// Partition of [m] into m singletons {1},{2},...,{m}.
Partition all_singletons(int m);
// Singletons {lo},...,{hi} (partial partition).
Partition singleton_range(int lo, int hi);

// RGS string of a full partition of [n] (a[0]=0 always).
std::vector<int> rgs_of(const Partition& p, int n);

}  // namespace crosspart
