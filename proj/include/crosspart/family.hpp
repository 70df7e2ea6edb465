#pragma once
// Families of full k-partitions of [n]: canonical sorted member list plus a
// membership index.  File format:
//   n=<n> k=<k>
//   {1,4|2|3,5}
//   ...

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "crosspart/partition.hpp"

namespace crosspart {

class Family {
 public:
  Family(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("family: need 1 <= n <= 64");
    if (k < 1 || k > n) throw std::invalid_argument("family: need 1 <= k <= n");
  }
  // Validates every member (full k-partition of [n]), dedupes, sorts into
  // canonical (RGS-lex) order.
  Family(int n, int k, std::vector<Partition> members);

  int ground_n() const { return n_; }
  int block_count_k() const { return k_; }
  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Partition& p) const { return index_.count(p) > 0; }

  void add(const Partition& p);  // keeps order + index

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.members_ == b.members_;
  }
  friend bool operator!=(const Family& a, const Family& b) { return !(a == b); }

  void write(std::ostream& os) const;
  std::string to_text() const;
  static Family read(std::istream& is);
  static Family load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  int n_, k_;
  std::vector<Partition> members_;
  std::unordered_set<Partition, Partition::Hash> index_;
};

// Blocks present in every member of every family (error on an empty family:
// the intersection over nothing is not meaningful here).
Partition common_blocks(const std::vector<const Family*>& families);
Partition common_blocks(const Family& f);
Partition common_blocks(const Family& f, const Family& g);

// A tuple of families is trivial when >= t blocks are common to every member
// of every family.
bool is_trivial_tuple(const std::vector<const Family*>& families, int t);

}  // namespace crosspart
