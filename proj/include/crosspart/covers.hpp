#pragma once
// t-covers: a partition T is a t-cover of a collection of partitions when it
// shares at least t blocks with every one of them.  tau_t is the least size of
// a t-cover.  Search is exact DFS branch-and-bound over blocks appearing in
// members (sound: only such blocks contribute to sharing counts), branching on
// the member currently sharing fewest blocks with the partial cover.
//
// The collection may hold partial partitions (e.g. blockwise intersections of
// members of several families), so the core API takes vector<Partition>.

#include <cstdint>
#include <optional>
#include <vector>

#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

namespace crosspart {

bool is_t_cover(const Partition& cover, const std::vector<Partition>& members, int t);
bool is_t_cover(const Partition& cover, const Family& fam, int t);

struct CoverResult {
  int tau = 0;
  std::vector<Partition> witnesses;  // all minimum covers, when requested
};

// Least t-cover size via iterative deepening (t, t+1, ..., n).  Pre: t >= 1,
// members nonempty.  Throws std::domain_error if no t-cover exists at all
// (possible for non-t-intersecting collections).
CoverResult tau_t(const std::vector<Partition>& members, int t, bool want_witnesses = false,
                  std::uint64_t node_budget = 0);
CoverResult tau_t(const Family& fam, int t, bool want_witnesses = false,
                  std::uint64_t node_budget = 0);

// All t-covers of exactly `size` drawn from member blocks (empty when
// size < t, since a j-partition shares at most j blocks).
std::vector<Partition> min_covers(const std::vector<Partition>& members, int t, int size,
                                  std::uint64_t node_budget = 0);
std::vector<Partition> min_covers(const Family& fam, int t, int size,
                                  std::uint64_t node_budget = 0);

}  // namespace crosspart
