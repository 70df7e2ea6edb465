#pragma once

// Cross t-intersecting tuples of three or more families.  The choice
// intersections {common blocks of one member from each family} are never
// materialized unless small; everything runs on a reachable-subset dynamic
// program over one partition's blocks.

#include <cstdint>
#include <vector>

#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

namespace crosspart {

// Minimum, over every way of choosing one member from each family in
// `others`, of the number of blocks of `base` present in all chosen members.
// Throws std::invalid_argument on an empty family or a ground-set mismatch.
int min_shared_over_choices(const Partition& base, const std::vector<const Family*>& others);
int min_shared_over_choices(const Partition& base, const std::vector<Family>& others);

// True iff every choice shares at least t blocks with `base`; rejects early
// as soon as some reachable subset drops below t blocks.
bool min_shared_at_least(const Partition& base, const std::vector<const Family*>& others, int t);
bool min_shared_at_least(const Partition& base, const std::vector<Family>& others, int t);

// s_i = minimum size of a choice intersection taken over families other than
// i, for each i; computed by the same dynamic program, additionally
// minimizing over the first other family's member.
std::vector<int> s_values(const std::vector<Family>& families);

// Maximal completion of position i: every k_i-partition whose shared count
// with each choice from the other families is at least t.
Family tuple_dual(std::size_t i, const std::vector<Family>& families, int t,
                  std::uint64_t budget = 0);

// Every choice across all r families shares at least t blocks.
bool is_r_cross_intersecting(const std::vector<Family>& families, int t);

// Every family equals its own maximal completion.
bool is_tuple_maximal(const std::vector<Family>& families, int t, std::uint64_t budget = 0);

struct TupleSweepResult {
  std::vector<Family> families;
  bool fixed_point_reached = false;
  bool cycle_detected = false;  // a finding, not an error
  int sweeps = 0;
};

// Repeatedly replaces each family by its maximal completion (one pass over
// i = 0..r-1 per sweep) until the tuple stops changing, a previously seen
// state recurs, or max_sweeps passes are spent.
TupleSweepResult tuple_fixed_point(std::vector<Family> families, int t, int max_sweeps = 32,
                                   std::uint64_t budget = 0);

// The distinct choice intersections for position i, as partial partitions
// (possibly including the empty one).  Guarded: throws BudgetError when the
// product of the other family sizes exceeds `limit`.
std::vector<Partition> materialize_choice_intersections(std::size_t i,
                                                        const std::vector<Family>& families,
                                                        std::uint64_t limit = 100000);

}  // namespace crosspart
