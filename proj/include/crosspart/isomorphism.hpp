#pragma once
// Isomorphism of families under ground-set relabeling: exact search over
// permutations for small n, pruned by cheap invariants.  Joint canonical forms
// over a list of families allow comparing pairs/tuples under one common
// relabeling.

#include <cstdint>
#include <string>
#include <vector>

#include "crosspart/family.hpp"

namespace crosspart {

// Canonical encoding: the lexicographically-least serialized member list over
// all permutations of [n].  Exact; guarded by perm_budget (number of
// permutation-encode steps) because n! grows fast.  Throws BudgetError when
// n! * total-members exceeds the budget.
std::string canonical_form(const Family& f, std::uint64_t perm_budget = 0);

// One permutation applied jointly to all families (order matters).
std::string canonical_form_joint(const std::vector<const Family*>& fams,
                                 std::uint64_t perm_budget = 0);

bool are_isomorphic(const Family& a, const Family& b, std::uint64_t perm_budget = 0);
// Pairwise (e.g. cross-intersecting pair) isomorphism: one permutation maps
// a[i] onto b[i] for every i.
bool are_isomorphic_joint(const std::vector<const Family*>& a,
                          const std::vector<const Family*>& b,
                          std::uint64_t perm_budget = 0);

}  // namespace crosspart
