#include "crosspart/tuples.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "crosspart/enumerate.hpp"

namespace crosspart {

namespace {

std::vector<const Family*> as_pointers(const std::vector<Family>& families) {
  std::vector<const Family*> out;
  out.reserve(families.size());
  for (const Family& f : families) out.push_back(&f);
  return out;
}

void validate_others(const Partition& base, const std::vector<const Family*>& others) {
  // base is a full partition of its ground set, so its largest element names
  // that set; every family must live on exactly the same one.
  for (const Family* fam : others) {
    if (fam == nullptr || fam->empty())
      throw std::invalid_argument("choice minimum: every family must be nonempty");
    if (static_cast<int>(base.max_element()) != fam->ground_n())
      throw std::invalid_argument("choice minimum: ground-set mismatch");
  }
}

// Bit b of a member's mask: block b of `base` is a block of the member.
// Deduplicated; members with identical masks constrain choices identically.
std::vector<std::uint64_t> member_masks(const Partition& base, const Family& fam) {
  const std::vector<Mask>& blocks = base.blocks();
  std::vector<std::uint64_t> masks;
  masks.reserve(fam.size());
  for (const Partition& member : fam.members()) {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < blocks.size(); b++)
      if (member.contains_block(blocks[b])) m |= std::uint64_t(1) << b;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

void dedupe(std::vector<std::uint64_t>& states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
}

int popcount64(std::uint64_t v) { return __builtin_popcountll(v); }

}  // namespace

int min_shared_over_choices(const Partition& base, const std::vector<const Family*>& others) {
  validate_others(base, others);
  std::size_t m = base.size();
  std::uint64_t full = m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
  std::vector<std::uint64_t> reachable{full};
  for (const Family* fam : others) {
    std::vector<std::uint64_t> masks = member_masks(base, *fam);
    std::vector<std::uint64_t> next;
    next.reserve(reachable.size() * masks.size());
    for (std::uint64_t s : reachable)
      for (std::uint64_t mm : masks) {
        std::uint64_t ns = s & mm;
        if (ns == 0) return 0;  // subsets only shrink from here
        next.push_back(ns);
      }
    dedupe(next);
    reachable.swap(next);
  }
  int best = static_cast<int>(m);
  for (std::uint64_t s : reachable) best = std::min(best, popcount64(s));
  return best;
}

int min_shared_over_choices(const Partition& base, const std::vector<Family>& others) {
  return min_shared_over_choices(base, as_pointers(others));
}

bool min_shared_at_least(const Partition& base, const std::vector<const Family*>& others, int t) {
  validate_others(base, others);
  std::size_t m = base.size();
  if (static_cast<int>(m) < t) return false;
  std::uint64_t full = m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
  std::vector<std::uint64_t> reachable{full};
  for (const Family* fam : others) {
    std::vector<std::uint64_t> masks = member_masks(base, *fam);
    std::vector<std::uint64_t> next;
    next.reserve(reachable.size() * masks.size());
    for (std::uint64_t s : reachable)
      for (std::uint64_t mm : masks) {
        std::uint64_t ns = s & mm;
        if (popcount64(ns) < t) return false;
        next.push_back(ns);
      }
    dedupe(next);
    reachable.swap(next);
  }
  return true;
}

bool min_shared_at_least(const Partition& base, const std::vector<Family>& others, int t) {
  return min_shared_at_least(base, as_pointers(others), t);
}

std::vector<int> s_values(const std::vector<Family>& families) {
  if (families.size() < 2) throw std::invalid_argument("s_values: need at least two families");
  std::vector<int> out;
  out.reserve(families.size());
  for (std::size_t i = 0; i < families.size(); i++) {
    std::vector<const Family*> others;
    for (std::size_t j = 0; j < families.size(); j++)
      if (j != i) others.push_back(&families[j]);
    const Family* first = others.front();
    if (first->empty()) throw std::invalid_argument("s_values: every family must be nonempty");
    std::vector<const Family*> rest(others.begin() + 1, others.end());
    int best = -1;
    for (const Partition& member : first->members()) {
      int value = min_shared_over_choices(member, rest);
      if (best < 0 || value < best) best = value;
      if (best == 0) break;
    }
    out.push_back(best);
  }
  return out;
}

Family tuple_dual(std::size_t i, const std::vector<Family>& families, int t,
                  std::uint64_t budget) {
  if (i >= families.size()) throw std::invalid_argument("tuple_dual: index out of range");
  std::vector<const Family*> others;
  // An empty family constrains nothing (its dual is the whole universe), and
  // sweeps legitimately pass through such states, so skip rather than reject.
  for (std::size_t j = 0; j < families.size(); j++)
    if (j != i && !families[j].empty()) others.push_back(&families[j]);
  int n = families[i].ground_n();
  int k = families[i].block_count_k();
  check_enumeration_budget(n, k, resolved_budget(budget), "tuple dual");
  Family out(n, k);
  for_each_partition(n, k, [&](const std::vector<Mask>& blocks) {
    Partition candidate = Partition::from_blocks(blocks);
    if (min_shared_at_least(candidate, others, t)) out.add(candidate);
    return true;
  });
  return out;
}

bool is_r_cross_intersecting(const std::vector<Family>& families, int t) {
  if (families.size() < 2)
    throw std::invalid_argument("cross-intersection check: need at least two families");
  std::vector<const Family*> others;
  for (std::size_t j = 1; j < families.size(); j++) others.push_back(&families[j]);
  for (const Partition& member : families[0].members())
    if (!min_shared_at_least(member, others, t)) return false;
  return true;
}

bool is_tuple_maximal(const std::vector<Family>& families, int t, std::uint64_t budget) {
  for (std::size_t i = 0; i < families.size(); i++) {
    Family completion = tuple_dual(i, families, t, budget);
    if (!(completion.members() == families[i].members())) return false;
  }
  return true;
}

namespace {

std::string tuple_key(const std::vector<Family>& families) {
  std::string key;
  for (const Family& fam : families) {
    key += fam.to_text();
    key += '\x1f';
  }
  return key;
}

}  // namespace

TupleSweepResult tuple_fixed_point(std::vector<Family> families, int t, int max_sweeps,
                                   std::uint64_t budget) {
  TupleSweepResult result;
  std::unordered_set<std::string> seen;
  seen.insert(tuple_key(families));
  for (int sweep = 0; sweep < max_sweeps; sweep++) {
    bool changed = false;
    for (std::size_t i = 0; i < families.size(); i++) {
      Family completion = tuple_dual(i, families, t, budget);
      if (!(completion.members() == families[i].members())) {
        families[i] = std::move(completion);
        changed = true;
      }
    }
    result.sweeps = sweep + 1;
    if (!changed) {
      result.fixed_point_reached = true;
      break;
    }
    if (!seen.insert(tuple_key(families)).second) {
      result.cycle_detected = true;
      break;
    }
  }
  result.families = std::move(families);
  return result;
}

std::vector<Partition> materialize_choice_intersections(std::size_t i,
                                                        const std::vector<Family>& families,
                                                        std::uint64_t limit) {
  if (i >= families.size())
    throw std::invalid_argument("choice intersections: index out of range");
  std::vector<const Family*> others;
  for (std::size_t j = 0; j < families.size(); j++)
    if (j != i) others.push_back(&families[j]);
  BigCount product(std::uint64_t(1));
  for (const Family* fam : others) {
    if (fam->empty())
      throw std::invalid_argument("choice intersections: every family must be nonempty");
    product = product * BigCount(std::uint64_t(fam->size()));
  }
  if (product > BigCount(limit))
    throw BudgetError("choice intersections exceed the materialization limit", product, limit);

  std::vector<Partition> out;
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> odometer(others.size(), 0);
  for (;;) {
    std::vector<Mask> common = others[0]->members()[odometer[0]].blocks();
    for (std::size_t d = 1; d < others.size() && !common.empty(); d++) {
      const Partition& choice = others[d]->members()[odometer[d]];
      std::size_t keep = 0;
      for (Mask b : common)
        if (choice.contains_block(b)) common[keep++] = b;
      common.resize(keep);
    }
    Partition intersection = Partition::from_blocks(std::move(common));
    if (seen.insert(intersection.str()).second) out.push_back(std::move(intersection));

    std::size_t d = 0;
    while (d < odometer.size()) {
      if (++odometer[d] < others[d]->size()) break;
      odometer[d] = 0;
      d++;
    }
    if (d == odometer.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.blocks() < b.blocks();
  });
  return out;
}

}  // namespace crosspart
