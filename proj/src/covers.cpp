#include "crosspart/covers.hpp"

#include <algorithm>
#include <set>

#include "crosspart/enumerate.hpp"

namespace crosspart {

bool is_t_cover(const Partition& cover, const std::vector<Partition>& members, int t) {
  for (const auto& m : members)
    if (cover.shared_count(m) < t) return false;
  return true;
}

bool is_t_cover(const Partition& cover, const Family& fam, int t) {
  return is_t_cover(cover, fam.members(), t);
}

namespace {

struct CoverSearch {
  const std::vector<Partition>& members;
  int t;
  int size_limit;
  bool collect_all;  // exact-size enumeration vs first-hit existence
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Mask> chosen{};
  Mask chosen_union = 0;
  std::set<std::vector<Mask>> seen{};  // dedupe partial states (order-free)
  std::set<std::vector<Mask>> found{};
  bool exists = false;

  bool run() {
    dfs();
    return exists;
  }

  void dfs() {
    if (exists && !collect_all) return;
    if (++nodes > budget)
      throw BudgetError("cover search: node budget exceeded",
                        BigCount(static_cast<unsigned long>(nodes)), budget);
    {
      std::vector<Mask> key = chosen;
      std::sort(key.begin(), key.end());
      if (!seen.insert(std::move(key)).second) return;
    }
    // Most-deficient member: fewest shared blocks with the partial cover.
    int worst = -1, worst_shared = t;
    Partition cur = Partition::from_blocks(chosen);
    for (std::size_t i = 0; i < members.size(); i++) {
      int s = cur.shared_count(members[i]);
      if (s < worst_shared) {
        worst_shared = s;
        worst = static_cast<int>(i);
      }
    }
    if (worst < 0) {
      // Already a t-cover (size never exceeds size_limit by the prune below).
      exists = true;
      if (!collect_all) return;
      if (static_cast<int>(chosen.size()) == size_limit) {
        std::vector<Mask> key = chosen;
        std::sort(key.begin(), key.end());
        found.insert(std::move(key));
        return;
      }
      // Exact-size enumeration may pad with any further disjoint member block.
      for (const auto& m : members)
        for (Mask b : m.blocks())
          if (!(b & chosen_union)) extend(b);
      return;
    }
    // Any completion shares >= t with the worst member, so it uses at least
    // t - worst_shared of its untouched blocks; prune when they cannot fit.
    if (static_cast<int>(chosen.size()) + (t - worst_shared) > size_limit) return;
    for (Mask b : members[static_cast<std::size_t>(worst)].blocks())
      if (!(b & chosen_union)) extend(b);
  }

  void extend(Mask b) {
    chosen.push_back(b);
    chosen_union |= b;
    dfs();
    chosen_union &= ~b;
    chosen.pop_back();
  }
};

int max_possible_cover_size(const std::vector<Partition>& members, int n_hint) {
  int mx = 0;
  for (const auto& m : members) mx = std::max(mx, m.max_element());
  return std::max(mx, n_hint);
}

}  // namespace

CoverResult tau_t(const std::vector<Partition>& members, int t, bool want_witnesses,
                  std::uint64_t node_budget) {
  if (members.empty()) throw std::invalid_argument("tau_t: empty collection");
  if (t < 1) throw std::invalid_argument("tau_t: need t >= 1");
  std::uint64_t budget = node_budget ? node_budget : kDefaultBudget;
  int nmax = max_possible_cover_size(members, 1);
  for (int s = t; s <= nmax; s++) {
    CoverSearch search{members, t, s, false, budget};
    if (search.run()) {
      CoverResult r;
      r.tau = s;
      if (want_witnesses) r.witnesses = min_covers(members, t, s, node_budget);
      return r;
    }
  }
  throw std::domain_error("tau_t: no t-cover exists for this collection");
}

CoverResult tau_t(const Family& fam, int t, bool want_witnesses, std::uint64_t node_budget) {
  return tau_t(fam.members(), t, want_witnesses, node_budget);
}

std::vector<Partition> min_covers(const std::vector<Partition>& members, int t, int size,
                                  std::uint64_t node_budget) {
  if (members.empty()) throw std::invalid_argument("min_covers: empty collection");
  if (t < 1) throw std::invalid_argument("min_covers: need t >= 1");
  std::vector<Partition> out;
  if (size < t) return out;  // a j-partition shares at most j blocks
  CoverSearch search{members, t, size, true, node_budget ? node_budget : kDefaultBudget};
  search.run();
  for (const auto& masks : search.found) out.push_back(Partition::from_blocks(masks));
  std::sort(out.begin(), out.end(), Partition::rgs_less);
  return out;
}

std::vector<Partition> min_covers(const Family& fam, int t, int size, std::uint64_t node_budget) {
  return min_covers(fam.members(), t, size, node_budget);
}

}  // namespace crosspart
