#include "crosspart/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "crosspart/enumerate.hpp"

namespace crosspart {

namespace {

// Multiset of block-size multisets — invariant under relabeling, used as a
// cheap exact reject before the permutation search.
std::vector<std::vector<int>> size_profile(const Family& f) {
  std::vector<std::vector<int>> prof;
  prof.reserve(f.size());
  for (const auto& p : f.members()) {
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(p.size()));
    for (Mask b : p.blocks()) sizes.push_back(popcount(b));
    std::sort(sizes.begin(), sizes.end());
    prof.push_back(std::move(sizes));
  }
  std::sort(prof.begin(), prof.end());
  return prof;
}

Mask apply_perm(Mask b, const std::vector<int>& perm) {
  Mask out = 0;
  while (b) {
    int e = min_element(b);
    b &= b - 1;
    out |= element_mask(perm[static_cast<std::size_t>(e - 1)]);
  }
  return out;
}

// Serialized sorted member list of sigma(f): each member's blocks re-sorted,
// members sorted, everything flattened into a byte string of masks.
void encode_into(const Family& f, const std::vector<int>& perm, std::string& out) {
  std::vector<std::vector<Mask>> members;
  members.reserve(f.size());
  for (const auto& p : f.members()) {
    std::vector<Mask> bs;
    bs.reserve(static_cast<std::size_t>(p.size()));
    for (Mask b : p.blocks()) bs.push_back(apply_perm(b, perm));
    std::sort(bs.begin(), bs.end(), [](Mask a, Mask b2) { return (a & -a) < (b2 & -b2); });
    members.push_back(std::move(bs));
  }
  std::sort(members.begin(), members.end());
  for (const auto& m : members) {
    for (Mask b : m)
      for (int by = 7; by >= 0; by--) out.push_back(static_cast<char>((b >> (8 * by)) & 0xff));
    out.push_back('\x01');  // member separator
  }
  out.push_back('\x02');  // family separator
}

std::uint64_t fact_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; i++) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::string canonical_form_joint(const std::vector<const Family*>& fams,
                                 std::uint64_t perm_budget) {
  if (fams.empty()) throw std::invalid_argument("canonical_form: no families");
  int n = fams[0]->ground_n();
  std::size_t total_members = 0;
  for (const Family* f : fams) {
    if (f->ground_n() != n) throw std::invalid_argument("canonical_form: ground-set mismatch");
    total_members += f->size();
  }
  std::uint64_t budget = perm_budget ? perm_budget : 100'000'000;
  if (n > 20 || fact_u64(n) > budget / std::max<std::size_t>(total_members, 1))
    throw BudgetError("canonical_form: n! * members exceeds budget",
                      BigCount(static_cast<unsigned long>(n <= 20 ? fact_u64(n) : 0)), budget);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::string best, cur;
  do {
    cur.clear();
    for (const Family* f : fams) encode_into(*f, perm, cur);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string canonical_form(const Family& f, std::uint64_t perm_budget) {
  return canonical_form_joint({&f}, perm_budget);
}

bool are_isomorphic(const Family& a, const Family& b, std::uint64_t perm_budget) {
  if (a.ground_n() != b.ground_n())
    throw std::invalid_argument("are_isomorphic: ground-set mismatch");
  if (a.block_count_k() != b.block_count_k() || a.size() != b.size()) return false;
  if (size_profile(a) != size_profile(b)) return false;  // cheap exact-invariant reject
  return canonical_form(a, perm_budget) == canonical_form(b, perm_budget);
}

bool are_isomorphic_joint(const std::vector<const Family*>& a,
                          const std::vector<const Family*>& b, std::uint64_t perm_budget) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); i++) {
    if (a[i]->ground_n() != b[i]->ground_n())
      throw std::invalid_argument("are_isomorphic: ground-set mismatch");
    if (a[i]->block_count_k() != b[i]->block_count_k() || a[i]->size() != b[i]->size())
      return false;
    if (size_profile(*a[i]) != size_profile(*b[i])) return false;
  }
  return canonical_form_joint(a, perm_budget) == canonical_form_joint(b, perm_budget);
}

}  // namespace crosspart
