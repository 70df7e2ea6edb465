#pragma once
// Brute-force reference implementations used only by the tests.  Everything
// here favors obviousness over speed, and deliberately avoids the library's
// enumerator, memoization, and search code so the two sides can disagree:
// partitions are generated by direct element placement, counts by a plain
// 2-d recurrence table, covers/duals/minima by exhaustive loops.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "crosspart/bigint.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

namespace oracles {

using crosspart::BigCount;
using crosspart::Family;
using crosspart::Mask;
using crosspart::Partition;

// All k-partitions of [n]: element i either joins an existing block or opens
// a new one.
inline void place_elements(int n, int next, int k, std::vector<Mask>& blocks,
                           std::vector<Partition>& out) {
  if (next > n) {
    if (static_cast<int>(blocks.size()) == k) out.push_back(Partition::from_blocks(blocks));
    return;
  }
  Mask e = crosspart::element_mask(next);
  for (std::size_t i = 0; i < blocks.size(); i++) {
    blocks[i] |= e;
    place_elements(n, next + 1, k, blocks, out);
    blocks[i] &= ~e;
  }
  if (static_cast<int>(blocks.size()) < k) {
    blocks.push_back(e);
    place_elements(n, next + 1, k, blocks, out);
    blocks.pop_back();
  }
}

inline std::vector<Partition> all_partitions(int n, int k) {
  std::vector<Partition> out;
  std::vector<Mask> blocks;
  place_elements(n, 1, k, blocks, out);
  return out;
}

// Plain recurrence table; fits unsigned 64-bit comfortably for n <= 30 is NOT
// guaranteed, so keep oracle calls at n <= 20 (S(20,8) ~ 1.7e13 still fits).
inline unsigned long long stirling_table(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling_table: negative input");
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  std::vector<std::vector<unsigned long long>> s(
      static_cast<std::size_t>(n) + 1,
      std::vector<unsigned long long>(static_cast<std::size_t>(k) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; i++)
    for (int j = 1; j <= std::min(i, k); j++)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          static_cast<unsigned long long>(j) *
              s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline unsigned long long binomial_table(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<unsigned long long> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; i++)
    for (int j = std::min(i, k); j >= 1; j--)
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

// Blocks common to two partitions, counted by a double loop.
inline int shared_count(const Partition& a, const Partition& b) {
  int c = 0;
  for (Mask x : a.blocks())
    for (Mask y : b.blocks())
      if (x == y) c++;
  return c;
}

// Blocks common to one choice of members, one per family.
inline std::vector<Mask> tuple_common_blocks(const std::vector<const Partition*>& choice) {
  std::vector<Mask> common;
  if (choice.empty()) return common;
  for (Mask b : choice[0]->blocks()) {
    bool everywhere = true;
    for (std::size_t i = 1; i < choice.size() && everywhere; i++)
      everywhere = choice[i]->contains_block(b);
    if (everywhere) common.push_back(b);
  }
  return common;
}

// Minimum, over every choice of one member per family, of the number of
// blocks common to the whole choice.  Exhaustive product loop.
inline int min_shared_over_choices(const std::vector<const Family*>& families) {
  for (const Family* f : families)
    if (f->empty()) return 0;
  std::vector<std::size_t> idx(families.size(), 0);
  int best = -1;
  while (true) {
    std::vector<const Partition*> choice;
    for (std::size_t i = 0; i < families.size(); i++)
      choice.push_back(&families[i]->members()[idx[i]]);
    int c = static_cast<int>(tuple_common_blocks(choice).size());
    if (best < 0 || c < best) best = c;
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < families[pos]->size()) break;
      idx[pos] = 0;
      pos++;
    }
    if (pos == idx.size()) break;
  }
  return best;
}

inline bool cross_intersecting(const std::vector<const Family*>& families, int t) {
  for (const Family* f : families)
    if (f->empty()) return true;  // vacuous: no full choice exists
  return min_shared_over_choices(families) >= t;
}

// Dual by definition: all l-partitions of [n] sharing at least t blocks with
// every member.
inline Family dual(const Family& f, int l, int t) {
  std::vector<Partition> hits;
  for (const Partition& q : all_partitions(f.ground_n(), l)) {
    bool ok = true;
    for (const Partition& p : f.members())
      if (shared_count(p, q) < t) {
        ok = false;
        break;
      }
    if (ok) hits.push_back(q);
  }
  return Family(f.ground_n(), l, std::move(hits));
}

// Covering number by exhaustive subsets of the block pool.  A t-cover is a
// set of pairwise-disjoint blocks, at least t of which appear in every
// member; a minimum cover only ever needs blocks drawn from the members.
inline std::vector<Mask> block_pool(const Family& f) {
  std::vector<Mask> pool;
  for (const Partition& p : f.members())
    for (Mask b : p.blocks())
      if (std::find(pool.begin(), pool.end(), b) == pool.end()) pool.push_back(b);
  return pool;
}

inline bool covers(const std::vector<Mask>& blocks, const Family& f, int t) {
  for (const Partition& p : f.members()) {
    int c = 0;
    for (Mask b : blocks)
      if (p.contains_block(b)) c++;
    if (c < t) return false;
  }
  return true;
}

inline bool pairwise_disjoint(const std::vector<Mask>& blocks) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (seen & b) return false;
    seen |= b;
  }
  return true;
}

// Smallest t-cover size, or -1 when none exists over the pool (then none
// exists at all).
inline int tau(const Family& f, int t) {
  std::vector<Mask> pool = block_pool(f);
  int m = static_cast<int>(pool.size());
  if (m > 24) throw std::invalid_argument("oracle tau: block pool too large");
  int best = -1;
  for (std::uint32_t sub = 0; sub < (1u << m); sub++) {
    int bits = __builtin_popcount(sub);
    if (bits < t) continue;
    if (best >= 0 && bits >= best) continue;
    std::vector<Mask> blocks;
    for (int i = 0; i < m; i++)
      if (sub & (1u << i)) blocks.push_back(pool[static_cast<std::size_t>(i)]);
    if (!pairwise_disjoint(blocks)) continue;
    if (covers(blocks, f, t)) best = bits;
  }
  return best;
}

// Size of {k-partitions of [n] sharing >= t blocks with g} by inclusion-
// exclusion over which j blocks of g are forced:
//   sum_{j=t}^{|g|} (-1)^(j-t) C(j-1, t-1) sum_{|X|=j} S(n - |union X|, k - j)
inline BigCount w_size_formula(const Partition& g, int n, int k, int t) {
  int s = g.size();
  long long total = 0;
  for (int j = t; j <= std::min(s, k); j++) {
    long long inner = 0;
    // all j-subsets X of g's blocks
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int i = 0; i < j; i++) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      int covered = 0;
      for (int i = 0; i < j; i++)
        covered += crosspart::popcount(g.blocks()[static_cast<std::size_t>(
            idx[static_cast<std::size_t>(i)])]);
      inner += static_cast<long long>(stirling_table(n - covered, k - j));
      int pos = j - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == s - j + pos) pos--;
      if (pos < 0) break;
      idx[static_cast<std::size_t>(pos)]++;
      for (int i = pos + 1; i < j; i++)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    long long term = static_cast<long long>(binomial_table(j - 1, t - 1)) * inner;
    total += ((j - t) % 2 == 0) ? term : -term;
  }
  if (total < 0) throw std::logic_error("w_size_formula: negative alternating sum");
  return BigCount(static_cast<unsigned long>(total));
}

// Small deterministic generator for oracle-vs-library randomized checks
// (64-bit xorshift*, fixed multiplier).
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545f4914f6cdd1dull;
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace oracles
