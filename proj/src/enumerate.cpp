#include "crosspart/enumerate.hpp"

#include <cstdlib>

#include "crosspart/stirling.hpp"

namespace crosspart {

std::uint64_t resolved_budget(std::uint64_t explicit_budget) {
  if (explicit_budget != 0) return explicit_budget;
  if (const char* env = std::getenv("CROSSPART_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

BigCount check_enumeration_budget(int n, int k, std::uint64_t budget, const char* what) {
  BigCount count = stirling(n, k);
  if (count > BigCount(static_cast<unsigned long>(budget))) {
    throw BudgetError(std::string(what) + ": universe size S(" + std::to_string(n) + "," +
                          std::to_string(k) + ") = " + count.str() + " exceeds budget " +
                          std::to_string(budget),
                      count, budget);
  }
  return count;
}

namespace {

struct Walker {
  int n, k;
  const std::function<bool(const std::vector<Mask>&)>* visit;
  std::vector<Mask> blocks;
  bool stopped = false;

  // Element e joins an existing block (ascending index) or opens a new one —
  // exactly RGS-lex order because a new block gets the largest index so far.
  void rec(int e, int m) {
    if (stopped) return;
    if (e > n) {
      if (!(*visit)(blocks)) stopped = true;
      return;
    }
    int remaining = n - e + 1;
    // Existing blocks are only allowed if the still-unopened blocks fit.
    if (k - m < remaining) {
      Mask em = element_mask(e);
      for (int j = 0; j < m && !stopped; j++) {
        blocks[static_cast<std::size_t>(j)] |= em;
        rec(e + 1, m);
        blocks[static_cast<std::size_t>(j)] &= ~em;
      }
    }
    if (m < k && !stopped) {
      blocks.push_back(element_mask(e));
      rec(e + 1, m + 1);
      blocks.pop_back();
    }
  }
};

}  // namespace

void for_each_partition(int n, int k,
                        const std::function<bool(const std::vector<Mask>&)>& visit) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("for_each_partition: need 1 <= n <= 64");
  if (k < 1 || k > n) throw std::invalid_argument("for_each_partition: need 1 <= k <= n");
  Walker w{n, k, &visit, {}, false};
  w.blocks.reserve(static_cast<std::size_t>(k));
  w.rec(1, 0);
}

std::vector<Partition> enumerate_partitions(int n, int k, std::uint64_t budget) {
  std::uint64_t b = resolved_budget(budget);
  BigCount count = check_enumeration_budget(n, k, b, "enumerate_partitions");
  std::vector<Partition> out;
  out.reserve(count.to_ulong());
  for_each_partition(n, k, [&](const std::vector<Mask>& blocks) {
    out.push_back(Partition::from_blocks(blocks));
    return true;
  });
  return out;
}

}  // namespace crosspart
