#pragma once
// Lexicographic (restricted-growth) enumeration of the k-partitions of [n].
//
// Enumeration can be huge, so every entry point that materializes or walks a
// universe first compares its exact cardinality S(n,k) against a budget and
// refuses (BudgetError, carrying the exact count) instead of starting a
// hopeless walk.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosspart/bigint.hpp"
#include "crosspart/partition.hpp"

namespace crosspart {

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string what, BigCount exact_count, std::uint64_t budget)
      : std::runtime_error(std::move(what)), exact_count_(std::move(exact_count)), budget_(budget) {}
  const BigCount& exact_count() const { return exact_count_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigCount exact_count_;
  std::uint64_t budget_;
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Budget resolution: explicit argument wins; otherwise CROSSPART_BUDGET from
// the environment; otherwise kDefaultBudget.
std::uint64_t resolved_budget(std::uint64_t explicit_budget = 0);

// Throws BudgetError when S(n,k) > budget; returns the exact count otherwise.
BigCount check_enumeration_budget(int n, int k, std::uint64_t budget, const char* what);

// Visits blocks-of-the-current-partition (size k, sorted by minimum element)
// for every k-partition of [n], in RGS-lex order.  Return false from the
// callback to stop early.  Preconditions: 1 <= k <= n <= 64.
// No budget check here — this is the raw walker; callers go through
// enumerate_partitions/universe or check the budget themselves.
void for_each_partition(int n, int k, const std::function<bool(const std::vector<Mask>&)>& visit);

// Materialized universe S([n],k) in canonical order, budget-checked.
std::vector<Partition> enumerate_partitions(int n, int k, std::uint64_t budget = 0);

}  // namespace crosspart
