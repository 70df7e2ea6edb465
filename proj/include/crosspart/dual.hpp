#pragma once
// Dual / closure structure of cross t-intersecting pairs.
//
// For families F of k-partitions and G of l-partitions of [n], the dual of F
// on the l side is {G : |shared_blocks(G,F)| >= t for every F in F}.  A pair
// is maximal exactly when each side is the dual of the other, and
// closure = dual(dual(.)) is a closure operator on either side; maximal pairs
// correspond one-to-one to closed sets.  dual(empty) is the full universe by
// convention, so the degenerate (full, empty) pair exists but its product 0
// never wins a maximization.
//
// The engine materializes both universes and the intersection relation as bit
// rows in both directions, making a dual evaluation an AND of rows.  The
// exhaustive stream is Ganter-style lectic ("next-closure") enumeration over
// the l universe; the seeded search closes generator sets drawn from a
// deterministic schedule (all singletons, all pairs when cheap enough, then
// counter-based random draws).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crosspart/bigint.hpp"
#include "crosspart/family.hpp"

namespace crosspart {

// ---- bit vectors over an enumerated universe ------------------------------
// Invariant: bits at positions >= the universe size are zero.
using BitVec = std::vector<std::uint64_t>;

BitVec bitvec_make(std::size_t bits);
inline bool bitvec_get(const BitVec& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void bitvec_set(BitVec& v, std::size_t i) { v[i >> 6] |= std::uint64_t(1) << (i & 63); }
inline void bitvec_clear(BitVec& v, std::size_t i) {
  v[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
}
std::uint64_t bitvec_popcount(const BitVec& v);
// Lectic order: the first index (lowest) where the two differ decides, and the
// set missing that index is the smaller.  (Next-closure emits closed sets in
// increasing lectic order.)
bool bitvec_lectic_less(const BitVec& a, const BitVec& b);
std::vector<std::uint32_t> bitvec_indices(const BitVec& v);

struct DualContext {
  int n = 0;
  int k = 0;  // block count of the F side
  int l = 0;  // block count of the G side
  int t = 1;
  std::uint64_t budget = 0;  // 0 -> resolved_budget()
};

// One-shot dual without building an engine: enumerates S([n],target_l) under
// the budget and filters.  dual of the empty family = the full universe.
Family dual_family(const Family& fam, int target_l, int t, std::uint64_t budget = 0);

class DualEngine {
 public:
  // Enumerates both universes (each budget-checked) and builds the relation
  // bit-matrix in both directions.  Refuses (BudgetError) when the relation
  // size |S(n,k)|*|S(n,l)| exceeds kMaxRelationCells.  Thread count only
  // affects build speed, never the result.
  explicit DualEngine(const DualContext& ctx, int threads = 1);

  static constexpr std::uint64_t kMaxRelationCells = 2'000'000'000;

  const DualContext& context() const { return ctx_; }
  std::size_t size_k() const { return uk_.size(); }
  std::size_t size_l() const { return ul_.size(); }
  const std::vector<Partition>& universe_k() const { return uk_; }
  const std::vector<Partition>& universe_l() const { return ul_; }

  BitVec empty_k() const;
  BitVec empty_l() const;
  BitVec full_k() const;
  BitVec full_l() const;

  // dual over the opposite universe; AND of the relation rows of the input's
  // members (empty input -> full opposite universe).
  BitVec dual_of_l(const BitVec& g) const;  // G-side set -> F-side dual
  BitVec dual_of_k(const BitVec& f) const;  // F-side set -> G-side dual
  BitVec closure_l(const BitVec& g) const { return dual_of_k(dual_of_l(g)); }

  Family family_k(const BitVec& f) const;
  Family family_l(const BitVec& g) const;

  // Number of blocks common to every member of both sides (early exit at
  // zero).  Pre: at least one side nonempty.
  int common_block_count(const BitVec& f, const BitVec& g) const;

 private:
  DualContext ctx_;
  std::vector<Partition> uk_, ul_;
  std::size_t wk_ = 0, wl_ = 0;             // words per row over each universe
  std::vector<std::uint64_t> relk_;         // size_k rows of wl_ words
  std::vector<std::uint64_t> rell_;         // size_l rows of wk_ words
  const std::uint64_t* row_k(std::size_t i) const { return relk_.data() + i * wl_; }
  const std::uint64_t* row_l(std::size_t j) const { return rell_.data() + j * wk_; }
};

bool is_maximal_pair(const DualEngine& eng, const BitVec& f, const BitVec& g);

// ---- exhaustive stream ----------------------------------------------------

struct PairEnumStats {
  bool complete = false;  // false: closure budget hit or consumer stopped
  std::uint64_t closed_count = 0;
  std::uint64_t closure_evaluations = 0;
};

// Emits every maximal pair (F = dual(G), G closed) exactly once, G in lectic
// order.  Return false from emit to stop.  max_closures caps closure
// evaluations (0 -> max(1000, resolved_budget())); hitting the cap aborts
// cleanly with complete=false — the emitted prefix is still a certificate for
// everything lectically below the stop point.
PairEnumStats enumerate_maximal_pairs(const DualEngine& eng,
                                      const std::function<bool(const BitVec&, const BitVec&)>& emit,
                                      std::uint64_t max_closures = 0);

// ---- search ---------------------------------------------------------------

enum class SearchMode { Exhaustive, Seeded };

struct SearchResult {
  BigCount best_product;                // 0 when nothing admissible was found
  std::vector<Family> witnesses;        // {F side, G side} of the best pair
  SearchMode mode = SearchMode::Seeded;
  bool nontrivial_constraint = false;
  bool exhaustive = false;  // honesty flag: true only for a completed closure stream
  std::string certificate;  // exhaustive: closed-set counts; seeded: the seed schedule
  std::uint64_t evaluations = 0;
};

// Full closure enumeration; best product over maximal pairs with nonzero
// product (and, when nontrivial is set, fewer than t common blocks).  Ties
// resolve toward the lectic-least closed G side.
SearchResult exhaustive_pair_search(const DualEngine& eng, bool nontrivial,
                                    std::uint64_t max_closures = 0);

struct SeededSearchOptions {
  int generator_size_max = 2;
  std::uint64_t random_draws = 10000;
  std::uint64_t seed = 1;
  bool nontrivial = false;
  int threads = 1;
  // The all-pairs stage runs only when C(|universe_l|, 2) fits this cap.
  std::uint64_t pair_stage_limit = 2'000'000;
  std::string checkpoint_path;  // empty -> no checkpoint file
};

// Deterministic given (options.seed, schedule): closes every generator set of
// the schedule (singleton sets, pair sets when cheap, random draws of up to
// generator_size_max members) into its maximal pair and keeps the best
// product.  Identical results for any thread count.
SearchResult seeded_search(const DualEngine& eng, const SeededSearchOptions& options);

}  // namespace crosspart
