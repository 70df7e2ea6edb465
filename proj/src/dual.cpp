#include "crosspart/dual.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "crosspart/enumerate.hpp"
#include "crosspart/rng.hpp"
#include "crosspart/stirling.hpp"
#include "crosspart/version.hpp"
#include "crosspart/workpool.hpp"

namespace crosspart {

// ---- bit vectors ----------------------------------------------------------

BitVec bitvec_make(std::size_t bits) { return BitVec((bits + 63) / 64, 0); }

std::uint64_t bitvec_popcount(const BitVec& v) {
  std::uint64_t total = 0;
  for (std::uint64_t w : v) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return total;
}

bool bitvec_lectic_less(const BitVec& a, const BitVec& b) {
  std::size_t words = std::min(a.size(), b.size());
  for (std::size_t w = 0; w < words; w++) {
    std::uint64_t diff = a[w] ^ b[w];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a[w] & low) == 0;
    }
  }
  // Tail words beyond the common length (nonstandard lengths): first extra
  // set bit decides the same way.
  if (a.size() != b.size()) {
    const BitVec& longer = a.size() > b.size() ? a : b;
    for (std::size_t w = words; w < longer.size(); w++)
      if (longer[w]) return &longer == &b;
  }
  return false;
}

std::vector<std::uint32_t> bitvec_indices(const BitVec& v) {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < v.size(); w++) {
    std::uint64_t bits = v[w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

namespace {

void validate_context(const DualContext& ctx) {
  if (ctx.n < 1 || ctx.n > kMaxGround)
    throw std::invalid_argument("dual context: need 1 <= n <= 64");
  if (ctx.k < 1 || ctx.k > ctx.n || ctx.l < 1 || ctx.l > ctx.n)
    throw std::invalid_argument("dual context: need 1 <= k, l <= n");
  if (ctx.t < 1 || ctx.t > ctx.n) throw std::invalid_argument("dual context: need 1 <= t <= n");
}

void all_ones(BitVec& v, std::size_t bits) {
  std::fill(v.begin(), v.end(), ~std::uint64_t(0));
  if (bits % 64) v.back() = (~std::uint64_t(0)) >> (64 - bits % 64);
  if (bits == 0) std::fill(v.begin(), v.end(), 0);
}

}  // namespace

// ---- one-shot dual --------------------------------------------------------

Family dual_family(const Family& fam, int target_l, int t, std::uint64_t budget) {
  int n = fam.ground_n();
  check_enumeration_budget(n, target_l, resolved_budget(budget), "dual");
  Family out(n, target_l);
  for_each_partition(n, target_l, [&](const std::vector<Mask>& blocks) {
    Partition g = Partition::from_blocks(blocks);
    for (const Partition& f : fam.members())
      if (g.shared_count(f) < t) return true;
    out.add(g);
    return true;
  });
  return out;
}

// ---- engine ---------------------------------------------------------------

DualEngine::DualEngine(const DualContext& ctx, int threads) : ctx_(ctx) {
  validate_context(ctx_);
  ctx_.budget = resolved_budget(ctx_.budget);
  BigCount count_k = check_enumeration_budget(ctx_.n, ctx_.k, ctx_.budget, "dual engine (k side)");
  BigCount count_l = check_enumeration_budget(ctx_.n, ctx_.l, ctx_.budget, "dual engine (l side)");
  BigCount cells = count_k * count_l;
  if (cells > BigCount(std::uint64_t(kMaxRelationCells)))
    throw BudgetError("dual engine relation exceeds the cell cap", cells, kMaxRelationCells);

  uk_ = enumerate_partitions(ctx_.n, ctx_.k, ctx_.budget);
  ul_ = (ctx_.k == ctx_.l) ? uk_ : enumerate_partitions(ctx_.n, ctx_.l, ctx_.budget);
  wk_ = (uk_.size() + 63) / 64;
  wl_ = (ul_.size() + 63) / 64;
  relk_.assign(uk_.size() * wl_, 0);
  rell_.assign(ul_.size() * wk_, 0);

  // Chunks over i are multiples of 64 wide, so the column writes into rell_
  // touch chunk-disjoint words: safe to run in parallel.
  static_assert(kChunkSize % 64 == 0);
  parallel_for(uk_.size(), threads, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; i++) {
      std::uint64_t* rk = relk_.data() + i * wl_;
      for (std::size_t j = 0; j < ul_.size(); j++) {
        if (uk_[i].shared_count(ul_[j]) >= ctx_.t) {
          rk[j >> 6] |= std::uint64_t(1) << (j & 63);
          rell_[j * wk_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
        }
      }
    }
  });
}

BitVec DualEngine::empty_k() const { return bitvec_make(uk_.size()); }
BitVec DualEngine::empty_l() const { return bitvec_make(ul_.size()); }

BitVec DualEngine::full_k() const {
  BitVec v = bitvec_make(uk_.size());
  all_ones(v, uk_.size());
  return v;
}

BitVec DualEngine::full_l() const {
  BitVec v = bitvec_make(ul_.size());
  all_ones(v, ul_.size());
  return v;
}

BitVec DualEngine::dual_of_l(const BitVec& g) const {
  BitVec acc = full_k();
  bool any = false;
  for (std::size_t w = 0; w < g.size(); w++) {
    std::uint64_t bits = g[w];
    while (bits) {
      std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const std::uint64_t* row = row_l(j);
      std::uint64_t live = 0;
      for (std::size_t x = 0; x < wk_; x++) live |= (acc[x] &= row[x]);
      any = true;
      if (!live) return acc;
    }
  }
  (void)any;
  return acc;  // empty input: full universe
}

BitVec DualEngine::dual_of_k(const BitVec& f) const {
  BitVec acc = full_l();
  for (std::size_t w = 0; w < f.size(); w++) {
    std::uint64_t bits = f[w];
    while (bits) {
      std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const std::uint64_t* row = row_k(i);
      std::uint64_t live = 0;
      for (std::size_t x = 0; x < wl_; x++) live |= (acc[x] &= row[x]);
      if (!live) return acc;
    }
  }
  return acc;
}

Family DualEngine::family_k(const BitVec& f) const {
  Family out(ctx_.n, ctx_.k);
  for (std::uint32_t i : bitvec_indices(f)) out.add(uk_[i]);
  return out;
}

Family DualEngine::family_l(const BitVec& g) const {
  Family out(ctx_.n, ctx_.l);
  for (std::uint32_t j : bitvec_indices(g)) out.add(ul_[j]);
  return out;
}

int DualEngine::common_block_count(const BitVec& f, const BitVec& g) const {
  std::vector<Mask> common;
  bool started = false;
  auto fold = [&](const Partition& p) {
    if (!started) {
      common = p.blocks();
      started = true;
      return true;
    }
    std::size_t keep = 0;
    for (Mask b : common)
      if (p.contains_block(b)) common[keep++] = b;
    common.resize(keep);
    return !common.empty();
  };
  for (std::uint32_t i : bitvec_indices(f))
    if (!fold(uk_[i])) return 0;
  for (std::uint32_t j : bitvec_indices(g))
    if (!fold(ul_[j])) return 0;
  if (!started) throw std::logic_error("common_block_count: both sides empty");
  return static_cast<int>(common.size());
}

bool is_maximal_pair(const DualEngine& eng, const BitVec& f, const BitVec& g) {
  return eng.dual_of_l(g) == f && eng.dual_of_k(f) == g;
}

// ---- exhaustive stream ----------------------------------------------------

namespace {

std::uint64_t default_closure_cap(std::uint64_t max_closures) {
  if (max_closures) return max_closures;
  // A closure evaluation costs about as much as visiting a handful of
  // partitions, so the enumeration budget is the right scale for the cap.
  std::uint64_t derived = resolved_budget(0);
  return derived < 1000 ? 1000 : derived;
}

// Does B agree with A strictly below index i?
bool agrees_below(const BitVec& b, const BitVec& a, std::size_t i) {
  std::size_t word = i >> 6;
  for (std::size_t w = 0; w < word; w++)
    if (b[w] != a[w]) return false;
  std::uint64_t mask = (std::uint64_t(1) << (i & 63)) - 1;
  return ((b[word] ^ a[word]) & mask) == 0;
}

}  // namespace

PairEnumStats enumerate_maximal_pairs(const DualEngine& eng,
                                      const std::function<bool(const BitVec&, const BitVec&)>& emit,
                                      std::uint64_t max_closures) {
  std::uint64_t cap = default_closure_cap(max_closures);
  PairEnumStats stats;
  std::size_t size_l = eng.size_l();

  auto close = [&](const BitVec& g, BitVec& f_out) {
    f_out = eng.dual_of_l(g);
    return eng.dual_of_k(f_out);
  };

  BitVec f;
  stats.closure_evaluations++;
  BitVec a = close(eng.empty_l(), f);
  stats.closed_count++;
  if (!emit(f, a)) return stats;

  for (;;) {
    bool advanced = false;
    for (std::size_t idx = size_l; idx-- > 0;) {
      if (bitvec_get(a, idx)) {
        bitvec_clear(a, idx);
        continue;
      }
      if (stats.closure_evaluations >= cap) return stats;  // complete stays false
      BitVec candidate = a;
      bitvec_set(candidate, idx);
      stats.closure_evaluations++;
      BitVec b = close(candidate, f);
      if (agrees_below(b, a, idx)) {
        a = std::move(b);
        stats.closed_count++;
        if (!emit(f, a)) return stats;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  stats.complete = true;
  return stats;
}

// ---- search ---------------------------------------------------------------

namespace {

struct Candidate {
  bool has = false;
  std::uint64_t product = 0;
  BitVec f, g;
};

// Deterministic preference: larger product, then lectic-least G side.  Equal
// G means equal pair (F is determined by G).
bool better(const Candidate& a, const Candidate& b) {
  if (!a.has || !b.has) return a.has;
  if (a.product != b.product) return a.product > b.product;
  return bitvec_lectic_less(a.g, b.g);
}

}  // namespace

SearchResult exhaustive_pair_search(const DualEngine& eng, bool nontrivial,
                                    std::uint64_t max_closures) {
  Candidate best;
  int t = eng.context().t;
  PairEnumStats stats = enumerate_maximal_pairs(
      eng,
      [&](const BitVec& f, const BitVec& g) {
        std::uint64_t fe = bitvec_popcount(f), ge = bitvec_popcount(g);
        if (fe == 0 || ge == 0) return true;  // product 0, never optimal
        if (nontrivial && eng.common_block_count(f, g) >= t) return true;
        Candidate cand{true, fe * ge, f, g};
        if (better(cand, best)) best = std::move(cand);
        return true;
      },
      max_closures);

  SearchResult result;
  result.mode = SearchMode::Exhaustive;
  result.nontrivial_constraint = nontrivial;
  result.exhaustive = stats.complete;
  result.evaluations = stats.closure_evaluations;
  std::ostringstream cert;
  cert << "closed sets visited: " << stats.closed_count
       << "; closure evaluations: " << stats.closure_evaluations
       << "; status: " << (stats.complete ? "complete" : "budget-truncated");
  result.certificate = cert.str();
  if (best.has) {
    result.best_product = BigCount(best.product);
    result.witnesses.push_back(eng.family_k(best.f));
    result.witnesses.push_back(eng.family_l(best.g));
  }
  return result;
}

namespace {

struct Stage {
  std::string name;
  std::uint64_t positions = 0;  // 0: stage skipped
  std::string note;
};

void write_checkpoint(const std::string& path, const DualEngine& eng,
                      const SeededSearchOptions& options, const std::string& stage,
                      std::uint64_t position, std::uint64_t evaluated, const Candidate& best) {
  if (path.empty()) return;
  nlohmann::json doc;
  doc["format"] = "crosspart-checkpoint";
  doc["version"] = kVersion;
  const DualContext& ctx = eng.context();
  doc["n"] = ctx.n;
  doc["k"] = ctx.k;
  doc["l"] = ctx.l;
  doc["t"] = ctx.t;
  doc["seed"] = options.seed;
  doc["gen_max"] = options.generator_size_max;
  doc["nontrivial"] = options.nontrivial;
  doc["stage"] = stage;
  doc["position"] = position;
  doc["evaluated"] = evaluated;
  doc["best_product"] = best.has ? BigCount(best.product).str() : "0";
  nlohmann::json wf = nlohmann::json::array(), wg = nlohmann::json::array();
  if (best.has) {
    for (std::uint32_t i : bitvec_indices(best.f)) wf.push_back(eng.universe_k()[i].str());
    for (std::uint32_t j : bitvec_indices(best.g)) wg.push_back(eng.universe_l()[j].str());
  }
  doc["witness_f"] = std::move(wf);
  doc["witness_g"] = std::move(wg);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write checkpoint file: " + path);
  out << doc.dump() << "\n";
}

}  // namespace

SearchResult seeded_search(const DualEngine& eng, const SeededSearchOptions& options) {
  if (options.generator_size_max < 1)
    throw std::invalid_argument("seeded search: generator_size_max must be >= 1");
  const std::size_t size_l = eng.size_l();
  const int t = eng.context().t;

  // Closes one generator set into its maximal pair and scores it.
  auto evaluate = [&](const std::uint32_t* gen, int count, Candidate& best_local) {
    BitVec g0 = bitvec_make(size_l);
    for (int d = 0; d < count; d++) bitvec_set(g0, gen[d]);
    BitVec f = eng.dual_of_l(g0);
    std::uint64_t fe = bitvec_popcount(f);
    if (fe == 0) return;  // pair (empty, full universe): product 0
    BitVec g = eng.dual_of_k(f);
    std::uint64_t ge = bitvec_popcount(g);
    if (ge == 0) return;
    if (options.nontrivial && eng.common_block_count(f, g) >= t) return;
    Candidate cand{true, fe * ge, std::move(f), std::move(g)};
    if (better(cand, best_local)) best_local = std::move(cand);
  };

  Candidate best;
  std::uint64_t evaluated = 0;
  std::vector<Stage> stages;

  auto run_stage = [&](const std::string& name, std::uint64_t positions,
                       const std::function<void(std::uint64_t, Candidate&)>& item) {
    std::uint64_t chunk_count = (positions + kChunkSize - 1) / kChunkSize;
    std::vector<Candidate> slots = run_chunks<Candidate>(chunk_count, options.threads,
                                                         [&](std::uint64_t c) {
                                                           Candidate local;
                                                           std::uint64_t lo = c * kChunkSize;
                                                           std::uint64_t hi = lo + kChunkSize;
                                                           if (hi > positions) hi = positions;
                                                           for (std::uint64_t p = lo; p < hi; p++)
                                                             item(p, local);
                                                           return local;
                                                         });
    for (Candidate& slot : slots)
      if (better(slot, best)) best = std::move(slot);
    evaluated += positions;
    write_checkpoint(options.checkpoint_path, eng, options, name, positions, evaluated, best);
  };

  // Stage 1: every single l-partition as a generator.
  run_stage("singletons", size_l, [&](std::uint64_t p, Candidate& local) {
    std::uint32_t gen[1] = {static_cast<std::uint32_t>(p)};
    evaluate(gen, 1, local);
  });
  stages.push_back({"singletons", size_l, ""});

  // Stage 2: every generator pair, only when the pair count fits the cap.
  if (options.generator_size_max >= 2) {
    std::uint64_t pairs = size_l * (size_l - 1) / 2;
    if (pairs <= options.pair_stage_limit) {
      run_stage("pairs", pairs, [&](std::uint64_t p, Candidate& local) {
        // Unrank p into 0 <= j1 < j2 < size_l (row-major over j1).
        std::uint64_t j1 = 0, remaining = p;
        std::uint64_t row = size_l - 1;
        while (remaining >= row) {
          remaining -= row;
          j1++;
          row--;
        }
        std::uint64_t j2 = j1 + 1 + remaining;
        std::uint32_t gen[2] = {static_cast<std::uint32_t>(j1), static_cast<std::uint32_t>(j2)};
        evaluate(gen, 2, local);
      });
      stages.push_back({"pairs", pairs, ""});
    } else {
      std::ostringstream note;
      note << "skipped: " << pairs << " candidate pairs > limit " << options.pair_stage_limit;
      stages.push_back({"pairs", 0, note.str()});
      write_checkpoint(options.checkpoint_path, eng, options, "pairs-skipped", 0, evaluated, best);
    }
  }

  // Stage 3: counter-based random draws of generator_size_max members.
  int gen_max = options.generator_size_max;
  if (options.random_draws > 0) {
    run_stage("random", options.random_draws, [&](std::uint64_t p, Candidate& local) {
      std::uint32_t gen[64];
      int count = gen_max > 64 ? 64 : gen_max;
      for (int d = 0; d < count; d++) {
        std::uint64_t word =
            counter_rng(options.seed, 1, p * static_cast<std::uint64_t>(count) + d);
        gen[d] = static_cast<std::uint32_t>(uniform_below(word, size_l));
      }
      evaluate(gen, count, local);
    });
    stages.push_back({"random", options.random_draws, ""});
  }

  SearchResult result;
  result.mode = SearchMode::Seeded;
  result.nontrivial_constraint = options.nontrivial;
  result.exhaustive = false;
  result.evaluations = evaluated;
  std::ostringstream cert;
  cert << "seed schedule:";
  for (std::size_t s = 0; s < stages.size(); s++) {
    cert << (s ? "; " : " ") << stages[s].name;
    if (!stages[s].note.empty())
      cert << " (" << stages[s].note << ")";
    else if (stages[s].name == "random")
      cert << " (seed " << options.seed << ", draws " << stages[s].positions << ", gen-max "
           << gen_max << ")";
    else
      cert << " (" << stages[s].positions << ")";
  }
  cert << "; non-exhaustive";
  result.certificate = cert.str();
  if (best.has) {
    result.best_product = BigCount(best.product);
    result.witnesses.push_back(eng.family_k(best.f));
    result.witnesses.push_back(eng.family_l(best.g));
  }
  return result;
}

}  // namespace crosspart
