#pragma once
// Desk-scale verification of the headline extremal results.  Each scenario
// reports up to three tiers:
//   formula    — exact closed-form values, threshold tests, and regime
//                comparisons;
//   structural — the claimed optimal families are built and certified
//                (maximal via dual/tuple fixed points, cross-intersecting,
//                non-trivial where claimed, sizes matching the closed forms),
//                at the given n when enumerable, otherwise at a reduced n;
//   search     — exhaustive or sampled search finds nothing better, with an
//                honesty flag separating "exhaustive" from "no counterexample
//                found".
// Parameters outside every tier produce an explicit refusal, never a silent
// partial answer.

#include <cstdint>
#include <string>
#include <vector>

#include "crosspart/bigint.hpp"

namespace crosspart {

enum class TierStatus { Pass, Fail, Skipped };
const char* tier_status_label(TierStatus s);

struct TierResult {
  std::string name;  // "formula" | "structural" | "search"
  TierStatus status = TierStatus::Pass;
  bool exhaustive = false;  // search tier: true only for a completed enumeration
  std::vector<std::string> notes;
};

struct VerifyParams {
  int n = 0;
  int t = 1;
  std::vector<int> ks;  // non-increasing block counts; r = ks.size()
};

struct VerifyOptions {
  std::uint64_t budget = 0;  // 0 -> environment/default enumeration budget
  int threads = 1;
  int gen_max = 2;                   // seeded pair search: generator-set cap
  std::uint64_t random_draws = 2000;  // seeded pair search / sampled tuple sweeps
  std::uint64_t seed = 1;
  // Per-side universe cap for the structural and search tiers; the given n is
  // used when every universe fits, otherwise n is reduced to the largest
  // feasible value.
  std::uint64_t structural_universe_cap = 20000;
};

struct VerifyReport {
  std::string scenario;
  std::string params;  // echo: "n=10 t=1 ks=3,3"
  bool refused = false;
  std::string refusal;
  std::vector<TierResult> tiers;
  bool ok() const;  // not refused, no tier failed, at least one tier passed
};

// Scenario ids accepted by verify_scenario, in presentation order:
//   max-product           trivial tuples are optimal above the single-L threshold
//   nontrivial-pairs      the four extremal pair shapes above the doubled threshold
//   nontrivial-pair-bounds  branch bounds picking the winning pair shape
//   three-three           both sides 3 blocks, t=1: the pair with a partial anchor wins
//   nontrivial-tuples     r >= 3: the one remaining optimal structure
//   unit-side             one side has t+1 blocks (pair characterization)
//   unit-side-multi       r >= 3 with smallest side t+1 (tuple characterization)
const std::vector<std::string>& verify_scenarios();

VerifyReport verify_scenario(const std::string& scenario, const VerifyParams& params,
                             const VerifyOptions& options = {});

}  // namespace crosspart
