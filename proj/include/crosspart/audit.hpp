#pragma once

// Finite-grid certification of every inequality the library's bounds rest
// on.  Integer/rational inequalities are decided exactly over BigCount after
// clearing denominators; inequalities involving log2, ln, or e are decided by
// certified outward-rounded interval arithmetic with automatic precision
// doubling — a verdict is a proof at that grid point, never a float opinion.

#include <cstdint>
#include <string>
#include <vector>

#include "crosspart/bigint.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"

namespace crosspart {

// Fixed catalog of audited inequalities.  Names are stable CLI identifiers.
enum class LemmaId {
  LogConcavity,      // (k-1)*S(n,k)^2 >= k*S(n,k+1)*S(n,k-1)
  SpnLowerBounds,    // two lower bounds on S against S(m-1,r-1), powers cleared
  SpnGapI,           // S(n-t-s,k-t-s) > (t+1)(j-t+1)*S(n-t-s-1,k-t-s-1)
  SpnGapII,          // same with the squared factor and the doubled threshold
  GrowthEq4,         // S(n,k) > k*S(n-1,k)
  RLowerBound,       // r(n,k,l,t) above the cleared rational multiple
  StirlingEstimate,  // r^m/r! bounds on S(m,r), plus the quarter-power bound
  QMonotone,         // Q(s,t) increasing in s, and Q >= 18
  MonoDoublePrime,   // C(u,t)S(n-u,k-u) > C(k,t)(l-t+1)^(k-u)(k-u)
  MonoI,             // the two m-indexed sequences strictly decrease
  MonoII,            // g(m) <= f(u) with equality only at m=u
  MonoIII,           // g(m) <= S(n-t,k-t) with equality only at m=t
  MonoPrime,         // binomial-weighted comparison at u <= t-1, i in {0,1}
  WBoundI,           // |W(G)| capped for full (t+2)-block partitions G
  WBoundII,          // |W(G)| <= 6*h(s,k,t,n) for any s-block partition G
  R2Swap,            // r2(n,k,l,t) > r2(n,l,k,t) for n > k > l
  R1VsR2I,           // l >= 2t+2 makes r1 the larger
  R1VsR2II,          // l <= 2t+1 makes r2 the larger, two pairs excluded
  R1Swap,            // r1(n,k,l,t) > r1(n,l,k,t)
  PhiMono,           // phi(m,a) <= phi(t+1,r), equality iff m=t+1 and k_a=k_r
  Case21,            // C(m,t)*h(t+1,k,t,n) > (m-t)(m-t+1)*g(m,k,l,t,n)
  Case22,            // the r=4 product comparison against phi(t+1,r)
  Ublkt,             // 5 - k + 2k*log2(k) > L(k,t)
};

const char* lemma_name(LemmaId id);                // e.g. "log-concavity"
LemmaId lemma_from_name(const std::string& name);  // throws std::invalid_argument
const std::vector<LemmaId>& all_lemmas();

enum class PointVerdict { Pass, Fail, Inconclusive, SkippedHypothesis, SkippedBudget };

// Label as printed in reports: pass, fail, inconclusive, skipped(hypothesis),
// skipped(budget).
const char* verdict_label(PointVerdict v);

struct GridPoint {
  std::string params;  // "t=1 k=4 n=14 ..." — one key=value token per parameter
  PointVerdict verdict = PointVerdict::Pass;
  std::string lhs;  // exact decimal or certified interval; empty when untouched
  std::string rhs;
};

struct AuditOptions {
  int t_max = 3;
  int k_max = 8;    // also bounds l, j, and tuple entries
  int n_extra = 10; // n runs from each hypothesis threshold to threshold + n_extra
  std::uint64_t enum_budget = 12'000'000;  // cap for enumeration-backed checks
  bool keep_passes = false;  // record a GridPoint for passes too (CLI per-point output)
};

struct AuditReport {
  LemmaId lemma = LemmaId::LogConcavity;
  std::string grid;  // human-readable description of the ranges audited
  bool polynomial = false;  // exact checker: inconclusive verdicts are a defect
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t skipped_hypothesis = 0;
  std::uint64_t skipped_budget = 0;
  // Fails, inconclusives, and skips are always recorded; passes only under
  // AuditOptions::keep_passes.
  std::vector<GridPoint> points;

  std::uint64_t total() const {
    return pass + fail + inconclusive + skipped_hypothesis + skipped_budget;
  }
  bool ok() const { return fail == 0 && (!polynomial || inconclusive == 0); }
};

AuditReport audit(LemmaId lemma, const AuditOptions& opts = {});
std::vector<AuditReport> audit_all(const AuditOptions& opts = {});

// W(G) = {F in S([n],k) : F and G share at least t blocks}, by enumeration.
// |W(G)| depends only on the block-size multiset of G.
Family family_W(const Partition& G, int k, int t, int n, std::uint64_t budget = 0);

// Sign of r1 - r2 at k1 = k2 = 2t+1, checked against the two sufficient
// conditions (certified ln t intervals); outside the hypothesis the exact
// values are still reported with in_scope = false.
struct RegimeReport {
  int n = 0, k = 0, t = 0;
  bool in_scope = false;  // k == 2t+1 and t >= 2
  BigCount r1, r2;
  int sign = 0;                  // sign of r1 - r2
  std::string expectation;       // "r1-larger", "r2-larger", "neutral", "out-of-scope"
  bool consistent = true;        // sign matches the expectation (neutral: vacuous)
  std::string note;              // which condition fired, or why out of scope
};

RegimeReport compare_regimes(int n, int k, int t);

}  // namespace crosspart
