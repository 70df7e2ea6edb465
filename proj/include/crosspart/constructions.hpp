#pragma once
// The extremal family constructions and their closed-form sizes.
//
// On ground set [n], with t >= 1:
//   A(k, X, M): full k-partitions containing every block of X and at least one
//               block of M \ X   (X a t-subset of the partition M)
//   B(l, X, M): full l-partitions containing X, plus, for each block b of X,
//               the member (M \ {b}) u {b u ([n] \ union(M))}  (needs
//               union(M) != [n]; |M| = l)
//   C(k, T):    full k-partitions containing the (t+1)-partition T
//   D(l, T):    full l-partitions sharing at least t blocks with T
//   HM1/HM2:    the two one-family extremal shapes (k-partitions, anchored at
//               singletons; HM2 shares >= t+1 blocks with the first t+2
//               singletons)
//   P28i/P28ii: the two maximal-pair shapes arising when one side has t+1
//               blocks; built as pairs (F side, G side)
//   W(G, t):    k-partitions sharing >= t blocks with a fixed partition G
//
// Default anchors: X = [[t]], M = [[l]], T = [[t+1]] (singleton prefixes).
// All sizes are exact; alternating sums are computed in signed arithmetic and
// must come out nonnegative (logic_error otherwise).

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "crosspart/bigint.hpp"
#include "crosspart/family.hpp"

namespace crosspart {

enum class ConstructionKind { A, B, C, D, HM1, HM2, P28i, P28ii, W };

const char* kind_name(ConstructionKind k);
std::optional<ConstructionKind> kind_from_name(const std::string& name);

struct ConstructionSpec {
  ConstructionKind kind;
  int n = 0;
  int k = 0;  // block count of the built family (for B this is its l)
  int l = 0;  // partner parameter; defaults A's anchor M to [[l]]
  int t = 0;
  // Anchors; empty Partition means "use the singleton default".
  Partition required;  // X (A, B) — blocks forced into every member
  Partition anchor;    // M (A, B), T (C, D), G (W), M (P28ii), G (P28i)

  static ConstructionSpec make(ConstructionKind kind, int n, int k, int l, int t);
};

// Resolves defaults and validates anchors; throws std::invalid_argument on
// inconsistent anchors (X not a subset of M, wrong sizes, union(M) = [n] for
// B, and so on).  Returns the spec with anchors filled in.
ConstructionSpec validate(ConstructionSpec spec);

// Membership test usable at any n <= 64 without enumerating.
std::function<bool(const Partition&)> membership_predicate(const ConstructionSpec& spec);

// Materializes the family (budget-checked enumeration + predicate, plus the
// explicitly appended members for B/HM1).
Family build_family(const ConstructionSpec& spec, std::uint64_t budget = 0);

// The P28 shapes are pairs; first = F side (k blocks), second = G side
// (t+1 blocks).
std::pair<Family, Family> build_p28_pair(const ConstructionSpec& spec, std::uint64_t budget = 0);

// ---- closed-form sizes ---------------------------------------------------
// |A(k,l,t)| = sum_{j=1}^{l-t} (-1)^(j-1) C(l-t,j) S(n-t-j, k-t-j)
BigCount size_A(long n, long k, long l, long t);
// |B(l,t)| = S(n-t, l-t) + t; general anchors: S(n - |union(X)|, l-t) + t
BigCount size_B(long n, long l, long t, long union_of_X = -1);
// |C(k,t)| = S(n-t-1, k-t-1)
BigCount size_C(long n, long k, long t);
// |D(l,t)| = (t+1) S(n-t, l-t) - t S(n-t-1, l-t-1) = h(t+1, l, t, n)
BigCount size_D(long n, long l, long t);
// |{F : X subset of F}| = S(n-u, k-|X|) for a partial partition X with
// |union(X)| = u < n.
BigCount size_containing(long n, long k, long blocks_of_X, long union_of_X);

// h(m,k,t,n) = #{k-partitions sharing >= t blocks with [[m]]}, exact
// inclusion–exclusion over the number of the first m singletons contained.
// Pre: 0 <= t <= m <= n.
BigCount size_h(long m, long k, long t, long n);

// phi(m, a) = h(m, k_a, t, n) * prod_{i != a} S(n-m, k_i - m); a is 1-based.
BigCount size_phi(long m, long a, const std::vector<long>& ks, long t, long n);

// f(m) = (l-t+1)^(m-t) C(m,t) S(n-m,k-m) for t <= m <= k-1;
// f(k) = (l-t+1)^(k-t) C(k,t).
BigCount bound_f(long m, long k, long l, long t, long n);
// g(m) = max(f(m), f(k))
BigCount bound_g(long m, long k, long l, long t, long n);

// r1 = |A|*|B|, r2 = |C|*|D|, r = max
BigCount size_r1(long n, long k, long l, long t);
BigCount size_r2(long n, long k, long l, long t);
BigCount size_r(long n, long k, long l, long t);

// Single-family extremal bounds: branch 1 (k >= 2t+3):
// sum_{j=1}^{k-t} (-1)^(j-1) C(k-t,j) S(n-t-j,k-t-j) + t;
// branch 2 (k <= 2t+2): (t+2) S(n-t-1,k-t-1) - (t+1) S(n-t-2,k-t-2).
BigCount hm_bound(long n, long k, long t, int branch);
// The branch the bound max picks for these parameters (1 or 2).
int hm_branch(long k, long t);

}  // namespace crosspart
