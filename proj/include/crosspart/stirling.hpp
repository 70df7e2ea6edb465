#pragma once
// Stirling partition numbers S(n,k) and the exact integer threshold tests for
// the growth bound L(k,t) = (t+1) + (k-t+1)*log2((t+1)*(k-t+1)).
//
// Everything here is exact: S by the memoized recurrence (with the closed form
// as an independent cross-check), and every "n >= (affine expression in L)"
// hypothesis decided by clearing the base-2 logarithm into an integer power
// comparison.  Floating point appears only in display helpers, never in a
// verdict.

#include <cstdint>
#include <string>
#include <utility>

#include "crosspart/bigint.hpp"

namespace crosspart {

// Total on all integer inputs: S(0,0)=1; zero when n<0, k<=0 (with n>=1),
// or k>n.  Memoized; safe for concurrent readers.
BigCount stirling(long n, long k);

// Inclusion–exclusion closed form (1/k!)*sum_j (-1)^j C(k,j) (k-j)^n.
// Pre: n >= k >= 1.  Throws std::logic_error if the division is not exact
// (internal consistency failure).
BigCount stirling_closed_form(long n, long k);

// ---- exact threshold tests ----------------------------------------------

// Decides n >= mul*L(k,t) + add exactly, where L(k,t) = (t+1) +
// (k-t+1)*log2(A) with A = (t+1)*(k-t+1).  Clearing log2 gives
//   2^(n - add - mul*(t+1)) >= A^(mul*(k-t+1)),
// an integer comparison (a negative left exponent moves to the right side).
// Pre: t >= 1, k >= t+2, mul >= 1.
bool n_reaches_L_affine(long n, long k, long t, long mul, long add);

// n >= L(k,t)
bool threshold_L_holds(long n, long k, long t);
// least n with n >= L(k,t)
long min_n_for_L(long k, long t);
// n >= 2*L(k,t)
bool threshold_2L_holds(long n, long k, long t);
// least n with n >= 2*L(k,t)
long min_n_for_2L(long k, long t);

// Exact comparison L(k,s1) vs L(k,s2): returns <0, 0, >0.  Clears both logs:
// sign of (s1+1) + b1*log2(c1) - (s2+1) - b2*log2(c2) via
// 2^(s1-s2)*c1^b1 vs c2^b2.
int compare_L(long k, long s1, long s2);

// L0(k,t) = max{ L(k,s) : t+1 <= s <= k-2 }.  Pre: k >= t+3 (nonempty range).
struct L0Params {
  long s_star;      // maximizing s, ties resolved toward smaller s
  long min_n;       // least n with n >= L0(k,t)
};
L0Params L0_bound_params(long k, long t);
bool threshold_L0_holds(long n, long k, long t);

// Exact test of n >= 5 - k + 2k*log2(k)  via  2^(n+k-5) >= k^(2k).  Pre: k>=2.
bool threshold_growth_holds(long n, long k);
long min_n_for_growth(long k);

// Display-only approximation of L(k,t); never used in a verdict.
double L_approx(long k, long t);

// Human-readable rendering of the exact inequality deciding n >= L / n >= 2L,
// e.g. "2^(n-2) >= 6^3 = 216".
std::string threshold_L_inequality(long k, long t);
std::string threshold_2L_inequality(long k, long t);

}  // namespace crosspart
