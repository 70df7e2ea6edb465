#include "crosspart/stirling.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace crosspart {

namespace {

// Triangle rows S(i,*) for 0 <= i <= grown-so-far.  Readers take a shared
// lock; a writer extends whole rows at a time, so entries are immutable once
// published and an insert is idempotent by construction.
class StirlingTable {
 public:
  BigCount get(long n, long k) {
    {
      std::shared_lock lock(mu_);
      if (static_cast<std::size_t>(n) < rows_.size())
        return BigCount::from_signed(rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    }
    std::unique_lock lock(mu_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      std::size_t i = rows_.size();
      std::vector<BigInt> row(i + 1);
      if (i == 0) {
        row[0] = 1;
      } else {
        row[0] = 0;
        for (std::size_t j = 1; j <= i; j++) {
          // S(i,j) = j*S(i-1,j) + S(i-1,j-1)
          BigInt v = rows_[i - 1][j - 1];
          if (j < i) v += static_cast<long>(j) * rows_[i - 1][j];
          row[j] = v;
        }
      }
      rows_.push_back(std::move(row));
    }
    return BigCount::from_signed(rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
  }

 private:
  std::shared_mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& table() {
  static StirlingTable t;
  return t;
}

}  // namespace

BigCount stirling(long n, long k) {
  if (n == 0 && k == 0) return BigCount(1ul);
  if (n < 0 || k <= 0 || k > n) return BigCount(0ul);
  return table().get(n, k);
}

BigCount stirling_closed_form(long n, long k) {
  if (!(n >= k && k >= 1)) throw std::invalid_argument("stirling_closed_form: need n >= k >= 1");
  BigInt sum = 0;
  for (long j = 0; j <= k; j++) {
    BigInt term = binomial(k, j) * pow_int(BigInt(k - j), static_cast<unsigned long>(n));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  BigInt kfac = factorial(static_cast<unsigned long>(k));
  if (!mpz_divisible_p(sum.get_mpz_t(), kfac.get_mpz_t()))
    throw std::logic_error("stirling_closed_form: alternating sum not divisible by k!");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), kfac.get_mpz_t());
  return BigCount::from_signed(q);
}

bool n_reaches_L_affine(long n, long k, long t, long mul, long add) {
  if (t < 1 || k < t + 2 || mul < 1)
    throw std::invalid_argument("n_reaches_L_affine: need t >= 1, k >= t+2, mul >= 1");
  long A = (t + 1) * (k - t + 1);
  long e2 = n - add - mul * (t + 1);                       // exponent of 2 on the left
  unsigned long eA = static_cast<unsigned long>(mul * (k - t + 1));  // exponent of A
  BigInt rhs = pow_int(BigInt(A), eA);
  if (e2 >= 0) return pow2(static_cast<unsigned long>(e2)) >= rhs;
  // 2^e2 >= A^eA  <=>  1 >= 2^(-e2) * A^eA ; A >= 2 so this is false.
  return pow2(static_cast<unsigned long>(-e2)) * rhs <= 1;
}

bool threshold_L_holds(long n, long k, long t) { return n_reaches_L_affine(n, k, t, 1, 0); }

long min_n_for_L(long k, long t) {
  long n = t + 1;
  while (!threshold_L_holds(n, k, t)) n++;
  return n;
}

bool threshold_2L_holds(long n, long k, long t) { return n_reaches_L_affine(n, k, t, 2, 0); }

long min_n_for_2L(long k, long t) {
  long n = 2 * (t + 1);
  while (!threshold_2L_holds(n, k, t)) n++;
  return n;
}

int compare_L(long k, long s1, long s2) {
  if (s1 == s2) return 0;
  auto part = [&](long s) {
    long b = k - s + 1;
    long c = (s + 1) * (k - s + 1);
    return std::pair<long, long>(b, c);
  };
  auto [b1, c1] = part(s1);
  auto [b2, c2] = part(s2);
  if (b1 <= 0 || b2 <= 0) throw std::invalid_argument("compare_L: need s <= k-1");
  // L1 - L2 = (s1-s2) + b1*log2(c1) - b2*log2(c2); multiply out base 2:
  //   sign of 2^(s1-s2) * c1^b1 - c2^b2.
  BigInt lhs = pow_int(BigInt(c1), static_cast<unsigned long>(b1));
  BigInt rhs = pow_int(BigInt(c2), static_cast<unsigned long>(b2));
  long d = s1 - s2;
  if (d >= 0)
    lhs *= pow2(static_cast<unsigned long>(d));
  else
    rhs *= pow2(static_cast<unsigned long>(-d));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

L0Params L0_bound_params(long k, long t) {
  if (k < t + 3) throw std::invalid_argument("L0_bound_params: need k >= t+3");
  long best = t + 1;
  for (long s = t + 2; s <= k - 2; s++)
    if (compare_L(k, s, best) > 0) best = s;  // strict: ties keep the smaller s
  // least n with n >= L(k,s) for every s in range = max of the individual minima
  long mn = 0;
  for (long s = t + 1; s <= k - 2; s++) mn = std::max(mn, min_n_for_L(k, s));
  return L0Params{best, mn};
}

bool threshold_L0_holds(long n, long k, long t) {
  if (k < t + 3) throw std::invalid_argument("threshold_L0_holds: need k >= t+3");
  for (long s = t + 1; s <= k - 2; s++)
    if (!threshold_L_holds(n, k, s)) return false;
  return true;
}

bool threshold_growth_holds(long n, long k) {
  if (k < 2) throw std::invalid_argument("threshold_growth_holds: need k >= 2");
  long e2 = n + k - 5;
  BigInt rhs = pow_int(BigInt(k), static_cast<unsigned long>(2 * k));
  if (e2 >= 0) return pow2(static_cast<unsigned long>(e2)) >= rhs;
  return pow2(static_cast<unsigned long>(-e2)) * rhs <= 1;
}

long min_n_for_growth(long k) {
  long n = 5 - k;  // exact threshold is 5-k+2k*log2(k) > 5-k for k >= 2
  while (!threshold_growth_holds(n, k)) n++;
  return n;
}

double L_approx(long k, long t) {
  double A = static_cast<double>((t + 1) * (k - t + 1));
  return static_cast<double>(t + 1) + static_cast<double>(k - t + 1) * std::log2(A);
}

std::string threshold_L_inequality(long k, long t) {
  long A = (t + 1) * (k - t + 1);
  BigInt rhs = pow_int(BigInt(A), static_cast<unsigned long>(k - t + 1));
  return "2^(n-" + std::to_string(t + 1) + ") >= " + std::to_string(A) + "^" +
         std::to_string(k - t + 1) + " = " + rhs.get_str();
}

std::string threshold_2L_inequality(long k, long t) {
  long A = (t + 1) * (k - t + 1);
  BigInt rhs = pow_int(BigInt(A), static_cast<unsigned long>(2 * (k - t + 1)));
  return "2^(n-" + std::to_string(2 * t + 2) + ") >= " + std::to_string(A) + "^" +
         std::to_string(2 * (k - t + 1)) + " = " + rhs.get_str();
}

}  // namespace crosspart
