#pragma once
// Exact arbitrary-precision counting arithmetic.
//
// BigCount is a nonnegative exact integer: the result type of every counting
// formula in the library.  Signed intermediates (alternating sums) are done in
// plain mpz_class and converted through BigCount::from_signed, which throws if
// a supposedly-nonnegative total came out negative.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace crosspart {

using BigInt = mpz_class;  // signed, for intermediates

class BigCount {
 public:
  BigCount() : v_(0) {}
  BigCount(unsigned long x) : v_(x) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(const std::string& decimal) : v_(decimal) {
    if (v_ < 0) throw std::invalid_argument("BigCount: negative literal");
  }
  static BigCount from_signed(const BigInt& x) {
    if (x < 0) throw std::logic_error("BigCount: negative total (underflow)");
    BigCount c;
    c.v_ = x;
    return c;
  }

  const BigInt& value() const { return v_; }
  std::string str() const { return v_.get_str(); }
  // Fits-check then convert; for small counts only.
  unsigned long to_ulong() const {
    if (!v_.fits_ulong_p()) throw std::overflow_error("BigCount: does not fit ulong");
    return v_.get_ui();
  }
  double to_double_lossy() const { return v_.get_d(); }  // display only, never a verdict

  BigCount& operator+=(const BigCount& o) {
    v_ += o.v_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    v_ *= o.v_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  // Subtraction errors on underflow: counts never go negative.
  friend BigCount operator-(const BigCount& a, const BigCount& b) {
    if (a.v_ < b.v_) throw std::logic_error("BigCount: subtraction underflow");
    BigCount c;
    c.v_ = a.v_ - b.v_;
    return c;
  }
  BigCount pow(unsigned long e) const {
    BigCount r;
    mpz_pow_ui(r.v_.get_mpz_t(), v_.get_mpz_t(), e);
    return r;
  }

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigCount& a, const BigCount& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigCount& a, const BigCount& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigCount& a, const BigCount& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigCount& a, const BigCount& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigCount& a, const BigCount& b) { return a.v_ >= b.v_; }

 private:
  BigInt v_;
};

// C(n,k) with the universal conventions C(n,0)=1, C(n,k)=0 for k<0 or k>n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r(0);
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

}  // namespace crosspart
