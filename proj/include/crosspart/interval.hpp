#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "crosspart/bigint.hpp"

namespace crosspart {

// Tri-state outcome of a certified comparison: True/False only when the
// relation holds for every point of the operand boxes.
enum class Verdict { True, False, Unknown };

const char* verdict_name(Verdict v);

// Closed interval [lo, hi] with outward-rounded endpoints.  Every operation
// rounds the lower endpoint down (MPFR_RNDD) and the upper endpoint up
// (MPFR_RNDU), so the true real result is always contained in the box.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }

  static Interval from_long(long v, mpfr_prec_t prec = 128);
  static Interval from_bigint(const BigInt& v, mpfr_prec_t prec = 128);
  // num/den as a certified enclosure; den must be nonzero.
  static Interval from_ratio(const BigInt& num, const BigInt& den, mpfr_prec_t prec = 128);

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  // rhs must not contain zero.
  Interval operator/(const Interval& rhs) const;
  Interval neg() const;

  // Natural log / base-2 log / exponential; log arguments must be > 0.
  Interval ln() const;
  Interval log2() const;
  Interval exp() const;
  // Integer power by repeated interval multiplication (e >= 0), with 1/x^|e|
  // for negative e (then the base must not contain zero).
  Interval pow_long(long e) const;
  // Real power: exp(e * ln(*this)); base must be > 0.
  Interval pow(const Interval& e) const;

  bool contains_zero() const;
  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  std::string str(int digits = 12) const;

  // Certified comparisons.
  static Verdict less(const Interval& a, const Interval& b);           // a <  b
  static Verdict less_equal(const Interval& a, const Interval& b);     // a <= b
  static Verdict greater(const Interval& a, const Interval& b);        // a >  b
  static Verdict greater_equal(const Interval& a, const Interval& b);  // a >= b

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_ref() { return lo_; }
  mpfr_t& hi_ref() { return hi_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Runs `check` at doubling precision (start, 2*start, ...) up to `cap` and
// returns the first conclusive verdict; Unknown if the cap is exhausted.
// Widening precision can only sharpen the boxes, so a conclusive verdict at
// one precision is final (monotonicity of certified intervals).
Verdict certify(const std::function<Verdict(mpfr_prec_t)>& check, mpfr_prec_t start = 128,
                mpfr_prec_t cap = 4096);

// Enclosure of the threshold L(k,t) = (t+1) + (k-t+1)*log2((t+1)(k-t+1)).
Interval threshold_L_interval(long k, long t, mpfr_prec_t prec = 200);

// Certified verdict of "n >= L(k,t)" at the given precision (no precision
// loop; used to cross-check the exact integer test at a pinned precision).
Verdict n_reaches_L_certified(long n, long k, long t, mpfr_prec_t prec = 200);

}  // namespace crosspart
