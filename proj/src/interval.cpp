#include "crosspart/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace crosspart {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this == &other) return *this;
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_bigint(const BigInt& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_ratio(const BigInt& num, const BigInt& den, mpfr_prec_t prec) {
  if (den == 0) throw std::invalid_argument("Interval::from_ratio: zero denominator");
  return from_bigint(num, prec) / from_bigint(den, prec);
}

namespace {
mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(join_prec(*this, rhs));
  mpfr_add(r.lo_ref(), lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_ref(), hi_, rhs.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval r(join_prec(*this, rhs));
  mpfr_sub(r.lo_ref(), lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_ref(), hi_, rhs.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& rhs) const {
  // min/max over the four endpoint products, each rounded outward.
  Interval r(join_prec(*this, rhs));
  mpfr_t cand;
  mpfr_init2(cand, r.precision());
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_mul(cand, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_less_p(cand, r.lo())) mpfr_set(r.lo_ref(), cand, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_mul(cand, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_greater_p(cand, r.hi())) mpfr_set(r.hi_ref(), cand, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(cand);
  return r;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (rhs.contains_zero()) throw std::domain_error("Interval division by a box containing zero");
  Interval r(join_prec(*this, rhs));
  mpfr_t cand;
  mpfr_init2(cand, r.precision());
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_div(cand, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_less_p(cand, r.lo())) mpfr_set(r.lo_ref(), cand, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      mpfr_div(cand, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_greater_p(cand, r.hi())) mpfr_set(r.hi_ref(), cand, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(cand);
  return r;
}

Interval Interval::neg() const {
  Interval r(prec_);
  mpfr_neg(r.lo_ref(), hi_, MPFR_RNDD);
  mpfr_neg(r.hi_ref(), lo_, MPFR_RNDU);
  return r;
}

Interval Interval::ln() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::ln of a box reaching <= 0");
  Interval r(prec_);
  mpfr_log(r.lo_ref(), lo_, MPFR_RNDD);
  mpfr_log(r.hi_ref(), hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log2 of a box reaching <= 0");
  Interval r(prec_);
  mpfr_log2(r.lo_ref(), lo_, MPFR_RNDD);
  mpfr_log2(r.hi_ref(), hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_ref(), lo_, MPFR_RNDD);
  mpfr_exp(r.hi_ref(), hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow_long(long e) const {
  if (e < 0) {
    Interval inv = Interval::from_long(1, prec_) / *this;
    return inv.pow_long(-e);
  }
  Interval acc = Interval::from_long(1, prec_);
  Interval base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u != 0) {
    if (u & 1UL) acc = acc * base;
    u >>= 1;
    if (u != 0) base = base * base;
  }
  return acc;
}

Interval Interval::pow(const Interval& e) const { return (e * ln()).exp(); }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), lo_);
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), hi_);
  out += buf.data();
  out += "]";
  return out;
}

Verdict Interval::less(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Verdict::True;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return Verdict::False;
  return Verdict::Unknown;
}

Verdict Interval::less_equal(const Interval& a, const Interval& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Verdict::True;
  if (mpfr_greater_p(a.lo(), b.hi())) return Verdict::False;
  return Verdict::Unknown;
}

Verdict Interval::greater(const Interval& a, const Interval& b) { return less(b, a); }

Verdict Interval::greater_equal(const Interval& a, const Interval& b) { return less_equal(b, a); }

Verdict certify(const std::function<Verdict(mpfr_prec_t)>& check, mpfr_prec_t start,
                mpfr_prec_t cap) {
  for (mpfr_prec_t p = start; p <= cap; p *= 2) {
    Verdict v = check(p);
    if (v != Verdict::Unknown) return v;
  }
  return Verdict::Unknown;
}

Interval threshold_L_interval(long k, long t, mpfr_prec_t prec) {
  Interval a = Interval::from_long((t + 1) * (k - t + 1), prec);
  return Interval::from_long(t + 1, prec) +
         Interval::from_long(k - t + 1, prec) * a.log2();
}

Verdict n_reaches_L_certified(long n, long k, long t, mpfr_prec_t prec) {
  return Interval::greater_equal(Interval::from_long(n, prec), threshold_L_interval(k, t, prec));
}

}  // namespace crosspart
