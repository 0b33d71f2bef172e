#pragma once

// Thin RAII wrapper around mpfr_t plus outward-rounded interval arithmetic.
// Only the operations needed by the Airy/certificate code are provided.

#include <mpfr.h>
#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace treechild {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }

  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

inline int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

// Closed interval [lo, hi]; all operations round outward so that the exact
// result of the corresponding real operation is always contained.
class Interval {
 public:
  BigFloat lo, hi;

  explicit Interval(mpfr_prec_t prec = 128) : lo(prec), hi(prec) {}

  static Interval from_long(long x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo.get(), x, MPFR_RNDD);
    mpfr_set_si(r.hi.get(), x, MPFR_RNDU);
    return r;
  }
  static Interval from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static Interval from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi.get(), z.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  // Exact point interval from a BigFloat.
  static Interval point(const BigFloat& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set(r.lo.get(), x.get(), MPFR_RNDD);
    mpfr_set(r.hi.get(), x.get(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return lo.prec(); }

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool definitely_positive() const { return lo.sign() > 0; }
  bool definitely_negative() const { return hi.sign() < 0; }
  bool definitely_nonneg() const { return lo.sign() >= 0; }

  BigFloat mid() const {
    BigFloat m(prec());
    mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    return m;
  }
  BigFloat width() const {
    BigFloat w(prec());
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return w;
  }
  // max(|lo|,|hi|)
  BigFloat mag() const {
    BigFloat a(prec()), b(prec());
    mpfr_abs(a.get(), lo.get(), MPFR_RNDU);
    mpfr_abs(b.get(), hi.get(), MPFR_RNDU);
    return cmp(a, b) >= 0 ? a : b;
  }

  Interval operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo.get(), hi.get(), MPFR_RNDD);
    mpfr_neg(r.hi.get(), lo.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(a.prec());
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(a.prec());
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r(a.prec());
    BigFloat t(a.prec());
    bool first = true;
    auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    };
    consider(a.lo.get(), b.lo.get());
    consider(a.lo.get(), b.hi.get());
    consider(a.hi.get(), b.lo.get());
    consider(a.hi.get(), b.hi.get());
    return r;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
    Interval r(a.prec());
    BigFloat t(a.prec());
    bool first = true;
    auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    };
    consider(a.lo.get(), b.lo.get());
    consider(a.lo.get(), b.hi.get());
    consider(a.hi.get(), b.lo.get());
    consider(a.hi.get(), b.hi.get());
    return r;
  }

  // Widen by +/- e (e >= 0).
  Interval widened(const BigFloat& e) const {
    Interval r(prec());
    mpfr_sub(r.lo.get(), lo.get(), e.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), hi.get(), e.get(), MPFR_RNDU);
    return r;
  }
};

// Monotone unary functions with directed rounding.
inline Interval isqrt(const Interval& a) {
  Interval r(a.prec());
  mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}
inline Interval icbrt(const Interval& a) {
  Interval r(a.prec());
  mpfr_cbrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_cbrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}
inline Interval iexp(const Interval& a) {
  Interval r(a.prec());
  mpfr_exp(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_exp(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}
inline Interval ilog(const Interval& a) {
  assert(a.lo.sign() > 0);
  Interval r(a.prec());
  mpfr_log(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_log(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}
inline Interval ipi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi.get(), MPFR_RNDU);
  return r;
}
// x^k for integer k >= 0, x any sign handled via repeated interval products.
inline Interval ipow_ui(const Interval& a, unsigned long k) {
  Interval r = Interval::from_long(1, a.prec());
  Interval base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

// Comparison helpers: true only when certain.
inline bool certainly_le(const Interval& a, const Interval& b) { return cmp(a.hi, b.lo) <= 0; }
inline bool certainly_lt(const Interval& a, const Interval& b) { return cmp(a.hi, b.lo) < 0; }

}  // namespace treechild
