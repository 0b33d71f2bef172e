#pragma once

// Certified evaluation of the Airy function Ai and Ai' on the real line.
//
// Two routes, both returning enclosing intervals:
//   * Maclaurin series with interval term recurrences (any x, precision
//     boosted to absorb the cancellation for x > 0);
//   * the large-x asymptotic expansion with the first-omitted-term
//     remainder bound (valid for x > 0; used from x >= AIRY_ASYMP_MIN).
// The largest real zero a1 = -2.3381074104... is found by interval
// bisection on [-3,-2] followed by Newton polishing.

#include "treechild/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treechild {

inline constexpr double AIRY_ASYMP_MIN = 12.0;

namespace detail {

// Ai(0) and Ai'(0) as intervals: Ai(0) = 3^{-2/3}/Gamma(2/3),
// Ai'(0) = -3^{-1/3}/Gamma(1/3).
inline Interval airy_c1(mpfr_prec_t prec) {
  Interval third = Interval::from_long(1, prec) / Interval::from_long(3, prec);
  Interval g(prec);
  // Gamma is monotone decreasing on (0,1.46), so endpoint rounding suffices;
  // play safe and take min/max of both directed evaluations.
  BigFloat x(prec);
  mpfr_set_ui(x.get(), 2, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), 3, MPFR_RNDD);
  BigFloat a(prec), b(prec);
  mpfr_gamma(a.get(), x.get(), MPFR_RNDD);
  mpfr_set_ui(x.get(), 2, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), 3, MPFR_RNDU);
  mpfr_gamma(b.get(), x.get(), MPFR_RNDU);
  if (cmp(a, b) > 0) std::swap(a, b);
  mpfr_nextbelow(a.get());
  mpfr_nextabove(b.get());
  Interval gamma23(prec);
  gamma23.lo = a;
  gamma23.hi = b;
  Interval c = ipow_ui(icbrt(Interval::from_long(3, prec)), 2);  // 3^{2/3}
  return Interval::from_long(1, prec) / (c * gamma23);
}

inline Interval airy_c2(mpfr_prec_t prec) {
  BigFloat x(prec), a(prec), b(prec);
  mpfr_set_ui(x.get(), 1, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), 3, MPFR_RNDD);
  mpfr_gamma(a.get(), x.get(), MPFR_RNDU);  // decreasing near 1/3
  mpfr_set_ui(x.get(), 1, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), 3, MPFR_RNDU);
  mpfr_gamma(b.get(), x.get(), MPFR_RNDD);
  if (cmp(a, b) > 0) std::swap(a, b);
  mpfr_nextbelow(a.get());
  mpfr_nextabove(b.get());
  Interval gamma13(prec);
  gamma13.lo = a;
  gamma13.hi = b;
  Interval c = icbrt(Interval::from_long(3, prec));  // 3^{1/3}
  return Interval::from_long(1, prec) / (c * gamma13);
}

// Extra working bits to absorb the cancellation of the two Maclaurin series:
// for x > 0 the partial sums reach ~ e^{(2/3)x^{3/2}} while Ai(x) ~ e^{-(2/3)x^{3/2}}.
inline mpfr_prec_t maclaurin_guard_bits(double xhi) {
  if (xhi <= 0) return 64;
  double z = (4.0 / 3.0) * std::pow(xhi, 1.5);  // nats of cancellation
  return static_cast<mpfr_prec_t>(z * 1.4427) + 64;
}

struct AiPair {
  Interval ai;
  Interval aip;
  AiPair(mpfr_prec_t prec) : ai(prec), aip(prec) {}
};

// Maclaurin evaluation of Ai and Ai' at interval x. Requires |x| modest
// (the series converges everywhere but the guard bits are sized for |x| <= ~30).
inline AiPair airy_maclaurin_pair(const Interval& x, mpfr_prec_t prec) {
  const double xd = x.mag().to_double();
  if (xd > 40.0) throw std::domain_error("airy_maclaurin: |x| too large for the series budget");
  const mpfr_prec_t wp = prec + maclaurin_guard_bits(x.hi.to_double()) +
                         static_cast<mpfr_prec_t>(std::max(0.0, xd) * 4);
  Interval xx(wp);
  mpfr_set(xx.lo.get(), x.lo.get(), MPFR_RNDD);
  mpfr_set(xx.hi.get(), x.hi.get(), MPFR_RNDU);
  const Interval x3 = ipow_ui(xx, 3);
  const Interval one = Interval::from_long(1, wp);

  // f  = sum t_k,  t_0 = 1,        t_{k+1} = t_k x^3 / ((3k+2)(3k+3))
  // g  = sum u_k,  u_0 = x,        u_{k+1} = u_k x^3 / ((3k+3)(3k+4))
  // f' = sum v_k,  v_1 = x^2/2,    v_{k+1} = v_k x^3 / ((3k)(3k+2))     (k>=1)
  // g' = sum w_k,  w_0 = 1,        w_{k+1} = w_k x^3 / ((3k+1)(3k+3))
  Interval f = one, g = xx, fp = Interval::from_long(0, wp), gp = one;
  Interval t = one, u = xx, v = (xx * xx) / Interval::from_long(2, wp), w = one;
  f = one;
  fp = v;  // k = 1 term of f'
  BigFloat tol(wp);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec + 32), MPFR_RNDN);

  long k = 0;
  const long kmax = 100000;
  while (true) {
    ++k;
    t = t * (x3 / Interval::from_long((3 * k - 1) * 3 * k, wp));
    u = u * (x3 / Interval::from_long(3 * k * (3 * k + 1), wp));
    w = w * (x3 / Interval::from_long((3 * k - 2) * 3 * k, wp));
    if (k >= 2) v = v * (x3 / Interval::from_long((3 * k - 3) * (3 * k - 1), wp));
    f = f + t;
    g = g + u;
    gp = gp + w;
    if (k >= 2) fp = fp + v;

    BigFloat m(wp), tmp(wp);
    mpfr_max(m.get(), t.mag().get(), u.mag().get(), MPFR_RNDU);
    mpfr_max(tmp.get(), v.mag().get(), w.mag().get(), MPFR_RNDU);
    mpfr_max(m.get(), m.get(), tmp.get(), MPFR_RNDU);
    // Stop when the term ratio |x|^3/((3k)(3k+1)) is < 1/2 and terms are tiny;
    // the tail is then bounded by twice the next term's magnitude.
    const double ratio = std::pow(xd, 3) / (3.0 * (k + 1) * (3.0 * (k + 1) + 1));
    if (ratio < 0.5 && mpfr_cmp(m.get(), tol.get()) < 0) {
      BigFloat tail(wp);
      mpfr_mul_ui(tail.get(), m.get(), 2, MPFR_RNDU);
      f = f.widened(tail);
      g = g.widened(tail);
      fp = fp.widened(tail);
      gp = gp.widened(tail);
      break;
    }
    if (k > kmax) throw std::runtime_error("airy_maclaurin: series did not converge");
  }

  const Interval c1 = airy_c1(wp), c2 = airy_c2(wp);
  AiPair out(prec);
  Interval ai = c1 * f - c2 * g;
  Interval aip = c1 * fp - c2 * gp;
  mpfr_set(out.ai.lo.get(), ai.lo.get(), MPFR_RNDD);
  mpfr_set(out.ai.hi.get(), ai.hi.get(), MPFR_RNDU);
  mpfr_set(out.aip.lo.get(), aip.lo.get(), MPFR_RNDD);
  mpfr_set(out.aip.hi.get(), aip.hi.get(), MPFR_RNDU);
  return out;
}

// Asymptotic expansion for x >= AIRY_ASYMP_MIN:
//   Ai(x) = e^{-z}/(2 sqrt(pi) x^{1/4}) * sum_k (-1)^k u_k z^{-k},
//   z = (2/3) x^{3/2}, u_0 = 1, u_{k+1} = u_k (6k+1)(6k+5)/(72(k+1)).
// The remainder is bounded by the first omitted term (doubled for safety).
inline Interval airy_asymptotic(const Interval& x, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 64;
  Interval xx(wp);
  mpfr_set(xx.lo.get(), x.lo.get(), MPFR_RNDD);
  mpfr_set(xx.hi.get(), x.hi.get(), MPFR_RNDU);
  const Interval z = (Interval::from_long(2, wp) / Interval::from_long(3, wp)) * xx * isqrt(xx);
  const Interval zinv = Interval::from_long(1, wp) / z;

  Interval sum = Interval::from_long(1, wp);
  Interval term = Interval::from_long(1, wp);
  BigFloat best(wp);
  long k = 0;
  const double zd = z.lo.to_double();
  const long kstop = std::max<long>(4, static_cast<long>(zd));  // terms shrink until k ~ z
  BigFloat tol(wp);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec + 16), MPFR_RNDN);
  while (k < kstop) {
    term = term * Interval::from_mpq(mpq_class(static_cast<long>((6 * k + 1)) * (6 * k + 5),
                                               72 * (k + 1)),
                                     wp) * zinv;
    ++k;
    if (k & 1)
      sum = sum - term;
    else
      sum = sum + term;
    if (mpfr_cmp(term.mag().get(), tol.get()) < 0) break;
  }
  // first omitted term
  Interval next = term * Interval::from_mpq(mpq_class(static_cast<long>((6 * k + 1)) * (6 * k + 5),
                                                      72 * (k + 1)),
                                            wp) * zinv;
  BigFloat bound(wp);
  mpfr_mul_ui(bound.get(), next.mag().get(), 2, MPFR_RNDU);
  sum = sum.widened(bound);

  const Interval pref =
      iexp(-z) / (Interval::from_long(2, wp) * isqrt(ipi(wp)) * isqrt(isqrt(xx)));
  Interval r = pref * sum;
  Interval out(prec);
  mpfr_set(out.lo.get(), r.lo.get(), MPFR_RNDD);
  mpfr_set(out.hi.get(), r.hi.get(), MPFR_RNDU);
  return out;
}

}  // namespace detail

// Enclosure of Ai(x); prec is the target precision in bits of the result.
inline Interval airy_ai(const Interval& x, mpfr_prec_t prec) {
  if (x.lo.to_double() >= AIRY_ASYMP_MIN) return detail::airy_asymptotic(x, prec);
  return detail::airy_maclaurin_pair(x, prec).ai;
}

inline Interval airy_ai_prime(const Interval& x, mpfr_prec_t prec) {
  return detail::airy_maclaurin_pair(x, prec).aip;
}

// Enclosure of the largest real zero a1 of Ai, to roughly `prec` bits.
inline Interval airy_root_a1(mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 64;
  // Bisection phase: Ai(-3) < 0 < Ai(-2).
  BigFloat lo(wp), hi(wp);
  mpfr_set_si(lo.get(), -3, MPFR_RNDN);
  mpfr_set_si(hi.get(), -2, MPFR_RNDN);
  for (int it = 0; it < 20; ++it) {
    BigFloat mid(wp);
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_ui(mid.get(), mid.get(), 2, MPFR_RNDN);
    Interval v = airy_ai(Interval::point(mid, wp), wp);
    if (v.definitely_negative())
      lo = mid;
    else if (v.definitely_positive())
      hi = mid;
    else
      break;  // straddling the root closer than the working precision
  }
  // Newton phase in point arithmetic.
  BigFloat xn(wp);
  mpfr_add(xn.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_ui(xn.get(), xn.get(), 2, MPFR_RNDN);
  for (int it = 0; it < 64; ++it) {
    auto pair = detail::airy_maclaurin_pair(Interval::point(xn, wp), wp);
    BigFloat step(wp);
    mpfr_div(step.get(), pair.ai.mid().get(), pair.aip.mid().get(), MPFR_RNDN);
    mpfr_sub(xn.get(), xn.get(), step.get(), MPFR_RNDN);
    BigFloat astep(wp);
    mpfr_abs(astep.get(), step.get(), MPFR_RNDU);
    BigFloat stop(wp);
    mpfr_set_ui_2exp(stop.get(), 1, -(prec + 16), MPFR_RNDN);
    if (mpfr_cmp(astep.get(), stop.get()) < 0) break;
  }
  // Certify: find delta with sign change across [xn - delta, xn + delta].
  for (int e = static_cast<int>(prec) + 8; e >= 2; --e) {
    BigFloat d(wp);
    mpfr_set_ui_2exp(d.get(), 1, -e, MPFR_RNDN);
    BigFloat a(wp), b(wp);
    mpfr_sub(a.get(), xn.get(), d.get(), MPFR_RNDD);
    mpfr_add(b.get(), xn.get(), d.get(), MPFR_RNDU);
    Interval va = airy_ai(Interval::point(a, wp), wp);
    Interval vb = airy_ai(Interval::point(b, wp), wp);
    if (va.definitely_negative() && vb.definitely_positive()) {
      Interval out(prec);
      mpfr_set(out.lo.get(), a.get(), MPFR_RNDD);
      mpfr_set(out.hi.get(), b.get(), MPFR_RNDU);
      return out;
    }
  }
  throw std::runtime_error("airy_root_a1: failed to certify the root enclosure");
}

}  // namespace treechild
