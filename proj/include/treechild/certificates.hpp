#pragma once

// Airy-based super-/sub-solution certificates for the d-recurrence: the
// comparison functions X-tilde / X-hat, the shift factors s-tilde / s-hat,
// and interval-certified verdicts for the two families of inequalities.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "airy.hpp"
#include "interval.hpp"

namespace treechild {

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
  }
}

// Shared read-only state for certificate evaluation: working precision, the
// largest Airy zero a1, and c = (2/3)^{1/3}.
struct AiryContext {
  mpfr_prec_t prec;
  Interval a1;
  Interval c;

  explicit AiryContext(mpfr_prec_t prec_bits = 192)
      : prec(prec_bits),
        a1(airy_root_a1(prec_bits)),
        c(icbrt(Interval::from_long(2, prec_bits) / Interval::from_long(3, prec_bits))) {}

  // Argument a1 + c (m+1) n^{-1/3} of the Airy factor.
  Interval arg(long n, long m) const {
    Interval nn = Interval::from_long(n, prec);
    return a1 + c * Interval::from_long(m + 1, prec) / icbrt(nn);
  }

  Interval ai_at(long n, long m) const { return airy_ai(arg(n, m), prec); }
};

namespace detail {

// Polynomial prefactor 1 - m^2/(3n) - 25m/(18n) [+ eta m^4/n^2].
inline Interval x_prefactor(const AiryContext& ctx, long n, long m, const mpq_class* eta) {
  Interval one = Interval::from_long(1, ctx.prec);
  mpq_class q1(m * m, 3 * n), q2(25 * m, 18 * n);
  q1.canonicalize();
  q2.canonicalize();
  Interval f = one - Interval::from_mpq(q1, ctx.prec) - Interval::from_mpq(q2, ctx.prec);
  if (eta) {
    mpz_class m4 = mpz_class(m) * m * m * m;
    mpq_class q(m4, mpz_class(n) * n);
    q.canonicalize();
    f = f + Interval::from_mpq(*eta * q, ctx.prec);
  }
  return f;
}

inline Interval s_common(const AiryContext& ctx, long n) {
  Interval nn = Interval::from_long(n, ctx.prec);
  Interval two = Interval::from_long(2, ctx.prec);
  Interval n23 = ipow_ui(icbrt(nn), 2);
  Interval c22 = ipow_ui(icbrt(two), 2);                               // 2^{2/3}
  Interval c32 = ipow_ui(icbrt(Interval::from_long(3, ctx.prec)), 2);  // 3^{2/3}
  return two + c22 * ctx.a1 / (c32 * n23) - two / (Interval::from_long(3, ctx.prec) * nn);
}

inline Interval n_pow_76(const AiryContext& ctx, long n) {  // n^{7/6}
  Interval n7 = Interval::from_mpz(mpz_class(n) * n * n * n * n * n * n, ctx.prec);
  return isqrt(icbrt(n7));
}

}  // namespace detail

inline Interval s_tilde(const AiryContext& ctx, long n) {
  return detail::s_common(ctx, n) -
         Interval::from_long(1, ctx.prec) / detail::n_pow_76(ctx, n);
}

inline Interval s_hat(const AiryContext& ctx, long n) {
  return detail::s_common(ctx, n) +
         Interval::from_long(1, ctx.prec) / detail::n_pow_76(ctx, n);
}

// X-tilde_{n,m}; zero for m < 0 by convention.
inline Interval X_tilde(const AiryContext& ctx, long n, long m) {
  if (m < 0) return Interval::from_long(0, ctx.prec);
  return detail::x_prefactor(ctx, n, m, nullptr) * ctx.ai_at(n, m);
}

// X-hat_{n,m} with the quartic correction eta m^4 / n^2.
inline Interval X_hat(const AiryContext& ctx, long n, long m, const mpq_class& eta) {
  if (m < 0) return Interval::from_long(0, ctx.prec);
  return detail::x_prefactor(ctx, n, m, &eta) * ctx.ai_at(n, m);
}

struct CertificateCheck {
  Verdict verdict = Verdict::Inconclusive;
  double lhs = 0, rhs = 0, margin = 0;  // margin > 0 means the inequality holds
};

namespace detail {

// Airy-value row cache: ai_rows[n][m] = Ai(a1 + c(m+1)n^{-1/3}), grown on
// demand; the scan keeps only the two rows it touches.
struct AiRowCache {
  const AiryContext& ctx;
  std::map<long, std::vector<Interval>> rows;

  explicit AiRowCache(const AiryContext& c) : ctx(c) {}

  const Interval& get(long n, long m) {
    auto& row = rows[n];
    while (static_cast<long>(row.size()) <= m)
      row.push_back(ctx.ai_at(n, static_cast<long>(row.size())));
    return row[static_cast<size_t>(m)];
  }
  void drop_below(long n) {
    while (!rows.empty() && rows.begin()->first < n) rows.erase(rows.begin());
  }
};

// Both inequalities share the right-hand combination
//   w1 X_{n-1,m+1} + w2 X_{n-1,m-1},
//   w1 = (3n+m-4)/(3n+m-6), w2 = (3n+m-4)/(3n+3m).
inline Interval rhs_combination(const AiryContext& ctx, long n, long m, const mpq_class* eta,
                                AiRowCache* cache) {
  auto X = [&](long mm) {
    if (mm < 0) return Interval::from_long(0, ctx.prec);
    Interval ai = cache ? cache->get(n - 1, mm) : ctx.ai_at(n - 1, mm);
    return x_prefactor(ctx, n - 1, mm, eta) * ai;
  };
  mpq_class q1(3 * n + m - 4, 3 * n + m - 6), q2(3 * n + m - 4, 3 * n + 3 * m);
  q1.canonicalize();
  q2.canonicalize();
  Interval w1 = Interval::from_mpq(q1, ctx.prec);
  Interval w2 = Interval::from_mpq(q2, ctx.prec);
  return w1 * X(m + 1) + w2 * X(m - 1);
}

inline CertificateCheck decide(const Interval& lhs, const Interval& rhs, bool want_lhs_le_rhs) {
  CertificateCheck out;
  out.lhs = lhs.mid().to_double();
  out.rhs = rhs.mid().to_double();
  const Interval& lo = want_lhs_le_rhs ? lhs : rhs;
  const Interval& hi = want_lhs_le_rhs ? rhs : lhs;
  out.margin = (hi - lo).mid().to_double();
  if (certainly_le(lo, hi)) out.verdict = Verdict::Holds;
  else if (certainly_lt(hi, lo)) out.verdict = Verdict::Fails;
  else out.verdict = Verdict::Inconclusive;
  return out;
}

inline CertificateCheck check_lb_at(const AiryContext& ctx, long n, long m, AiRowCache* cache) {
  Interval ai = cache ? cache->get(n, m) : ctx.ai_at(n, m);
  Interval lhs = s_tilde(ctx, n) * (x_prefactor(ctx, n, m, nullptr) * ai);
  Interval rhs = rhs_combination(ctx, n, m, nullptr, cache);
  return decide(lhs, rhs, /*want_lhs_le_rhs=*/true);
}

inline CertificateCheck check_ub_at(const AiryContext& ctx, long n, long m, const mpq_class& eta,
                                    AiRowCache* cache) {
  Interval ai = cache ? cache->get(n, m) : ctx.ai_at(n, m);
  Interval lhs = s_hat(ctx, n) * (x_prefactor(ctx, n, m, &eta) * ai);
  Interval rhs = rhs_combination(ctx, n, m, &eta, cache);
  return decide(lhs, rhs, /*want_lhs_le_rhs=*/false);  // ub wants lhs >= rhs
}

}  // namespace detail

// Lower-bound certificate: s-tilde(n) X-tilde_{n,m} <= w1 X-tilde_{n-1,m+1} +
// w2 X-tilde_{n-1,m-1}. Inconclusive results trigger precision doubling up to
// max_bumps before being reported as such.
inline CertificateCheck check_lb_inequality(long n, long m, mpfr_prec_t prec = 192,
                                            int max_bumps = 3) {
  for (int b = 0;; ++b) {
    AiryContext ctx(prec << b);
    auto r = detail::check_lb_at(ctx, n, m, nullptr);
    if (r.verdict != Verdict::Inconclusive || b == max_bumps) return r;
  }
}

// Upper-bound certificate: s-hat(n) X-hat_{n,m} >= w1 X-hat_{n-1,m+1} +
// w2 X-hat_{n-1,m-1}.
inline CertificateCheck check_ub_inequality(long n, long m, const mpq_class& eta = mpq_class(1, 17),
                                            mpfr_prec_t prec = 192, int max_bumps = 3) {
  for (int b = 0;; ++b) {
    AiryContext ctx(prec << b);
    auto r = detail::check_ub_at(ctx, n, m, eta, nullptr);
    if (r.verdict != Verdict::Inconclusive || b == max_bumps) return r;
  }
}

struct ScanFailure {
  char side;  // 'l' or 'u'
  long n, m;
  double margin;
};

struct CertificateScanReport {
  uint64_t checked = 0, holds = 0, fails = 0, inconclusive = 0;
  std::vector<ScanFailure> failures;
  // Smallest n such that every row from there to n_hi is clean; -1 if none.
  long lb_onset = -1, ub_onset = -1;
  bool all_hold() const { return fails == 0 && inconclusive == 0; }
};

// Scan both certificate families over n in [n_lo, n_hi], lb for m < n^{2/3 -
// eps}, ub for m < n^{1-eps}. Optional CSV stream receives one row per check:
// n,m,side,lhs,rhs,margin,verdict. Rows of Airy values are cached and reused
// between consecutive n.
inline CertificateScanReport scan_certificates(long n_lo, long n_hi, double eps = 0.05,
                                               const mpq_class& eta = mpq_class(1, 17),
                                               mpfr_prec_t prec = 192, std::ostream* csv = nullptr,
                                               const std::function<void(long)>& progress = nullptr) {
  AiryContext ctx(prec);
  detail::AiRowCache cache(ctx);
  CertificateScanReport rep;
  if (csv) *csv << "n,m,side,lhs,rhs,margin,verdict\n";
  char buf[64];
  auto emit = [&](char side, long n, long m, const CertificateCheck& r) {
    ++rep.checked;
    switch (r.verdict) {
      case Verdict::Holds: ++rep.holds; break;
      case Verdict::Fails: ++rep.fails; rep.failures.push_back({side, n, m, r.margin}); break;
      case Verdict::Inconclusive:
        ++rep.inconclusive;
        rep.failures.push_back({side, n, m, r.margin});
        break;
    }
    if (csv) {
      *csv << n << ',' << m << ',' << (side == 'l' ? "lb" : "ub") << ',';
      std::snprintf(buf, sizeof buf, "%.9e,%.9e,%.9e", r.lhs, r.rhs, r.margin);
      *csv << buf << ',' << to_string(r.verdict) << '\n';
    }
  };
  long lb_last_bad = n_lo - 1, ub_last_bad = n_lo - 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    cache.drop_below(n - 1);
    long m_lb = static_cast<long>(std::pow(static_cast<double>(n), 2.0 / 3.0 - eps));
    long m_ub = static_cast<long>(std::pow(static_cast<double>(n), 1.0 - eps));
    bool row_lb_ok = true, row_ub_ok = true;
    for (long m = 0; m < m_ub; ++m) {
      if (m < m_lb) {
        auto r = detail::check_lb_at(ctx, n, m, &cache);
        if (r.verdict == Verdict::Inconclusive) r = check_lb_inequality(n, m, prec * 2, 2);
        if (r.verdict != Verdict::Holds) row_lb_ok = false;
        emit('l', n, m, r);
      }
      auto r = detail::check_ub_at(ctx, n, m, eta, &cache);
      if (r.verdict == Verdict::Inconclusive) r = check_ub_inequality(n, m, eta, prec * 2, 2);
      if (r.verdict != Verdict::Holds) row_ub_ok = false;
      emit('u', n, m, r);
    }
    if (!row_lb_ok) lb_last_bad = n;
    if (!row_ub_ok) ub_last_bad = n;
    if (progress && n % 50 == 0) progress(n);
  }
  if (lb_last_bad < n_hi) rep.lb_onset = lb_last_bad + 1;
  if (ub_last_bad < n_hi) rep.ub_onset = ub_last_bad + 1;
  return rep;
}

}  // namespace treechild
