#pragma once

// Log-space main-term evaluators for the count asymptotics, and the bounded
// ratio used as a stand-in for the unknown Theta-constant.

#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

#include "airy.hpp"
#include "interval.hpp"

namespace treechild {

// Largest real zero of Ai, as a double (certified computation, cached).
inline double airy_a1_double() {
  static const double a1 = airy_root_a1(128).mid().to_double();
  return a1;
}

// Natural log of an arbitrary-precision integer.
inline double log_mpz(const mpz_class& v) {
  if (v <= 0) throw std::invalid_argument("log_mpz: need a positive integer");
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

// log of the main term n^{-2/3} e^{a1 (3n)^{1/3}} (12/e^2)^n n^{2n}.
inline double main_term_log_tc(long n) {
  if (n < 1) throw std::invalid_argument("main_term_log_tc: n must be >= 1");
  double x = static_cast<double>(n);
  return -2.0 / 3.0 * std::log(x) + airy_a1_double() * std::cbrt(3.0 * x) +
         x * (std::log(12.0) - 2.0) + 2.0 * x * std::log(x);
}

// log of the main term for a_n. The display N! N^{-5/3} e^{a1 (3N)^{1/3}}
// 12^N tracks the sequence one index behind (it bounds a_{N-1}); evaluating
// it at N = n+1 keeps the ratio a_n / main term inside a fixed window.
inline double main_term_log_an(long n) {
  if (n < 1) throw std::invalid_argument("main_term_log_an: n must be >= 1");
  double x = static_cast<double>(n + 1);
  return std::lgamma(x + 1.0) - 5.0 / 3.0 * std::log(x) + airy_a1_double() * std::cbrt(3.0 * x) +
         x * std::log(12.0);
}

// a_n divided by its main term; bounded above and below (unknown constant).
inline double theta_ratio(long n, const mpz_class& a_n) {
  return std::exp(log_mpz(a_n) - main_term_log_an(n));
}

}  // namespace treechild
