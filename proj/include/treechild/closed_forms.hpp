#pragma once

// Closed forms: one-component network counts, node-labeled network counts,
// and their Laplace-method first-order main terms (log scale).

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

#include "asymptotics.hpp"
#include "recurrences.hpp"

namespace treechild {

// 1-TC_{n,k} = C(n,k) (2n-2)! / (2^{n-1} (n-k-1)!).
inline mpz_class one_tc_nk(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("one_tc_nk: need 0 <= k <= n-1");
  mpz_class num = binomial(n, k) * factorial(2 * n - 2);
  mpz_class den = factorial(n - k - 1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline mpz_class one_tc(int n) {
  mpz_class s = 0;
  for (int k = 0; k <= n - 1; ++k) s += one_tc_nk(n, k);
  return s;
}

// log of (1/(2 sqrt(e))) n^{-5/4} e^{2 sqrt(n)} (2/e^2)^n n^{2n}.
inline double one_tc_main_term_log(long n) {
  if (n < 1) throw std::invalid_argument("one_tc_main_term_log: n must be >= 1");
  double x = static_cast<double>(n);
  return -std::log(2.0) - 0.5 - 1.25 * std::log(x) + 2.0 * std::sqrt(x) +
         x * (std::log(2.0) - 2.0) + 2.0 * x * std::log(x);
}

using TcProvider = std::function<mpz_class(int n, int k)>;

// Summation range of the node-labeled count for odd N: ceil((N+3)/4) <= n <=
// (N+1)/2, with k = (N+1)/2 - n.
inline std::pair<int, int> hat_tc_range(int N) {
  return {(N + 3 + 3) / 4, (N + 1) / 2};  // ceil((N+3)/4) for integer N
}

// hat-TC_N = sum over the range of N!/n! * TC_{n,(N+1)/2-n}; zero for even N.
inline mpz_class hat_tc(int N, const TcProvider& tc) {
  if (N < 1) throw std::invalid_argument("hat_tc: N must be >= 1");
  if (N % 2 == 0) return 0;
  auto [lo, hi] = hat_tc_range(N);
  mpz_class s = 0;
  for (int n = lo; n <= hi; ++n) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), factorial(N).get_mpz_t(), factorial(n).get_mpz_t());
    s += q * tc(n, (N + 1) / 2 - n);
  }
  return s;
}

// Index at which the summand of hat-TC_N is maximal.
inline int hat_tc_maximizer(int N) {
  return static_cast<int>(std::floor(N / 4.0 + 11.0 / 8.0 + std::sqrt(12.0 * N + 61.0) / 8.0));
}

// Logs of the two bound expressions for hat-TC_N (constants omitted):
//   lower: N^{1/12} e^{a1 (3N/4)^{1/3}} (3/e^5)^{N/4} N^{5N/4}
//   upper: N^2 e^{sqrt(3N)/2} (3/e^5)^{N/4} N^{5N/4}
inline std::pair<double, double> hat_tc_bounds_log(long N) {
  double x = static_cast<double>(N);
  double shared = x / 4.0 * (std::log(3.0) - 5.0) + 5.0 * x / 4.0 * std::log(x);
  double lower = std::log(x) / 12.0 + airy_a1_double() * std::cbrt(3.0 * x / 4.0) + shared;
  double upper = 2.0 * std::log(x) + std::sqrt(3.0 * x) / 2.0 + shared;
  return {lower, upper};
}

// 1-hat-TC_N = sum over the same range of C(N,n) (N-n)! * 1-TC_{n,(N+1)/2-n}.
inline mpz_class one_hat_tc(int N) {
  if (N < 1) throw std::invalid_argument("one_hat_tc: N must be >= 1");
  if (N % 2 == 0) return 0;
  auto [lo, hi] = hat_tc_range(N);
  mpz_class s = 0;
  for (int n = lo; n <= hi; ++n)
    s += binomial(N, n) * factorial(N - n) * one_tc_nk(n, (N + 1) / 2 - n);
  return s;
}

// log of 2^{9/8} e^{-1/32} N^{-7/8} e^{(2N)^{3/4}/2 + sqrt(2N)/16 -
// 3(2N)^{1/4}/64} (1/(2e^5))^{N/4} N^{5N/4}.
inline double one_hat_tc_main_term_log(long N) {
  double x = static_cast<double>(N);
  double t = 2.0 * x;
  return 9.0 / 8.0 * std::log(2.0) - 1.0 / 32.0 - 7.0 / 8.0 * std::log(x) +
         std::pow(t, 0.75) / 2.0 + std::sqrt(t) / 16.0 - 3.0 * std::pow(t, 0.25) / 64.0 +
         x / 4.0 * (-std::log(2.0) - 5.0) + 5.0 * x / 4.0 * std::log(x);
}

}  // namespace treechild
