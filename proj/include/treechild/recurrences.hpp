#pragma once

// Exact arbitrary-precision recurrences: the triangle b_{n,m}, the row sums
// a_n, ballot and Catalan numbers, and the elementary count bounds.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace treechild {

// Lower-triangular table of exact integers, 1 <= m <= n <= n_max.
struct CountTriangle {
  int n_max = 0;
  std::vector<std::vector<mpz_class>> rows;  // rows[n-1][m-1]

  const mpz_class& at(int n, int m) const {
    if (n < 1 || m < 1 || m > n || n > n_max)
      throw std::out_of_range("CountTriangle::at: index out of range");
    return rows[n - 1][m - 1];
  }
};

// b_{1,1} = 1; b_{n,m} = (2n+m-2) * sum_{k<=m} b_{n-1,k}, zero for m > n.
inline CountTriangle b_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("b_table: n_max must be >= 1");
  CountTriangle t;
  t.n_max = n_max;
  t.rows.resize(n_max);
  t.rows[0] = {mpz_class(1)};
  for (int n = 2; n <= n_max; ++n) {
    t.rows[n - 1].resize(n);
    mpz_class prefix = 0;
    for (int m = 1; m <= n; ++m) {
      if (m <= n - 1) prefix += t.rows[n - 2][m - 1];
      t.rows[n - 1][m - 1] = (2 * n + m - 2) * prefix;
    }
  }
  return t;
}

// Same triangle via the rearranged two-term recurrence
//   b_{n,m} = ((2n+m-2)/(2n+m-3)) b_{n,m-1} + (2n+m-2) b_{n-1,m};
// the division is exact because b_{n,m-1} carries the factor (2n+m-3).
inline CountTriangle b_table_alt(int n_max) {
  if (n_max < 1) throw std::invalid_argument("b_table_alt: n_max must be >= 1");
  CountTriangle t;
  t.n_max = n_max;
  t.rows.resize(n_max);
  t.rows[0] = {mpz_class(1)};
  for (int n = 2; n <= n_max; ++n) {
    t.rows[n - 1].resize(n);
    for (int m = 1; m <= n; ++m) {
      mpz_class v = 0;
      if (m >= 2) {
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), t.rows[n - 1][m - 2].get_mpz_t(),
                        static_cast<unsigned long>(2 * n + m - 3));
        v += (2 * n + m - 2) * q;
      }
      if (m <= n - 1) v += (2 * n + m - 2) * t.rows[n - 2][m - 1];
      t.rows[n - 1][m - 1] = v;
    }
  }
  return t;
}

// a_1..a_{n_max} with rolling rows (O(n) memory).
inline std::vector<mpz_class> a_seq(int n_max) {
  if (n_max < 1) throw std::invalid_argument("a_seq: n_max must be >= 1");
  std::vector<mpz_class> a;
  a.reserve(n_max);
  std::vector<mpz_class> row{mpz_class(1)};
  a.push_back(1);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<mpz_class> next(n);
    mpz_class prefix = 0, an = 0;
    for (int m = 1; m <= n; ++m) {
      if (m <= n - 1) prefix += row[m - 1];
      next[m - 1] = (2 * n + m - 2) * prefix;
      an += next[m - 1];
    }
    a.push_back(an);
    row = std::move(next);
  }
  return a;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// g_{n,m} = ((n-m+1)/n) C(n+m-2, n-1); row sums are Catalan numbers.
inline mpz_class ballot_g(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw std::invalid_argument("ballot_g: need 1 <= m <= n");
  mpz_class v = (n - m + 1) * binomial(n + m - 2, n - 1);
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  return q;
}

inline mpz_class catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  mpz_class q;
  mpz_class v = binomial(2 * n, n);
  mpz_divexact_ui(q.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return q;
}

struct BallotBoundReport {
  bool ok = true;
  int first_fail_n = 0, first_fail_m = 0;  // 0,0 when ok
};

// 3^n n! g_{n,m} >= b_{n,m} entrywise and a_n <= 3^n n! C_n, n <= n_max.
inline BallotBoundReport check_ballot_bound(int n_max) {
  BallotBoundReport rep;
  std::vector<mpz_class> brow{mpz_class(1)};
  mpz_class scale = 3;  // 3^n n!
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 2) {
      std::vector<mpz_class> next(n);
      mpz_class prefix = 0;
      for (int m = 1; m <= n; ++m) {
        if (m <= n - 1) prefix += brow[m - 1];
        next[m - 1] = (2 * n + m - 2) * prefix;
      }
      brow = std::move(next);
      scale *= 3 * n;
    }
    mpz_class an = 0;
    for (int m = 1; m <= n; ++m) {
      an += brow[m - 1];
      if (scale * ballot_g(n, m) < brow[m - 1]) {
        if (rep.ok) rep = {false, n, m};
      }
    }
    if (an > scale * catalan(n)) {
      if (rep.ok) rep = {false, n, 0};
    }
  }
  return rep;
}

// TC_{n,n-1} = n! a_{n-1}.
inline mpz_class tc_max_retic(int n) {
  if (n < 1) throw std::invalid_argument("tc_max_retic: n must be >= 1");
  if (n == 1) return 1;
  return factorial(n) * a_seq(n - 1).back();
}

// Upper bound TC_{n,k} <= TC_{n,n-1} / (2^{n-1-k} (n-k-1)!), rounded up.
inline mpz_class tc_upper_k(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("tc_upper_k: need 0 <= k <= n-1");
  mpz_class num = tc_max_retic(n);
  mpz_class den = factorial(n - k - 1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - k));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Decimal-text cache for a_seq, keyed by n_max.
inline std::vector<mpz_class> a_seq_cached(int n_max, const std::filesystem::path& cache_dir) {
  namespace fs = std::filesystem;
  fs::path file = cache_dir / ("a_seq_" + std::to_string(n_max) + ".txt");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string header;
    int stored = 0;
    if (in >> header >> stored && header == "a_seq" && stored == n_max) {
      std::vector<mpz_class> a(n_max);
      bool ok = true;
      std::string digits;
      for (int i = 0; i < n_max && ok; ++i) {
        if (in >> digits) a[i] = mpz_class(digits);
        else ok = false;
      }
      if (ok) return a;
    }
  }
  auto a = a_seq(n_max);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  std::ofstream out(file);
  if (out) {
    out << "a_seq " << n_max << '\n';
    for (const auto& v : a) out << v.get_str() << '\n';
  }
  return a;
}

inline void write_triangle_csv(std::ostream& os, const CountTriangle& t) {
  os << "n,m,b\n";
  for (int n = 1; n <= t.n_max; ++n)
    for (int m = 1; m <= n; ++m) os << n << ',' << m << ',' << t.at(n, m).get_str() << '\n';
}

}  // namespace treechild
