#pragma once

// Exact-rational tables: the d-triangle, its truncated variant d-hat, the
// backward weighted-lattice-path table p, and the exact inequality checks
// built on them.

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "recurrences.hpp"

namespace treechild {

// Sparse rational table; absent entries are zero.
struct RationalTable {
  std::map<int, std::map<int, mpq_class>> rows;  // rows[n][m]

  mpq_class at(int n, int m) const {
    auto it = rows.find(n);
    if (it == rows.end()) return 0;
    auto jt = it->second.find(m);
    return jt == it->second.end() ? mpq_class(0) : jt->second;
  }
};

namespace detail {

// Shared builder: entries with n-m odd are zero (absent); optional row limit
// lim(n) caps m strictly (d-hat truncation).
template <typename Limit>
RationalTable d_table_impl(int n_max, Limit lim) {
  if (n_max < 2) throw std::invalid_argument("d_table: n_max must be >= 2");
  RationalTable t;
  t.rows[2][0] = mpq_class(1, 3);
  for (int n = 3; n <= n_max; ++n) {
    auto& row = t.rows[n];
    const auto& prev = t.rows[n - 1];
    for (int m = 0; m <= n; ++m) {
      if ((n - m) % 2) continue;
      if (!lim(n, m)) continue;
      mpq_class v = 0;
      if (auto it = prev.find(m + 1); it != prev.end()) {
        mpq_class w(3 * n + m - 4, 3 * n + m - 6);
        w.canonicalize();
        v += w * it->second;
      }
      if (m >= 1)
        if (auto it = prev.find(m - 1); it != prev.end()) {
          mpq_class w(3 * n + m - 4, 3 * n + 3 * m);
          w.canonicalize();
          v += w * it->second;
        }
      if (v != 0) row[m] = v;
    }
  }
  return t;
}

}  // namespace detail

// d_{2,0} = 1/3; d_{n,m} = ((3n+m-4)/(3n+m-6)) d_{n-1,m+1}
//                        + ((3n+m-4)/(3n+3m)) d_{n-1,m-1}; zero for n-m odd.
inline RationalTable d_table(int n_max) {
  return detail::d_table_impl(n_max, [](int, int) { return true; });
}

// Same recurrence but entries with m >= n^{1-eps} are forced to zero.
inline RationalTable d_hat_table(int n_max, double eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("d_hat_table: need 0 < eps < 1");
  return detail::d_table_impl(
      n_max, [eps](int n, int m) { return m < std::pow(static_cast<double>(n), 1.0 - eps); });
}

// Backward table of weighted lattice paths ending at (2n, 0):
//   p_{2n,0} = 1;  rows computed for l = 2n-1 down to 2 via
//   p_{l,m} = ((3l+m)/(3l+3m+6)) p_{l+1,m+1} + ((3l+m-2)/(3l+m-4)) p_{l+1,m-1}.
// The down-step weight is singular at (l,m) = (1,1), so rows l = 1, 0 are not
// materialized; the combined two-step weight through that corner is exactly
// 1/3, giving p_{0,0} = (1/3) p_{2,0}. Cross-check: p_{0,0} = d_{2n,0}.
struct PTable {
  int two_n = 0;
  RationalTable table;  // rows l = 2 .. 2n
  mpq_class p00;
};

inline PTable p_table(int two_n) {
  if (two_n < 2 || two_n % 2) throw std::invalid_argument("p_table: need even 2n >= 2");
  PTable out;
  out.two_n = two_n;
  out.table.rows[two_n][0] = 1;
  for (int l = two_n - 1; l >= 2; --l) {
    auto& row = out.table.rows[l];
    const auto& prev = out.table.rows[l + 1];
    for (int m = 0; m <= two_n; ++m) {
      mpq_class v = 0;
      if (auto it = prev.find(m + 1); it != prev.end()) {
        mpq_class w(3 * l + m, 3 * l + 3 * m + 6);
        w.canonicalize();
        v += w * it->second;
      }
      if (m >= 1)
        if (auto it = prev.find(m - 1); it != prev.end()) {
          mpq_class w(3 * l + m - 2, 3 * l + m - 4);
          w.canonicalize();
          v += w * it->second;
        }
      if (v != 0) row[m] = v;
    }
  }
  out.p00 = mpq_class(1, 3) * out.table.at(2, 0);
  return out;
}

struct AppendixLemmaReport {
  bool ok = true;
  int l = -1, j = -1, k = -1;  // first violating triple when !ok
};

// p_{l,j}/(j+1)^2 >= p_{l,k}/(k+1)^2 for 0 <= j < k <= l <= 2n, k-j even.
inline AppendixLemmaReport check_appendix_lemma(int two_n) {
  auto pt = p_table(two_n);
  AppendixLemmaReport rep;
  for (int l = 2; l <= two_n; ++l) {
    for (int j = 0; j <= l; ++j)
      for (int k = j + 2; k <= l; k += 2) {
        mpq_class lhs = pt.table.at(l, j) / ((j + 1) * (j + 1));
        mpq_class rhs = pt.table.at(l, k) / ((k + 1) * (k + 1));
        if (lhs < rhs) {
          if (rep.ok) rep = {false, l, j, k};
        }
      }
  }
  return rep;
}

struct DVsDHatReport {
  bool holds_through_end = false;  // true iff the bound holds on a suffix
  int onset = -1;                  // smallest n from which it holds to n_max
  std::vector<int> failures;       // all n where d_{2n,0} > 2 d-hat_{2n,0}
};

// d_{2n,0} <= 2 d-hat_{2n,0} scanned over 2 <= n <= n_max.
inline DVsDHatReport check_d_vs_dhat(int n_max, double eps) {
  auto d = d_table(2 * n_max);
  auto dh = d_hat_table(2 * n_max, eps);
  DVsDHatReport rep;
  int onset = -1;
  for (int n = 2; n <= n_max; ++n) {
    bool ok = d.at(2 * n, 0) <= 2 * dh.at(2 * n, 0);
    if (!ok) {
      rep.failures.push_back(n);
      onset = -1;
    } else if (onset < 0) {
      onset = n;
    }
  }
  rep.onset = onset;
  rep.holds_through_end = onset >= 0;
  return rep;
}

}  // namespace treechild
