#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "treechild/certificates.hpp"

using namespace treechild;

namespace {
const AiryContext& ctx() {
  static AiryContext c(192);
  return c;
}
}  // namespace

TEST_CASE("shift factors") {
  // s_hat - s_tilde = 2 n^{-7/6}
  for (long n : {10L, 100L, 1000L}) {
    double diff = (s_hat(ctx(), n) - s_tilde(ctx(), n)).mid().to_double();
    CHECK(diff == Catch::Approx(2.0 * std::pow(n, -7.0 / 6.0)).epsilon(1e-12));
    // both approach 2 from below
    CHECK(s_tilde(ctx(), n).mid().to_double() < 2.0);
    CHECK(s_hat(ctx(), n).mid().to_double() < 2.0);
  }
  CHECK(s_tilde(ctx(), 100).mid().to_double() < s_tilde(ctx(), 1000).mid().to_double());
}

TEST_CASE("comparison function boundary conventions") {
  CHECK(X_tilde(ctx(), 50, -1).mid().to_double() == 0.0);
  CHECK(X_hat(ctx(), 50, -1, mpq_class(1, 17)).mid().to_double() == 0.0);
  // X_tilde(n,0) = (1) Ai(a1 + c n^{-1/3}) > 0
  for (long n : {2L, 10L, 500L}) CHECK(X_tilde(ctx(), n, 0).definitely_positive());
}

TEST_CASE("X_tilde turns negative for m of order n^{2/3}") {
  long n = 2000;
  long m = static_cast<long>(std::pow(n, 2.0 / 3.0));
  CHECK(X_tilde(ctx(), n, m).definitely_negative());
}

TEST_CASE("X_hat exceeds X_tilde by the quartic term") {
  mpq_class eta(1, 17);
  for (long n : {100L, 500L}) {
    for (long m : {1L, 5L, 20L}) {
      double xh = X_hat(ctx(), n, m, eta).mid().to_double();
      double xt = X_tilde(ctx(), n, m).mid().to_double();
      double ai = ctx().ai_at(n, m).mid().to_double();
      double quartic = (1.0 / 17.0) * std::pow(m, 4) / (double(n) * n) * ai;
      CHECK(xh - xt == Catch::Approx(quartic).epsilon(1e-9));
    }
  }
}

TEST_CASE("certificate verdicts at known points") {
  // deep inside the verified region both inequalities hold
  CHECK(check_lb_inequality(500, 3).verdict == Verdict::Holds);
  CHECK(check_lb_inequality(1000, 0).verdict == Verdict::Holds);
  CHECK(check_ub_inequality(500, 3).verdict == Verdict::Holds);
  CHECK(check_ub_inequality(1000, 40).verdict == Verdict::Holds);
  // the lower-bound certificate genuinely fails at small n, mid-range m
  auto bad = check_lb_inequality(100, 5);
  CHECK(bad.verdict == Verdict::Fails);
  CHECK(bad.margin < 0);
  CHECK(bad.margin == Catch::Approx(-1.87e-4).epsilon(0.05));
}

TEST_CASE("verdicts are precision-stable") {
  for (mpfr_prec_t p : {128L, 192L, 384L}) {
    CHECK(check_lb_inequality(500, 3, p).verdict == Verdict::Holds);
    CHECK(check_lb_inequality(100, 5, p).verdict == Verdict::Fails);
  }
}

TEST_CASE("short scan produces a clean tail and a csv report") {
  std::ostringstream csv;
  auto rep = scan_certificates(600, 610, 0.05, mpq_class(1, 17), 192, &csv);
  CHECK(rep.fails == 0);
  CHECK(rep.inconclusive == 0);
  CHECK(rep.holds == rep.checked);
  CHECK(rep.lb_onset == 600);
  CHECK(rep.ub_onset == 600);
  std::string s = csv.str();
  CHECK(s.rfind("n,m,side,lhs,rhs,margin,verdict\n", 0) == 0);
  CHECK(s.find(",lb,") != std::string::npos);
  CHECK(s.find(",ub,") != std::string::npos);
  CHECK(s.find("holds") != std::string::npos);
  CHECK(s.find("fails") == std::string::npos);
}

TEST_CASE("scan records failures in the early range") {
  auto rep = scan_certificates(100, 102);
  CHECK(rep.fails > 0);
  CHECK_FALSE(rep.all_hold());
  CHECK(rep.lb_onset == -1);  // no clean suffix inside this window
  // both certificate families have genuine violations this early
  bool has_lb = false, has_ub = false, sides_ok = true;
  for (const auto& f : rep.failures) {
    if (f.side == 'l') has_lb = true;
    else if (f.side == 'u') has_ub = true;
    else sides_ok = false;
    CHECK(f.margin < 0);
  }
  CHECK(has_lb);
  CHECK(has_ub);
  CHECK(sides_ok);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(Verdict::Holds)) == "holds");
  CHECK(std::string(to_string(Verdict::Fails)) == "fails");
  CHECK(std::string(to_string(Verdict::Inconclusive)) == "inconclusive");
}
