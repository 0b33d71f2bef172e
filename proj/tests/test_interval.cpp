#include <catch2/catch_amalgamated.hpp>

#include "treechild/interval.hpp"

using namespace treechild;

namespace {
constexpr mpfr_prec_t P = 128;

bool contains(const Interval& iv, double x) {
  return iv.lo.to_double() <= x && x <= iv.hi.to_double();
}
}  // namespace

TEST_CASE("interval construction") {
  auto two = Interval::from_long(2, P);
  CHECK(two.mid().to_double() == 2.0);
  CHECK(two.width().to_double() == 0.0);

  auto q = Interval::from_mpq(mpq_class(1, 3), P);
  CHECK(q.width().to_double() > 0.0);  // 1/3 is not representable
  CHECK(contains(q, 1.0 / 3.0));

  auto z = Interval::from_mpz(mpz_class("123456789012345678901234567890"), P);
  CHECK(z.lo.to_double() <= 1.2345678901234568e29);
  CHECK(z.hi.to_double() >= 1.2345678901234567e29);
}

TEST_CASE("interval arithmetic encloses the exact result") {
  auto a = Interval::from_mpq(mpq_class(1, 3), P);
  auto b = Interval::from_mpq(mpq_class(1, 7), P);
  CHECK(contains(a + b, 1.0 / 3.0 + 1.0 / 7.0));
  CHECK(contains(a - b, 1.0 / 3.0 - 1.0 / 7.0));
  CHECK(contains(a * b, 1.0 / 21.0));
  CHECK(contains(a / b, 7.0 / 3.0));
  CHECK(contains(-a, -1.0 / 3.0));
}

TEST_CASE("interval multiplication handles signs") {
  auto neg = Interval::from_long(-3, P);
  auto pos = Interval::from_long(5, P);
  auto span = neg + pos;  // [2,2]
  CHECK((neg * pos).mid().to_double() == -15.0);
  CHECK((neg * neg).mid().to_double() == 9.0);
  CHECK(contains(span * neg, -6.0));
}

TEST_CASE("division by an interval containing zero throws") {
  auto one = Interval::from_long(1, P);
  auto z = Interval::from_long(1, P) - Interval::from_long(1, P);
  CHECK_THROWS(one / z);
}

TEST_CASE("elementary functions") {
  auto four = Interval::from_long(4, P);
  CHECK(contains(isqrt(four), 2.0));
  auto eight = Interval::from_long(8, P);
  CHECK(contains(icbrt(eight), 2.0));
  auto one = Interval::from_long(1, P);
  CHECK(contains(iexp(one), 2.718281828459045));
  CHECK(contains(ilog(iexp(one)), 1.0));
  CHECK(contains(ipi(P), 3.141592653589793));
  CHECK(contains(ipow_ui(Interval::from_long(3, P), 5), 243.0));
  CHECK(ipow_ui(four, 0).mid().to_double() == 1.0);
}

TEST_CASE("sign predicates") {
  auto pos = Interval::from_long(2, P);
  auto neg = Interval::from_long(-2, P);
  CHECK(pos.definitely_positive());
  CHECK(neg.definitely_negative());
  CHECK_FALSE(pos.contains_zero());
  CHECK((pos + neg).contains_zero());
  CHECK(certainly_le(neg, pos));
  CHECK(certainly_lt(neg, pos));
  CHECK_FALSE(certainly_lt(pos, pos));
  CHECK(certainly_le(pos, pos));
}

TEST_CASE("widened pads both endpoints") {
  auto x = Interval::from_long(1, P);
  BigFloat e(P);
  mpfr_set_d(e.get(), 0.25, MPFR_RNDN);
  auto w = x.widened(e);
  CHECK(w.lo.to_double() <= 0.75);
  CHECK(w.hi.to_double() >= 1.25);
}
