#include "doctest.h"

#include <cmath>

#include "oracle.hpp"
#include "supercong/errors.hpp"
#include "supercong/identities.hpp"

using namespace supercong;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

mpq_class qpow(const mpq_class& b, long e) {
  mpq_class r = 1;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return e < 0 ? mpq_class(1 / r) : r;
}

// Plain-GMP sum from the statement: weight * prod Pochhammers * z^k.
mpq_class lhs_oracle(const mpq_class& u1, const mpq_class& u2, const mpq_class& l1, const mpq_class& z, long n,
                     long wn0, long wnk, long wd0 = 1, long wdk = 0) {
  mpq_class s = 0;
  for (long k = 0; k <= n; ++k) {
    const mpq_class num = oracle::pochhammer(u1, k) * oracle::pochhammer(u2, k);
    if (num == 0) continue;
    mpq_class w(wn0 + wnk * k, wd0 + wdk * k);
    w.canonicalize();
    s += w * num * qpow(z, k) / (oracle::pochhammer(1, k) * oracle::pochhammer(l1, k));
  }
  return s;
}

}  // namespace

TEST_CASE("stated identity examples") {
  const auto& s48 = identity_family("s48-kernel");
  CHECK(identity_lhs(s48, 0, 0) == 1);
  CHECK(identity_lhs(s48, 1, 0) == q(3, 2));
  CHECK(identity_lhs(identity_family("f98-a"), 1, 0) == q(3, 4));
  CHECK(identity_lhs(identity_family("f98-weighted-a"), 0, 0) == 2);
  CHECK(identity_rhs_ratio(identity_family("f98-a"), 0, 0) == q(3, 4));
}

TEST_CASE("thirteen families hold for n <= 200") {
  CHECK(identity_families().size() == 13);
  for (const auto& f : identity_families()) {
    const CheckResult r = verify_identity_family(f.id, 200);
    INFO(f.id << ": " << r.first_failure);
    CHECK(r.passed());
    CHECK(r.checked >= 200 * static_cast<std::int64_t>(f.deltas.size()));
  }
}

TEST_CASE("summation matches a plain oracle") {
  for (long n = 0; n <= 25; ++n) {
    for (int d : {0, 1}) {
      CHECK(identity_lhs(identity_family("s48-kernel"), n, d) ==
            lhs_oracle(-n, mpq_class(1, 2) - d - n, -4 * n - 2 * d, mpq_class(4, 3), n, 4 * n + 2 * d + 1, -1,
                       2 * n + d + 1, 1));
    }
    CHECK(identity_lhs(identity_family("f98-a"), n, 0) == lhs_oracle(-n, mpq_class(1, 3) - n, -3 * n,
                                                                      mpq_class(9, 8), n, 1, 0));
    CHECK(identity_lhs(identity_family("f89-c"), n, 0) ==
          lhs_oracle(-n, mpq_class(1, 2) - n, -4 * n, mpq_class(8, 9), n, 10 * n + 3, -1));
    CHECK(identity_lhs(identity_family("f43-d"), n, 0) ==
          lhs_oracle(-n, mpq_class(-1, 2) - n, -4 * n - 2, mpq_class(4, 3), n, 2 * n + 2, 1));
  }
}

TEST_CASE("Pochhammer closed forms from an oracle") {
  for (long n = 0; n <= 30; ++n) {
    for (int d : {0, 1}) {
      const long m = 2 * n + d;
      const mpq_class rhs = qpow(mpq_class(3, 4), m) * oracle::pochhammer(1, m) / oracle::pochhammer(mpq_class(1, 2), m);
      CHECK(identity_lhs(identity_family("s48-kernel"), n, d) == rhs);
    }
    CHECK(identity_lhs(identity_family("f98-a"), n, 0) ==
          oracle::pochhammer(mpq_class(1, 2), n) / (qpow(2, n) * oracle::pochhammer(mpq_class(1, 3), n)));
    CHECK(identity_lhs(identity_family("f98-b"), n, 0) ==
          oracle::pochhammer(mpq_class(5, 6), n) / (qpow(2, n) * oracle::pochhammer(mpq_class(2, 3), n)));
    CHECK(identity_lhs(identity_family("f43-a"), n, 0) ==
          qpow(mpq_class(9, 16), n) * oracle::pochhammer(mpq_class(2, 3), 2 * n) /
              oracle::pochhammer(mpq_class(1, 2), 2 * n));
    CHECK(identity_lhs(identity_family("f43-c"), n, 0) ==
          qpow(3, 2 * n + 1) * oracle::pochhammer(mpq_class(1, 3), 2 * n + 1) /
              (qpow(16, n) * oracle::pochhammer(mpq_class(1, 2), 2 * n)));
  }
}

TEST_CASE("closed forms agree numerically") {
  for (const auto& f : identity_families()) {
    for (int d : f.deltas) {
      for (long n = 1; n <= 12; ++n) {
        const double num = identity_rhs_numeric(f, n, d);
        REQUIRE_FALSE(std::isnan(num));
        CHECK(identity_lhs(f, n, d).get_d() == doctest::Approx(num).epsilon(1e-9));
      }
    }
  }
  CHECK(std::isnan(identity_rhs_numeric(identity_family("f89-a"), 0, 0)));
}

TEST_CASE("wrong registrations are caught") {
  IdentityFamily f = identity_family("f98-a");
  f.base_value = {q(2)};
  CheckResult r = verify_identity_family(f, 10);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure.find("n = 0") != std::string::npos);

  f = identity_family("f98-a");
  f.gammas[0].q = q(3, 2);
  CHECK_FALSE(verify_identity_family(f, 10).passed());

  CHECK_THROWS_AS(verify_identity_family("no-such-family", 3), std::invalid_argument);
}

TEST_CASE("printed reading of the weighted z = 4/3 identity fails") {
  const CheckResult r = verify_identity_family("f43-c-printed", 20);
  CHECK_FALSE(r.passed());
  CHECK(r.failed > 20);
  CHECK_FALSE(identity_family("f43-c").note.empty());
  // LHS / printed RHS = (6n+1)/3
  const auto& printed = identity_printed_variants().at(0);
  Rational rhs = printed.base_value[0];
  for (long n = 0; n <= 15; ++n) {
    CHECK(identity_lhs(printed, n, 0) == rhs * q(6 * n + 1, 3));
    rhs *= identity_rhs_ratio(printed, n, 0);
  }
}

TEST_CASE("recurrences") {
  CHECK(recurrences().size() == 7);
  for (const auto& r : recurrences()) {
    const CheckResult c = verify_recurrence(r.id, 200);
    INFO(r.id << ": " << c.first_failure);
    CHECK(c.passed());
    CHECK(c.checked >= 199);
  }
  const auto& s48 = identity_family("s48-kernel");
  CHECK(9 * identity_lhs(s48, 0, 0) - 6 * identity_lhs(s48, 1, 0) == 0);
  // harmonic recurrence at n = 0, t = 2
  const Rational t = 2;
  CHECK(harmonic_lhs(0, t) == 0);
  CHECK(harmonic_lhs(1, t) == -2);
  CHECK(harmonic_lhs(0, t) + 3 * harmonic_lhs(1, t) + 2 * harmonic_lhs(2, t) == -2);
}

TEST_CASE("harmonic identity") {
  const Rational t0 = q(7, 11);
  CHECK(harmonic_lhs(1, t0) == -t0);
  CHECK(harmonic_rhs(1, t0) == -t0);
  for (long n = 0; n <= 10; ++n) {
    CHECK(harmonic_lhs(n, 0) == 0);
    CHECK(harmonic_rhs(n, 0) == 0);
  }
  CHECK(harmonic_lhs(2, 1) == q(-1, 2));
  CHECK(harmonic_rhs(2, 1) == q(-1, 2));

  const CheckResult c = harmonic_sum_identity_check(100, {q(2), q(2), q(-3, 5)});
  CHECK(c.passed());
  // sum over n of max(n+1, 5)
  std::int64_t expected = 0;
  for (long n = 0; n <= 100; ++n) expected += std::max(n + 1, 5L);
  CHECK(c.checked == expected);
}

TEST_CASE("series numeric check") {
  const NumericReport r10 = series_numeric_check(10);
  CHECK(r10.certified);
  CHECK(r10.lhs.substr(0, 12) == r10.rhs.substr(0, 12));
  CHECK(r10.lhs.size() == std::string("5.").size() + 10);

  const NumericReport r25 = series_numeric_check(25);
  CHECK(r25.certified);
  CHECK(r25.lhs.rfind("5.85", 0) == 0);
  CHECK(r25.em_terms > 0);
  // (15/2) * L(2, chi_3) from the trigamma closed form
  const double closed = 7.5 * 0.781302412896486296867187429624;
  CHECK(std::stod(r25.rhs) == doctest::Approx(closed).epsilon(1e-14));

  CHECK(series_numeric_check(60).certified);
  CHECK_THROWS_AS(series_numeric_check(61), PrecisionUnreachable);
  CHECK_THROWS_AS(series_numeric_check(0), PrecisionUnreachable);
}

TEST_CASE("kernel sum: exact and p-adic agree mod p^2") {
  const auto& f = identity_family("s48-kernel");
  for (unsigned long p : oracle::primes_between(5, 99)) {
    const long n = static_cast<long>(p / 4);
    const int d = p % 4 == 1 ? 0 : 1;
    const Rational exact = identity_lhs(f, n, d);
    const std::uint64_t want = oracle::residue(exact, p, 2);
    REQUIRE(want != UINT64_MAX);
    const PadicApprox got = identity_lhs_padic(f, n, d, Modulus(p, 4));
    CHECK(got.reduce(2).value() == want);
  }
}
