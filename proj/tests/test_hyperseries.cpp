#include "doctest.h"

#include "oracle.hpp"
#include "supercong/errors.hpp"
#include "supercong/hyperseries.hpp"

using namespace supercong;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

SeriesSpec series(std::vector<Rational> up, std::vector<Rational> low, Rational z, u64 n) {
  return SeriesSpec{std::move(up), std::move(low), std::move(z), n};
}

BinomialFactor binom(std::int64_t rm, std::int64_t rs, std::int64_t cm, std::int64_t cs, int power = 1) {
  return BinomialFactor{rm, rs, cm, cs, power};
}

// Plain-GMP truncated series, term by term from Pochhammer products.
mpq_class series_oracle(const SeriesSpec& s) {
  mpq_class sum = 0;
  for (unsigned long k = 0; k <= s.truncation; ++k) {
    mpq_class t = 1;
    for (const auto& a : s.upper) t *= oracle::pochhammer(a, k);
    if (t == 0) continue;
    mpq_class d = oracle::pochhammer(1, k);
    for (const auto& b : s.lower) d *= oracle::pochhammer(b, k);
    mpq_class z = 1;
    for (unsigned long i = 0; i < k; ++i) z *= s.argument;
    sum += t * z / d;
  }
  return sum;
}

}  // namespace

TEST_CASE("truncated series mod p^k") {
  CHECK(truncated_pFq_padic(series({q(1, 2), q(1, 2)}, {q(1)}, q(1), 4), Modulus(5, 2)).value() == 1);
  CHECK(truncated_pFq_padic(series({q(1, 3), q(2, 3)}, {q(1)}, q(1), 6), Modulus(7, 1)).value() == 1);
  CHECK(truncated_pFq_padic(series({q(7, 3), q(2, 9)}, {q(5)}, q(3, 4), 0), Modulus(11, 3)).value() == 1);
  CHECK_THROWS_AS(truncated_pFq_padic(series({q(1, 5)}, {}, q(1), 3), Modulus(5, 2)), NotPAdic);
  CHECK_THROWS_AS(truncated_pFq_padic(series({q(1, 2)}, {}, q(1, 5), 3), Modulus(5, 2)), NotPAdic);
  // (1)_k / (1/2)_k gets p in the denominator at k = 3 for p = 5
  CHECK_THROWS_AS(truncated_pFq_padic(series({q(1), q(1)}, {q(1, 2)}, q(1), 4), Modulus(5, 2)), PrecisionLoss);
  CHECK_THROWS_AS(series({q(1)}, {q(1)}, q(1), 2).validate(), std::invalid_argument);
}

TEST_CASE("truncated series, exact") {
  CHECK(truncated_pFq_exact(series({q(-1), q(-2, 3)}, {q(-3)}, q(9, 8), 1)) == q(3, 4));
  CHECK(truncated_pFq_exact(series({q(5, 7), q(1, 3)}, {q(2)}, q(9), 0)) == q(1));
  for (long a = 0; a <= 12; ++a) {
    const Rational t = q(3, 7);
    mpq_class expected = 1;
    for (long i = 0; i < a; ++i) expected *= 1 - t;
    CHECK(truncated_pFq_exact(series({q(-a)}, {}, t, 12)) == expected);
  }
  // lower -4n vanishes only past the point where the upper -n zeroes the terms
  CHECK_NOTHROW(truncated_pFq_exact(series({q(-2), q(1, 2) - 2}, {q(-8)}, q(4, 3), 2)));
  CHECK_THROWS_AS(truncated_pFq_exact(series({q(1), q(1)}, {q(-2)}, q(1), 5)), DivisionByZero);
}

TEST_CASE("p-adic and exact series paths agree") {
  oracle::Rng rng(4242);
  const auto primes = oracle::primes_between(5, 100);
  int compared = 0, refused = 0;
  for (int i = 0; i < 100; ++i) {
    const unsigned long p = primes[rng.next() % primes.size()];
    const int k = static_cast<int>(rng.range(1, 3));
    const int r = static_cast<int>(rng.range(0, 2));
    auto draw = [&] {
      long den = rng.range(1, 12);
      if (den % static_cast<long>(p) == 0) den = 1;
      return q(rng.range(-30, 30), den);
    };
    SeriesSpec s;
    for (int j = 0; j <= r; ++j) s.upper.push_back(draw());
    for (int j = 0; j < r; ++j) {
      // positive lower parameters, so no lower Pochhammer is ever zero
      long den = rng.range(1, 6);
      if (den % static_cast<long>(p) == 0) den = 1;
      s.lower.push_back(q(rng.range(1, 40), den));
    }
    s.argument = draw();
    s.truncation = static_cast<u64>(rng.range(0, 30));

    const mpq_class exact = series_oracle(s);
    REQUIRE(truncated_pFq_exact(s) == exact);
    const Modulus m(p, k);
    bool integral = true;
    for (const auto& t : pFq_terms_padic(s, m)) integral = integral && (t.is_exact_zero() || t.valuation() >= 0);
    if (integral) {
      CHECK(truncated_pFq_padic(s, m).value() == oracle::residue(exact, p, k));
      ++compared;
    } else {
      CHECK_THROWS_AS(truncated_pFq_padic(s, m), PrecisionLoss);
      ++refused;
    }
  }
  CHECK(compared > 50);
  MESSAGE("compared ", compared, ", refused ", refused);
}

TEST_CASE("incremental terms match terms computed from scratch") {
  oracle::Rng rng(777);
  const auto primes = oracle::primes_between(5, 60);
  for (int i = 0; i < 50; ++i) {
    const unsigned long p = primes[rng.next() % primes.size()];
    const Modulus m(p, static_cast<int>(rng.range(1, 3)));
    SeriesSpec s;
    const int r = static_cast<int>(rng.range(0, 2));
    for (int j = 0; j <= r; ++j) s.upper.push_back(q(rng.range(-20, 20), rng.range(1, 4)));
    for (int j = 0; j < r; ++j) s.lower.push_back(q(rng.range(1, 20), rng.range(1, 4)));
    s.argument = q(rng.range(-9, 9), rng.range(1, 4));
    s.truncation = static_cast<u64>(rng.range(0, 40));
    const auto terms = pFq_terms_padic(s, m);
    for (u64 k = 0; k <= s.truncation; ++k) REQUIRE(terms[k] == pFq_term_padic(s, k, m));
  }
}

TEST_CASE("weighted binomial sums") {
  BinomialSumSpec thm48;
  thm48.factors = {binom(4, 0, 2, 1), binom(2, 0, 1, 0)};
  thm48.ratio = q(1, 48);
  thm48.last = 4;
  CHECK(weighted_binomial_sum_exact(thm48) == q(100625, 165888));
  const PadicApprox v = weighted_binomial_sum(thm48, Modulus(5, 6));
  CHECK(v.valuation() == 4);
  CHECK(v.unit() == oracle::reduce(mpq_class(100625, 165888), 5, 6).second % 25);
  CHECK(weighted_binomial_sum(thm48, Modulus(5, 2)).reduce(2).value() == 0);

  BinomialSumSpec m1;
  m1.factors = {binom(2, 0, 1, 0), binom(3, 0, 1, 0)};
  m1.ratio = q(1, 24);
  m1.last = 6;
  CHECK(weighted_binomial_sum(m1, Modulus(7, 2)).reduce(2).value() == 6);

  BinomialSumSpec trivial;
  CHECK(weighted_binomial_sum(trivial, Modulus(7, 2)) == PadicApprox::one(Modulus(7, 2)));
  CHECK(weighted_binomial_sum_exact(trivial) == 1);

  BinomialSumSpec empty;
  empty.first = 3;
  empty.last = 2;
  CHECK(weighted_binomial_sum(empty, Modulus(7, 2)).is_exact_zero());
  CHECK(weighted_binomial_sum_exact(empty) == 0);

  BinomialSumSpec bad_den;
  bad_den.weight_den = {-2, 1};  // 1/(k-2)
  bad_den.last = 3;
  CHECK_THROWS_AS(weighted_binomial_sum(bad_den, Modulus(7, 2)), DivisionByZero);
  CHECK_THROWS_AS(weighted_binomial_sum_exact(bad_den), DivisionByZero);
}

TEST_CASE("binomial sums agree with their hypergeometric forms") {
  struct Pair {
    BinomialSumSpec sum;
    SeriesSpec ser;
    Rational scale;
  };
  const BinomialFactor c2 = binom(2, 0, 1, 0), c3 = binom(3, 0, 1, 0), c42 = binom(4, 0, 2, 0);
  std::vector<Pair> pairs = {
      {{{1}, {1}, {c2, c3}, q(1, 24)}, series({q(1, 3), q(2, 3)}, {q(1)}, q(9, 8), 0), q(1)},
      {{{1, 1}, {1}, {c2, c3}, q(1, 24)}, series({q(1, 3), q(2, 3), q(2)}, {q(1), q(1)}, q(9, 8), 0), q(1)},
      {{{1}, {1}, {c2, c42}, q(1, 48)}, series({q(1, 4), q(3, 4)}, {q(1)}, q(4, 3), 0), q(1)},
      {{{1, 2}, {1}, {c2, c42}, q(1, 48)}, series({q(1, 4), q(3, 4), q(3, 2)}, {q(1), q(1, 2)}, q(4, 3), 0), q(1)},
      {{{1}, {1}, {c2, c42}, q(1, 72)}, series({q(1, 4), q(3, 4)}, {q(1)}, q(8, 9), 0), q(1)},
      {{{-1, 2}, {1}, {c2, c42}, q(1, 72)}, series({q(1, 4), q(3, 4), q(1, 2)}, {q(1), q(-1, 2)}, q(8, 9), 0), q(-1)},
      {{{1}, {1}, {c2, c2, c3}, q(-1, 192)}, series({q(1, 2), q(1, 3), q(2, 3)}, {q(1), q(1)}, q(-9, 16), 0), q(1)},
      {{{1}, {1}, {c2, c2, c42}, q(-1, 144)}, series({q(1, 2), q(1, 4), q(3, 4)}, {q(1), q(1)}, q(-16, 9), 0), q(1)},
  };
  for (auto& pr : pairs) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      pr.sum.last = n;
      pr.ser.truncation = static_cast<u64>(n);
      REQUIRE(weighted_binomial_sum_exact(pr.sum) == pr.scale * truncated_pFq_exact(pr.ser));
    }
  }
  // C(4k, 2k+1) = C(4k, 2k) * 2k/(2k+1)
  for (std::int64_t n = 0; n <= 30; ++n) {
    const BinomialSumSpec a{{1}, {1}, {binom(4, 0, 2, 1), c2}, q(1, 48), 0, n};
    const BinomialSumSpec b{{0, 2}, {1, 2}, {c42, c2}, q(1, 48), 0, n};
    REQUIRE(weighted_binomial_sum_exact(a) == weighted_binomial_sum_exact(b));
  }
}

TEST_CASE("p-adic binomial sums agree with the exact oracle") {
  oracle::Rng rng(31337);
  const auto primes = oracle::primes_between(5, 80);
  for (int i = 0; i < 100; ++i) {
    const unsigned long p = primes[rng.next() % primes.size()];
    const int k = static_cast<int>(rng.range(1, 3));
    BinomialSumSpec s;
    s.weight_num = {rng.range(-5, 5), rng.range(-3, 3)};
    s.weight_den = {rng.range(1, 4), rng.range(0, 2)};
    const int nf = static_cast<int>(rng.range(1, 3));
    for (int j = 0; j < nf; ++j) s.factors.push_back(binom(rng.range(1, 4), rng.range(0, 2), 1, rng.range(0, 1)));
    long den = rng.range(1, 200);
    if (den % static_cast<long>(p) == 0) den += 1;
    s.ratio = q(rng.range(-5, 5), den);
    s.last = rng.range(0, static_cast<long>(p) * 2);

    const mpq_class exact = weighted_binomial_sum_exact(s);
    const Modulus m(p, k);
    const PadicApprox got = weighted_binomial_sum(s, m);
    REQUIRE(got == weighted_binomial_sum_parallel(s, m));
    if (exact == 0) {
      CHECK((got.is_exact_zero() || got.is_vanishing() || got.valuation() >= k));
      continue;
    }
    const int v_exact = oracle::reduce(exact, p, k).first;
    if (got.is_vanishing()) {
      CHECK(v_exact >= got.valuation());
    } else {
      // p-adic value agrees with the exact one to its absolute precision
      CHECK(got.valuation() == v_exact);
      const auto [v, u] = oracle::reduce(exact, p, got.precision());
      CHECK(got.unit() == u);
    }
  }
}

TEST_CASE("serial and parallel binomial sums coincide on long ranges") {
  const BinomialFactor c2 = binom(2, 0, 1, 0), c42 = binom(4, 0, 2, 0);
  for (unsigned long p : {997ul, 1009ul, 4999ul}) {
    const BinomialSumSpec s{{1, 1}, {1}, {c2, c42}, q(1, 48), 0, static_cast<std::int64_t>(p) - 1};
    const Modulus m(p, 3);
    CHECK(weighted_binomial_sum(s, m) == weighted_binomial_sum_parallel(s, m));
  }
}

TEST_CASE("Pochhammer shift congruence") {
  CHECK(pochhammer_shift_check(q(1, 3), q(1), 6, Modulus(7, 2)).passed());
  CHECK(pochhammer_shift_check(q(1), q(2), 4, Modulus(5, 2)).passed());
  const auto r = pochhammer_shift_check(q(2, 5), q(0), 10, Modulus(11, 2));
  CHECK(r.passed());
  CHECK(r.checks[0].checked == 11);
  CHECK_THROWS_AS(pochhammer_shift_check(q(1, 7), q(1), 3, Modulus(7, 2)), NotPAdic);
  CHECK_THROWS_AS(pochhammer_shift_check(q(1, 3), q(1, 7), 3, Modulus(7, 2)), NotPAdic);
  for (unsigned long p : oracle::primes_between(5, 200)) {
    for (long den : {2l, 3l, 4l, 6l}) {
      const auto r = pochhammer_shift_check(q(1, den), q(-7, 3), 2 * p, Modulus(p, 2));
      CHECK(r.passed());
      CHECK(r.checks[0].checked == 2 * p + 1);
    }
  }
}
