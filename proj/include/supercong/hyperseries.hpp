#pragma once

#include <cstdint>
#include <vector>

#include "supercong/check.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// The truncated series
///   sum_{k=0}^{n} (a_0)_k ... (a_r)_k / ((b_1)_k ... (b_r)_k) * z^k / k!
struct SeriesSpec {
  std::vector<Rational> upper;  // a_0 .. a_r
  std::vector<Rational> lower;  // b_1 .. b_r
  Rational argument;            // z
  u64 truncation = 0;           // n

  /// Throws std::invalid_argument unless upper has one more entry than lower.
  void validate() const;
};

/// Terms 0..n built by the ratio term_{k+1}/term_k. Each term keeps its exact
/// valuation; NotPAdic if a parameter or z is outside Z_p, DivisionByZero if
/// a lower Pochhammer vanishes under a nonzero term.
std::vector<PadicApprox> pFq_terms_padic(const SeriesSpec& spec, const Modulus& m);

/// Term k from scratch (independent Pochhammer products), for cross-checks.
PadicApprox pFq_term_padic(const SeriesSpec& spec, u64 k, const Modulus& m);

/// The truncated sum mod p^k. PrecisionLoss if some term has negative
/// valuation (the exact path is needed then).
Residue truncated_pFq_padic(const SeriesSpec& spec, const Modulus& m);

/// Exact rational value. Zero checks go numerator first, so a lower
/// parameter like -4n is fine as long as an upper -n kills the series first.
Rational truncated_pFq_exact(const SeriesSpec& spec);

/// C(row_mul*k + row_shift, col_mul*k + col_shift)^power, power = +1 or -1.
struct BinomialFactor {
  std::int64_t row_mul = 1;
  std::int64_t row_shift = 0;
  std::int64_t col_mul = 1;
  std::int64_t col_shift = 0;
  int power = 1;
};

/// sum_{k=first}^{last} w(k) * prod_i C(...)^{±1} * ratio^k, with
/// w(k) = num(k)/den(k) for integer polynomials given lowest degree first.
struct BinomialSumSpec {
  std::vector<std::int64_t> weight_num{1};
  std::vector<std::int64_t> weight_den{1};
  std::vector<BinomialFactor> factors;
  Rational ratio{1};
  std::int64_t first = 0;
  std::int64_t last = 0;
};

/// The sum as a p-adic number; terms with p in a denominator lower the
/// absolute precision of the result rather than raising. Sequential in k.
PadicApprox weighted_binomial_sum(const BinomialSumSpec& spec, const Modulus& m);

/// Same value, with the k-range split into blocks summed by OpenMP threads
/// and merged in block order.
PadicApprox weighted_binomial_sum_parallel(const BinomialSumSpec& spec, const Modulus& m);

/// Exact rational value. DivisionByZero if a weight denominator or inverted
/// binomial vanishes.
Rational weighted_binomial_sum_exact(const BinomialSumSpec& spec);

/// Checks (alpha + tp)_j ≡ (alpha)_j (1 + tp sum_{i<j} 1/(alpha+i)) (mod p^2)
/// for 0 <= j <= k_max, reading (alpha)_j * sum 1/(alpha+i) as the derivative
/// of (x)_j at alpha so that p | alpha + i is allowed. NotPAdic if alpha or t
/// is outside Z_p.
SuiteReport pochhammer_shift_check(const Rational& alpha, const Rational& t, u64 k_max, const Modulus& m);

}  // namespace supercong
