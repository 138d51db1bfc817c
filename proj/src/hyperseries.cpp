#include "supercong/hyperseries.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "supercong/errors.hpp"
#include "supercong/factorial.hpp"

namespace supercong {

namespace {

// A rational parameter shifted by k, converted to a p-adic number without
// touching GMP when numerator and denominator fit in a machine word.
class ShiftedParam {
 public:
  explicit ShiftedParam(const Rational& q) : q_(q) {
    small_ = q.get_num().fits_slong_p() && q.get_den().fits_slong_p();
    if (small_) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
    }
  }

  PadicApprox at(u64 k, const Modulus& m) const {
    if (small_ && k < (std::uint64_t{1} << 31)) {
      const __int128 n = static_cast<__int128>(num_) + static_cast<__int128>(k) * den_;
      if (n > INT64_MIN && n < INT64_MAX) return PadicApprox::from_fraction(m, static_cast<i64>(n), den_);
    }
    return PadicApprox::from_rational(m, q_ + Rational(to_bigint(k)));
  }

 private:
  Rational q_;
  bool small_ = false;
  i64 num_ = 0, den_ = 1;
};

void require_zp(const Rational& q, u64 p, const char* what) {
  if (!in_zp(q, p)) {
    throw NotPAdic(std::string(what) + " " + to_string(q) + " is not in Z_" + std::to_string(p));
  }
}

// Evaluates sum_i c_i k^i exactly in 128 bits.
__int128 poly_at(const std::vector<std::int64_t>& c, std::int64_t k) {
  __int128 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * k + *it;
  return acc;
}

i64 narrow(__int128 v) {
  if (v <= INT64_MIN || v >= INT64_MAX) throw RangeError("weight value does not fit in 64 bits");
  return static_cast<i64>(v);
}

}  // namespace

void SeriesSpec::validate() const {
  if (upper.size() != lower.size() + 1) {
    throw std::invalid_argument("SeriesSpec: need exactly one more upper than lower parameter");
  }
}

std::vector<PadicApprox> pFq_terms_padic(const SeriesSpec& spec, const Modulus& m) {
  spec.validate();
  const u64 p = m.p();
  for (const auto& a : spec.upper) require_zp(a, p, "upper parameter");
  for (const auto& b : spec.lower) require_zp(b, p, "lower parameter");
  require_zp(spec.argument, p, "argument");

  std::vector<ShiftedParam> up, low;
  for (const auto& a : spec.upper) up.emplace_back(a);
  for (const auto& b : spec.lower) low.emplace_back(b);
  low.emplace_back(Rational(1));  // the k! in z^k / k!
  const PadicApprox z = PadicApprox::from_rational(m, spec.argument);

  std::vector<PadicApprox> terms;
  terms.reserve(spec.truncation + 1);
  PadicApprox term = PadicApprox::one(m);
  terms.push_back(term);
  for (u64 k = 0; k < spec.truncation; ++k) {
    if (!term.is_exact_zero()) {
      for (const auto& a : up) term *= a.at(k, m);
    }
    if (!term.is_exact_zero()) {
      for (const auto& b : low) {
        const PadicApprox f = b.at(k, m);
        if (f.is_exact_zero()) {
          throw DivisionByZero("lower Pochhammer vanishes at index " + std::to_string(k + 1));
        }
        term /= f;
      }
      term *= z;
    }
    terms.push_back(term);
  }
  return terms;
}

PadicApprox pFq_term_padic(const SeriesSpec& spec, u64 k, const Modulus& m) {
  spec.validate();
  PadicApprox num = PadicApprox::one(m), den = factorial_padic(k, m);
  for (const auto& a : spec.upper) num *= pochhammer_padic(a, k, m);
  if (num.is_exact_zero()) return num;
  for (const auto& b : spec.lower) den *= pochhammer_padic(b, k, m);
  if (den.is_exact_zero()) throw DivisionByZero("lower Pochhammer vanishes at index " + std::to_string(k));
  require_zp(spec.argument, m.p(), "argument");
  return num / den * PadicApprox::from_rational(m, spec.argument).pow(k);
}

Residue truncated_pFq_padic(const SeriesSpec& spec, const Modulus& m) {
  PadicApprox sum = PadicApprox::zero(m);
  u64 k = 0;
  for (const auto& t : pFq_terms_padic(spec, m)) {
    if (!t.is_exact_zero() && t.valuation() < 0) {
      throw PrecisionLoss("term " + std::to_string(k) + " has p-adic valuation " + std::to_string(t.valuation()));
    }
    sum += t;
    ++k;
  }
  return sum.reduce(m.k());
}

Rational truncated_pFq_exact(const SeriesSpec& spec) {
  spec.validate();
  Rational sum = 1, term = 1;
  for (u64 k = 0; k < spec.truncation; ++k) {
    const Rational kq(to_bigint(k));
    for (const auto& a : spec.upper) term *= a + kq;
    if (term == 0) break;  // every later term carries the same zero factor
    Rational den = kq + 1;
    for (const auto& b : spec.lower) den *= b + kq;
    if (den == 0) throw DivisionByZero("lower Pochhammer vanishes at index " + std::to_string(k + 1));
    term = term * spec.argument / den;
    sum += term;
  }
  return sum;
}

namespace {

struct BinomialSumPlan {
  const BinomialSumSpec& spec;
  const Modulus& m;
  FactorialTable table;
  PadicApprox ratio;

  BinomialSumPlan(const BinomialSumSpec& s, const Modulus& mod, i64 max_row)
      : spec(s), m(mod), table(mod, static_cast<u64>(std::max<i64>(max_row, 0))),
        ratio(PadicApprox::from_rational(mod, s.ratio)) {}

  // sum over first <= k <= last of this block
  PadicApprox block(i64 first, i64 last) const {
    PadicApprox sum = PadicApprox::zero(m);
    if (first > last) return sum;
    PadicApprox power = ratio.pow(static_cast<u64>(first));
    for (i64 k = first; k <= last; ++k) {
      PadicApprox term = power;
      power *= ratio;
      const i64 wn = narrow(poly_at(spec.weight_num, k));
      const i64 wd = narrow(poly_at(spec.weight_den, k));
      if (wd == 0) throw DivisionByZero("weight denominator vanishes at k = " + std::to_string(k));
      term *= PadicApprox::from_fraction(m, wn, wd);
      for (const auto& f : spec.factors) {
        if (term.is_exact_zero()) break;
        const PadicApprox c = table.binomial(f.row_mul * k + f.row_shift, f.col_mul * k + f.col_shift);
        if (f.power >= 0) {
          term *= c;
        } else {
          if (c.is_exact_zero()) throw DivisionByZero("inverted binomial vanishes at k = " + std::to_string(k));
          term /= c;
        }
      }
      sum += term;
    }
    return sum;
  }
};

i64 max_row(const BinomialSumSpec& spec) {
  i64 r = 0;
  for (const auto& f : spec.factors) {
    r = std::max({r, f.row_mul * spec.first + f.row_shift, f.row_mul * spec.last + f.row_shift});
    if (std::min(f.row_mul * spec.first + f.row_shift, f.row_mul * spec.last + f.row_shift) < 0) {
      throw RangeError("binomial row negative inside the summation range");
    }
  }
  return r;
}

}  // namespace

PadicApprox weighted_binomial_sum(const BinomialSumSpec& spec, const Modulus& m) {
  require_zp(spec.ratio, m.p(), "ratio");
  const BinomialSumPlan plan(spec, m, max_row(spec));
  return plan.block(spec.first, spec.last);
}

PadicApprox weighted_binomial_sum_parallel(const BinomialSumSpec& spec, const Modulus& m) {
  require_zp(spec.ratio, m.p(), "ratio");
  const BinomialSumPlan plan(spec, m, max_row(spec));
  const i64 n = spec.last - spec.first + 1;
  if (n <= 0) return PadicApprox::zero(m);
  const i64 blocks = std::clamp<i64>(n / 512, 1, 64);
  std::vector<PadicApprox> partial(static_cast<std::size_t>(blocks), PadicApprox::zero(m));
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (i64 b = 0; b < blocks; ++b) {
    try {
      const i64 lo = spec.first + n * b / blocks;
      const i64 hi = spec.first + n * (b + 1) / blocks - 1;
      partial[static_cast<std::size_t>(b)] = plan.block(lo, hi);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  PadicApprox sum = PadicApprox::zero(m);
  for (const auto& s : partial) sum += s;
  return sum;
}

Rational weighted_binomial_sum_exact(const BinomialSumSpec& spec) {
  Rational sum = 0;
  Rational power = 1;
  for (i64 i = 0; i < spec.first; ++i) power *= spec.ratio;
  for (i64 k = spec.first; k <= spec.last; ++k, power *= spec.ratio) {
    const __int128 wn = poly_at(spec.weight_num, k), wd = poly_at(spec.weight_den, k);
    if (wd == 0) throw DivisionByZero("weight denominator vanishes at k = " + std::to_string(k));
    Rational w(to_bigint(narrow(wn)), to_bigint(narrow(wd)));
    w.canonicalize();  // gmp requires a positive denominator before any arithmetic
    Rational term = power * w;
    for (const auto& f : spec.factors) {
      const i64 row = f.row_mul * k + f.row_shift, col = f.col_mul * k + f.col_shift;
      if (row < 0) throw RangeError("binomial row negative at k = " + std::to_string(k));
      BigInt c = 0;
      if (col >= 0 && col <= row) mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(row), static_cast<unsigned long>(col));
      if (f.power >= 0) {
        term *= Rational(c);
      } else {
        if (c == 0) throw DivisionByZero("inverted binomial vanishes at k = " + std::to_string(k));
        term /= Rational(c);
      }
    }
    sum += term;
  }
  return sum;
}

SuiteReport pochhammer_shift_check(const Rational& alpha, const Rational& t, u64 k_max, const Modulus& m) {
  const u64 p = m.p();
  require_zp(alpha, p, "alpha");
  require_zp(t, p, "t");
  const Modulus m2 = m.with_exponent(2);
  const Residue shifted = Residue::from_rational(m2, alpha + t * Rational(to_bigint(p)));
  const Residue base = Residue::from_rational(m2, alpha);
  const Residue tp = Residue::from_rational(m2, t) * Residue(m2, p);

  // (alpha)_j * sum_{i<j} 1/(alpha+i) is carried as the derivative
  // sum_i prod_{l != i} (alpha+l), which stays p-integral even when p
  // divides some alpha+i.
  CheckResult check("pochhammer shift");
  Residue lhs(m2, 1), poch(m2, 1), deriv(m2, 0);
  for (u64 j = 0;; ++j) {
    check.record(lhs == poch + tp * deriv, [&] { return "j = " + std::to_string(j); });
    if (j == k_max) break;
    const Residue step(m2, j);
    const Residue a = base + step;
    lhs *= shifted + step;
    deriv = deriv * a + poch;
    poch *= a;
  }
  SuiteReport report;
  report.checks.push_back(check);
  return report;
}

}  // namespace supercong
