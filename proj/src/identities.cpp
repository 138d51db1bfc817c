#include "supercong/identities.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "supercong/errors.hpp"

namespace supercong {

Rational Param::at(std::int64_t n, int delta) const {
  return q + Rational(to_bigint(cn * n + cd * delta));
}

namespace {

Rational big(std::int64_t v) { return Rational(to_bigint(v)); }
Rational frac(std::int64_t a, std::int64_t b) { return make_rational(a, b); }

const double kSqrtPi = std::sqrt(std::numbers::pi);

std::vector<IdentityFamily> build_families() {
  const Param minus_n{0, -1};
  const Param half_minus_n{frac(1, 2), -1};
  const Param neg_half_minus_n{frac(-1, 2), -1};
  const Param minus_4n{0, -4};
  const Param minus_4n_2{-2, -4};
  const double g13 = std::tgamma(1.0 / 3), g23 = std::tgamma(2.0 / 3), g56 = std::tgamma(5.0 / 6);

  std::vector<IdentityFamily> out;
  {
    IdentityFamily f;
    f.id = "s48-kernel";
    f.statement =
        "sum_k (4n+2d-k+1)(-n)_k(1/2-d-n)_k / ((2n+d+k+1)(1)_k(-4n-2d)_k) (4/3)^k"
        " = (3/4)^(2n+d) G(1/2)G(2n+1+d)/G(2n+d+1/2), d in {0,1}";
    f.deltas = {0, 1};
    f.upper = {minus_n, Param{frac(1, 2), -1, -1}};
    f.lower = {Param{0, -4, -2}};
    f.z = frac(4, 3);
    f.weight_num = {1, 4, 2, -1};
    f.weight_den = {1, 2, 1, 1};
    f.constant = kSqrtPi;
    f.powers = {{frac(3, 4), 2, 0, 1}};
    f.gammas = {{2, 1, 1, 1}, {2, frac(1, 2), 1, -1}};
    f.base_value = {1, frac(3, 2)};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f98-a";
    f.statement = "2F1[-n, 1/3-n; -3n | 9/8]_n = (1/2)_n / (2^n (1/3)_n)";
    f.upper = {minus_n, Param{frac(1, 3), -1}};
    f.lower = {Param{0, -3}};
    f.z = frac(9, 8);
    f.constant = g13 / kSqrtPi;
    f.powers = {{2, -1, 0}};
    f.gammas = {{1, frac(1, 2), 0, 1}, {1, frac(1, 3), 0, -1}};
    f.base_value = {1};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f98-b";
    f.statement = "2F1[-n, -1/3-n; -3n-1 | 9/8]_n = (5/6)_n / (2^n (2/3)_n)";
    f.upper = {minus_n, Param{frac(-1, 3), -1}};
    f.lower = {Param{-1, -3}};
    f.z = frac(9, 8);
    f.constant = g23 / g56;
    f.powers = {{2, -1, 0}};
    f.gammas = {{1, frac(5, 6), 0, 1}, {1, frac(2, 3), 0, -1}};
    f.base_value = {1};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f98-weighted-a";
    f.statement =
        "sum_k (3n+k+2)(-n)_k(1/3-n)_k/((1)_k(-3n)_k) (9/8)^k"
        " = 3*2^(4/3-n) G(2/3)G(7/6+n)/(G(1/2)G(1/3+n))";
    f.upper = {minus_n, Param{frac(1, 3), -1}};
    f.lower = {Param{0, -3}};
    f.z = frac(9, 8);
    f.weight_num = {2, 3, 0, 1};
    f.constant = 3 * g23 / kSqrtPi;
    f.powers = {{2, -1, frac(4, 3)}};
    f.gammas = {{1, frac(7, 6), 0, 1}, {1, frac(1, 3), 0, -1}};
    f.base_value = {2};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f98-weighted-b";
    f.statement =
        "sum_k (3n+k+3)(-n)_k(-1/3-n)_k/((1)_k(-3n-1)_k) (9/8)^k"
        " = 3*2^(1-n) G(2/3)G(3/2+n)/(G(1/2)G(2/3+n))";
    f.upper = {minus_n, Param{frac(-1, 3), -1}};
    f.lower = {Param{-1, -3}};
    f.z = frac(9, 8);
    f.weight_num = {3, 3, 0, 1};
    f.constant = 3 * g23 / kSqrtPi;
    f.powers = {{2, -1, 1}};
    f.gammas = {{1, frac(3, 2), 0, 1}, {1, frac(2, 3), 0, -1}};
    f.base_value = {3};
    out.push_back(f);
  }
  // z = 4/3 family
  {
    IdentityFamily f;
    f.id = "f43-a";
    f.statement = "sum_k (-n)_k(1/2-n)_k/((1)_k(-4n)_k) (4/3)^k = (9/16)^n (2/3)_{2n}/(1/2)_{2n}";
    f.upper = {minus_n, half_minus_n};
    f.lower = {minus_4n};
    f.z = frac(4, 3);
    f.constant = kSqrtPi / g23;
    f.powers = {{frac(9, 16), 1, 0}};
    f.gammas = {{2, frac(2, 3), 0, 1}, {2, frac(1, 2), 0, -1}};
    f.base_value = {1};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f43-b";
    f.statement =
        "sum_k (-n)_k(-1/2-n)_k/((1)_k(-4n-2)_k) (4/3)^k = (3/4)^(2n+1) (2/3)_{2n+1}/(1/2)_{2n+1}";
    f.upper = {minus_n, neg_half_minus_n};
    f.lower = {minus_4n_2};
    f.z = frac(4, 3);
    f.constant = kSqrtPi / g23;
    f.powers = {{frac(3, 4), 2, 1}};
    f.gammas = {{2, frac(5, 3), 0, 1}, {2, frac(3, 2), 0, -1}};
    f.base_value = {1};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f43-c";
    f.statement =
        "sum_k (2n+k+1)(-n)_k(1/2-n)_k/((1)_k(-4n)_k) (4/3)^k = 3^(2n+1) (1/3)_{2n+1}/(16^n (1/2)_{2n})";
    f.upper = {minus_n, half_minus_n};
    f.lower = {minus_4n};
    f.z = frac(4, 3);
    f.weight_num = {1, 2, 0, 1};
    f.constant = kSqrtPi / g13;
    f.powers = {{3, 2, 1}, {16, -1, 0}};
    f.gammas = {{2, frac(4, 3), 0, 1}, {2, frac(1, 2), 0, -1}};
    f.base_value = {1};
    f.note =
        "source prints (1/3)_{2n} in the numerator; that reading fails at n = 0 (1 vs 3) and is off by "
        "(6n+1)/3 for every n; (1/3)_{2n+1} holds";
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f43-d";
    f.statement =
        "sum_k (2n+k+2)(-n)_k(-1/2-n)_k/((1)_k(-4n-2)_k) (4/3)^k"
        " = 9^(n+1) (1/3)_{2n+2}/(4^(2n+1) (1/2)_{2n+1})";
    f.upper = {minus_n, neg_half_minus_n};
    f.lower = {minus_4n_2};
    f.z = frac(4, 3);
    f.weight_num = {2, 2, 0, 1};
    f.constant = kSqrtPi / g13;
    f.powers = {{9, 1, 1}, {4, -2, -1}};
    f.gammas = {{2, frac(7, 3), 0, 1}, {2, frac(3, 2), 0, -1}};
    f.base_value = {2};
    out.push_back(f);
  }
  // z = 8/9 family
  {
    IdentityFamily f;
    f.id = "f89-a";
    f.statement = "sum_k (-n)_k(1/2-n)_k/((1)_k(-4n)_k) (8/9)^k = G(1/2)G(3n)/(3^(2n-1) G(2n+1/2) G(n))";
    f.upper = {minus_n, half_minus_n};
    f.lower = {minus_4n};
    f.z = frac(8, 9);
    f.constant = kSqrtPi;
    f.powers = {{3, -2, 1}};
    f.gammas = {{3, 0, 0, 1}, {2, frac(1, 2), 0, -1}, {1, 0, 0, -1}};
    // G(3n)/G(n) has poles at n = 0; its limit there is 1/3, giving RHS(0) = 1
    f.base_n = 1;
    f.base_value = {frac(8, 9)};
    f.limit_values = {{0, 1}};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f89-b";
    f.statement =
        "sum_k (-n)_k(-1/2-n)_k/((1)_k(-4n-2)_k) (8/9)^k = 3^(n+1) G(n+5/6)G(n+7/6)/(2 G(1/2) G(2n+3/2))";
    f.upper = {minus_n, neg_half_minus_n};
    f.lower = {minus_4n_2};
    f.z = frac(8, 9);
    f.constant = 1 / (2 * kSqrtPi);
    f.powers = {{3, 1, 1}};
    f.gammas = {{1, frac(5, 6), 0, 1}, {1, frac(7, 6), 0, 1}, {2, frac(3, 2), 0, -1}};
    f.base_value = {1};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f89-c";
    f.statement =
        "sum_k (10n-k+3)(-n)_k(1/2-n)_k/((1)_k(-4n)_k) (8/9)^k = 3^(n+2) G(n+5/6)G(n+7/6)/(G(1/2) G(2n+1/2))";
    f.upper = {minus_n, half_minus_n};
    f.lower = {minus_4n};
    f.z = frac(8, 9);
    f.weight_num = {3, 10, 0, -1};
    f.constant = 1 / kSqrtPi;
    f.powers = {{3, 1, 2}};
    f.gammas = {{1, frac(5, 6), 0, 1}, {1, frac(7, 6), 0, 1}, {2, frac(1, 2), 0, -1}};
    f.base_value = {3};
    out.push_back(f);
  }
  {
    IdentityFamily f;
    f.id = "f89-d";
    f.statement =
        "sum_k (10n-k+8)(-n)_k(-1/2-n)_k/((1)_k(-4n-2)_k) (8/9)^k = 2 G(1/2)G(3n+3)/(9^n G(2n+3/2) G(n+1))";
    f.upper = {minus_n, neg_half_minus_n};
    f.lower = {minus_4n_2};
    f.z = frac(8, 9);
    f.weight_num = {8, 10, 0, -1};
    f.constant = 2 * kSqrtPi;
    f.powers = {{9, -1, 0}};
    f.gammas = {{3, 3, 0, 1}, {2, frac(3, 2), 0, -1}, {1, 1, 0, -1}};
    f.base_value = {8};
    out.push_back(f);
  }
  return out;
}

}  // namespace

const std::vector<IdentityFamily>& identity_families() {
  static const std::vector<IdentityFamily> families = build_families();
  return families;
}

const std::vector<IdentityFamily>& identity_printed_variants() {
  static const std::vector<IdentityFamily> variants = [] {
    IdentityFamily f = identity_family("f43-c");
    f.id = "f43-c-printed";
    f.statement =
        "sum_k (2n+k+1)(-n)_k(1/2-n)_k/((1)_k(-4n)_k) (4/3)^k = 3^(2n+1) (1/3)_{2n}/(16^n (1/2)_{2n})";
    f.gammas = {{2, frac(1, 3), 0, 1}, {2, frac(1, 2), 0, -1}};
    f.base_value = {3};
    f.note = "printed reading of f43-c; expected to fail";
    return std::vector<IdentityFamily>{f};
  }();
  return variants;
}

const IdentityFamily& identity_family(const std::string& id) {
  for (const auto& f : identity_families()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown identity family: " + id);
}

Rational identity_lhs(const IdentityFamily& f, std::int64_t n, int delta) {
  Rational sum = 0, h = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      const Rational km1 = big(k - 1);
      // numerator first: once an upper Pochhammer hits zero the sum is done
      for (const auto& u : f.upper) h *= u.at(n, delta) + km1;
      if (h == 0) break;
      Rational den = big(k);
      for (const auto& l : f.lower) den *= l.at(n, delta) + km1;
      if (den == 0) {
        throw DivisionByZero(f.id + ": lower Pochhammer vanishes at n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
      }
      h = h * f.z / den;
    }
    const std::int64_t wd = f.weight_den.at(n, delta, k);
    if (wd <= 0) throw DivisionByZero(f.id + ": weight denominator is not positive at k = " + std::to_string(k));
    sum += h * frac(f.weight_num.at(n, delta, k), wd);
  }
  return sum;
}

PadicApprox identity_lhs_padic(const IdentityFamily& f, std::int64_t n, int delta, const Modulus& m) {
  PadicApprox sum = PadicApprox::zero(m), h = PadicApprox::one(m);
  const PadicApprox z = PadicApprox::from_rational(m, f.z);
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      const Rational km1 = big(k - 1);
      for (const auto& u : f.upper) h *= PadicApprox::from_rational(m, u.at(n, delta) + km1);
      if (h.is_exact_zero()) break;
      PadicApprox den = PadicApprox::from_int(m, k);
      for (const auto& l : f.lower) den *= PadicApprox::from_rational(m, l.at(n, delta) + km1);
      if (den.is_exact_zero()) throw DivisionByZero(f.id + ": lower Pochhammer vanishes");
      h = h * z / den;
    }
    sum += h * PadicApprox::from_fraction(m, f.weight_num.at(n, delta, k), f.weight_den.at(n, delta, k));
  }
  return sum;
}

Rational identity_rhs_ratio(const IdentityFamily& f, std::int64_t n, int delta) {
  Rational r = 1;
  for (const auto& pw : f.powers) {
    const std::int64_t e = pw.en;
    for (std::int64_t i = 0; i < std::abs(e); ++i) r = e > 0 ? Rational(r * pw.base) : Rational(r / pw.base);
  }
  for (const auto& g : f.gammas) {
    // Gamma(x + mul) / Gamma(x) = (x)_mul
    const Rational x = Rational(to_bigint(g.mul * n + g.cd * delta)) + g.q;
    Rational rising = 1;
    for (std::int64_t i = 0; i < g.mul; ++i) rising *= x + big(i);
    if (rising == 0) {
      throw DivisionByZero(f.id + ": Gamma ratio undefined at n = " + std::to_string(n));
    }
    r = g.power > 0 ? Rational(r * rising) : Rational(r / rising);
  }
  return r;
}

double identity_rhs_numeric(const IdentityFamily& f, std::int64_t n, int delta) {
  long double v = f.constant;
  for (const auto& pw : f.powers) {
    const long double e = static_cast<long double>(pw.en * n + pw.ed * delta) + pw.e0.get_d();
    v *= std::pow(static_cast<long double>(pw.base.get_d()), e);
  }
  for (const auto& g : f.gammas) {
    const long double x = static_cast<long double>(g.mul * n + g.cd * delta) + g.q.get_d();
    if (x <= 0 && std::floor(x) == x) return std::nan("");
    const long double gx = std::tgamma(x);
    v = g.power > 0 ? v * gx : v / gx;
  }
  return static_cast<double>(v);
}

CheckResult verify_identity_family(const std::string& id, std::int64_t n_max) {
  for (const auto& v : identity_printed_variants()) {
    if (v.id == id) return verify_identity_family(v, n_max);
  }
  return verify_identity_family(identity_family(id), n_max);
}

CheckResult verify_identity_family(const IdentityFamily& f, std::int64_t n_max) {
  CheckResult check(f.id);
  for (std::size_t di = 0; di < f.deltas.size(); ++di) {
    const int delta = f.deltas[di];
    const std::string tag = f.deltas.size() > 1 ? ", delta = " + std::to_string(delta) : "";

    for (const auto& [n, value] : f.limit_values) {
      const Rational lhs = identity_lhs(f, n, delta);
      check.record(lhs == value, [&] { return "limit value at n = " + std::to_string(n) + tag; });
    }

    // anchor: registered base value, summed LHS and the closed form agree
    const Rational base = f.base_value.at(di);
    for (std::int64_t n = f.base_n; n <= f.base_n + 5; ++n) {
      const double num = identity_rhs_numeric(f, n, delta);
      if (std::isnan(num)) continue;
      const double lhs = identity_lhs(f, n, delta).get_d();
      check.record(std::abs(lhs - num) <= 1e-9 * std::max(1.0, std::abs(num)), [&] {
        return "closed form at n = " + std::to_string(n) + tag + ": numeric " + std::to_string(num) +
               " vs sum " + std::to_string(lhs);
      });
    }

    Rational rhs = base;
    for (std::int64_t n = f.base_n; n <= n_max; ++n) {
      const Rational lhs = identity_lhs(f, n, delta);
      check.record(lhs == rhs, [&] {
        return "n = " + std::to_string(n) + tag + ": lhs " + to_string(lhs) + ", rhs " + to_string(rhs);
      });
      if (n < n_max) rhs *= identity_rhs_ratio(f, n, delta);
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// recurrences

Rational harmonic_lhs(std::int64_t n, const Rational& t) {
  // (-n)_k / k! = (-1)^k C(n, k)
  Rational sum = 0, c = 1, tk = 1, h = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      c = c * big(k - 1 - n) / big(k);
      tk *= t;
      h += frac(1, k);
    }
    sum += c * tk * h;
  }
  return sum;
}

Rational harmonic_rhs(std::int64_t n, const Rational& t) {
  const Rational u = 1 - t;
  // powers of (1 - t) from 0 to n
  std::vector<Rational> pw(static_cast<std::size_t>(n) + 1);
  pw[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) pw[i] = pw[i - 1] * u;
  Rational h = 0, tail = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    h += frac(1, k);
    tail += pw[n - k] / big(k);
  }
  return pw[n] * h - tail;
}

namespace {

std::vector<Rational> recurrence_t_samples() { return {frac(2, 1), frac(-1, 1), frac(1, 3), frac(5, 7), frac(-9, 4)}; }

Recurrence first_order(const std::string& family, std::string statement, int delta,
                       std::function<std::vector<Rational>(std::int64_t, const Rational&)> coeffs) {
  Recurrence r;
  r.id = family + (identity_family(family).deltas.size() > 1 ? "-d" + std::to_string(delta) : "");
  r.statement = std::move(statement);
  r.coefficients = std::move(coeffs);
  r.rhs = [](std::int64_t, const Rational&) { return Rational(0); };
  r.sum = [family](std::int64_t n, const Rational& d) {
    return identity_lhs(identity_family(family), n, static_cast<int>(d.get_num().get_si()));
  };
  r.params = {big(delta)};
  return r;
}

std::vector<Recurrence> build_recurrences() {
  std::vector<Recurrence> out;
  for (int delta : {0, 1}) {
    out.push_back(first_order("s48-kernel", "9(n+1)(2n+2d+1)S(n) - 2(4n+2d+1)(4n+2d+3)S(n+1) = 0", delta,
                              [](std::int64_t n, const Rational& d) {
                                const Rational nn = big(n);
                                return std::vector<Rational>{9 * (nn + 1) * (2 * nn + 2 * d + 1),
                                                             -2 * (4 * nn + 2 * d + 1) * (4 * nn + 2 * d + 3)};
                              }));
  }
  out.push_back(first_order("f98-a", "-3(2n+1)F(n) + 4(3n+1)F(n+1) = 0", 0, [](std::int64_t n, const Rational&) {
    return std::vector<Rational>{big(-3 * (2 * n + 1)), big(4 * (3 * n + 1))};
  }));
  out.push_back(first_order("f98-b", "-(6n+5)G(n) + 4(3n+2)G(n+1) = 0", 0, [](std::int64_t n, const Rational&) {
    return std::vector<Rational>{big(-(6 * n + 5)), big(4 * (3 * n + 2))};
  }));
  out.push_back(
      first_order("f98-weighted-a", "(6n+7)J(n) - 4(3n+1)J(n+1) = 0", 0, [](std::int64_t n, const Rational&) {
        return std::vector<Rational>{big(6 * n + 7), big(-4 * (3 * n + 1))};
      }));
  out.push_back(
      first_order("f98-weighted-b", "3(2n+3)K(n) - 4(3n+2)K(n+1) = 0", 0, [](std::int64_t n, const Rational&) {
        return std::vector<Rational>{big(3 * (2 * n + 3)), big(-4 * (3 * n + 2))};
      }));
  {
    Recurrence r;
    r.id = "harmonic-1f0";
    r.statement = "(n+1)(t-1)^2 S_n + (2n+3)(t-1) S_{n+1} + (n+2) S_{n+2} = -t";
    r.coefficients = [](std::int64_t n, const Rational& t) {
      const Rational nn = big(n), u = t - 1;
      return std::vector<Rational>{(nn + 1) * u * u, (2 * nn + 3) * u, nn + 2};
    };
    r.rhs = [](std::int64_t, const Rational& t) { return Rational(-t); };
    r.sum = [](std::int64_t n, const Rational& t) { return harmonic_lhs(n, t); };
    r.params = recurrence_t_samples();
    out.push_back(r);
  }
  return out;
}

}  // namespace

const std::vector<Recurrence>& recurrences() {
  static const std::vector<Recurrence> all = build_recurrences();
  return all;
}

CheckResult verify_recurrence(const std::string& id, std::int64_t n_max) {
  const Recurrence* rec = nullptr;
  for (const auto& r : recurrences()) {
    if (r.id == id) rec = &r;
  }
  if (rec == nullptr) throw std::invalid_argument("unknown recurrence: " + id);
  CheckResult check(id);
  for (const auto& param : rec->params) {
    // S(0..n_max), each summed directly
    std::vector<Rational> s;
    for (std::int64_t n = 0; n <= n_max; ++n) s.push_back(rec->sum(n, param));
    for (std::int64_t n = 0;; ++n) {
      const auto c = rec->coefficients(n, param);
      const auto order = static_cast<std::int64_t>(c.size()) - 1;
      if (n + order > n_max) break;
      Rational acc = 0;
      for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * s[n + static_cast<std::int64_t>(i)];
      const Rational expected = rec->rhs(n, param);
      check.record(acc == expected, [&] {
        return "n = " + std::to_string(n) + ", parameter " + to_string(param) + ": got " + to_string(acc);
      });
    }
  }
  return check;
}

CheckResult harmonic_sum_identity_check(std::int64_t n_max, const std::vector<Rational>& t_samples) {
  CheckResult check("harmonic-1f0");
  std::vector<Rational> ts;
  for (const auto& t : t_samples) {
    bool seen = false;
    for (const auto& u : ts) seen = seen || u == t;
    if (!seen) ts.push_back(t);
  }
  for (std::int64_t i = 0; static_cast<std::int64_t>(ts.size()) < std::max<std::int64_t>(n_max + 1, 5); ++i) {
    // fallback points (i+2)/(i+3) are pairwise distinct
    const Rational t = frac(i + 2, i + 3);
    bool seen = false;
    for (const auto& u : ts) seen = seen || u == t;
    if (!seen) ts.push_back(t);
  }
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const std::int64_t points = std::max<std::int64_t>(n + 1, 5);
    for (std::int64_t j = 0; j < points; ++j) {
      const Rational& t = ts[j];
      check.record(harmonic_lhs(n, t) == harmonic_rhs(n, t),
                   [&] { return "n = " + std::to_string(n) + ", t = " + to_string(t); });
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// numeric series check

namespace {

constexpr int kGuardDigits = 12;
constexpr std::int64_t kRhsPairs = 400;
constexpr int kMaxEmTerms = 80;

BigInt pow10(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// x = value * 10^-(digits + guard), printed truncated to `digits` places.
std::string fixed_string(BigInt x, int digits) {
  const bool negative = x < 0;
  if (negative) x = -x;
  x /= pow10(kGuardDigits);
  std::string s = x.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return negative ? "-" + s : s;
}

std::string scientific(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", q.get_d());
  return buf;
}

// B_0 .. B_n exactly, B_1 = -1/2.
std::vector<Rational> bernoulli_exact(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    BigInt c = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += Rational(c) * b[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
  }
  return b;
}

// Hurwitz zeta(2, x) for x > 0 by Euler-Maclaurin. Each correction B_2i/x^(2i+1);
// the remainder is bounded by twice the first omitted term. Returns
// (value, remainder bound, corrections used).
struct EmResult {
  Rational value, bound;
  int terms = 0;
};

EmResult hurwitz_zeta2(const Rational& x, const Rational& target, const std::vector<Rational>& bern) {
  EmResult r;
  r.value = 1 / x + 1 / (2 * x * x);
  const Rational x2 = x * x;
  Rational xp = x2 * x;  // x^(2i+1)
  for (int i = 1; 2 * i + 2 < static_cast<int>(bern.size()); ++i) {
    const Rational next = abs(bern[2 * i + 2]) / (xp * x2);
    r.value += bern[2 * i] / xp;
    r.terms = i;
    if (2 * next < target) {
      r.bound = 2 * next;
      return r;
    }
    xp *= x2;
  }
  throw PrecisionUnreachable("series: Euler-Maclaurin tail did not converge within " +
                             std::to_string(kMaxEmTerms) + " corrections");
}

}  // namespace

NumericReport series_numeric_check(int digits) {
  if (digits < 1 || digits > 60) {
    throw PrecisionUnreachable("series: digits must be in 1..60, got " + std::to_string(digits));
  }
  NumericReport rep;
  rep.digits = digits;
  const int scale_digits = digits + kGuardDigits;
  const BigInt scale = pow10(scale_digits);
  const Rational ulp(BigInt(1), scale);
  const Rational target = Rational(BigInt(1), pow10(digits)) / 1000;

  // LHS: t_1 = 4, t_{k+1} = t_k P(k)/Q(k). Fixed-point terms T_k satisfy
  // T_k <= t_k <= T_k + 5 ulp because P/Q <= 4/5 and each floor loses < 1 ulp.
  rep.ratio_certificate =
      "t_{k+1}/t_k = P/Q, P = 12k(2k-1)(k+1), Q = (2k+1)(4k+1)(4k+3); "
      "4Q - 5P = 8k^3 + 132k^2 + 148k + 12 > 0 for k >= 1, so the tail after t_K is at most 4 t_K";
  const std::int64_t cap = 200LL * digits + 1000;
  BigInt term = 4 * scale, lhs = 0;
  std::int64_t k = 1;
  for (;; ++k) {
    lhs += term;
    if (term == 0) break;
    if (k >= cap) throw PrecisionUnreachable("series: LHS iteration cap reached");
    const BigInt kk = to_bigint(k);
    const BigInt p = 12 * kk * (2 * kk - 1) * (kk + 1);
    const BigInt q = (2 * kk + 1) * (4 * kk + 1) * (4 * kk + 3);
    term = floor_div(term * p, q);
  }
  rep.lhs_terms = k;
  // rounding: 5 ulp per term; tail after the last (zero) fixed-point term: 4 * 5 ulp
  const Rational lhs_err = ulp * Rational(to_bigint(5 * k + 20));

  // RHS: (15/2) sum_{m>=0} [1/(3m+1)^2 - 1/(3m+2)^2], N pairs summed directly,
  // the rest as (1/9)[zeta(2, N+1/3) - zeta(2, N+2/3)].
  BigInt pairs = 0;
  for (std::int64_t m = 0; m < kRhsPairs; ++m) {
    const BigInt a = to_bigint(3 * m + 1), b = to_bigint(3 * m + 2);
    pairs += floor_div(scale, a * a) - floor_div(scale, b * b);
  }
  rep.rhs_pairs = kRhsPairs;
  const auto bern = bernoulli_exact(2 * kMaxEmTerms + 2);
  const Rational n = Rational(to_bigint(kRhsPairs));
  const EmResult z1 = hurwitz_zeta2(n + make_rational(1, 3), target, bern);
  const EmResult z2 = hurwitz_zeta2(n + make_rational(2, 3), target, bern);
  rep.em_terms = std::max(z1.terms, z2.terms);
  const Rational tail = (z1.value - z2.value) / 9;
  const BigInt tail_fixed = floor_div(tail.get_num() * scale, tail.get_den());
  const BigInt rhs = floor_div(15 * (pairs + tail_fixed), BigInt(2));
  // pair floors: < 1 ulp each side per pair; tail floor 1 ulp; EM remainders; final halving 1 ulp
  const Rational rhs_err =
      make_rational(15, 2) * (ulp * Rational(to_bigint(2 * kRhsPairs + 1)) + (z1.bound + z2.bound) / 9) + ulp;

  const BigInt diff = abs(lhs - rhs);
  const Rational bound = lhs_err + rhs_err;
  rep.lhs = fixed_string(lhs, digits);
  rep.rhs = fixed_string(rhs, digits);
  rep.difference = scientific(Rational(diff, scale));
  rep.error_bound = scientific(bound);
  rep.certified = Rational(diff, scale) + bound < Rational(BigInt(1), pow10(digits));
  return rep;
}

}  // namespace supercong
