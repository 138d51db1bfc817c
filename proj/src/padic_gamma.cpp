#include "supercong/padic_gamma.hpp"

#include <array>

#include "supercong/errors.hpp"
#include "supercong/sampling.hpp"

namespace supercong {

GammaContext::GammaContext(const Modulus& m, std::uint64_t table_budget) : mod_(m) {
  const u64 pk = m.pk();
  if (pk > table_budget) return;
  table_.resize(pk);
  // running value of prod_{j<n, p∤j} j, sign applied on lookup
  table_[0] = 1;
  u64 acc = 1;
  for (u64 n = 1; n < pk; ++n) {
    const u64 j = n - 1;
    if (j != 0 && j % m.p() != 0) acc = mul_mod(acc, j, pk);
    table_[n] = acc;
  }
}

Residue GammaContext::of_int(u64 n) const {
  const u64 pk = mod_.pk();
  const u64 p = mod_.p();
  n %= pk;
  u64 prod;
  if (!table_.empty()) {
    prod = table_[n];
  } else {
    prod = 1;
    for (u64 j = 1; j < n; ++j) {
      if (j % p != 0) prod = mul_mod(prod, j, pk);
    }
  }
  // n ≡ n mod p^k changes parity only through p^k, which is odd
  if (n % 2 == 1) prod = (pk - prod) % pk;
  return Residue(mod_, prod);
}

Residue GammaContext::of(const Rational& x) const {
  if (!in_zp(x, mod_.p())) {
    throw NotPAdic("Gamma_p: " + to_string(x) + " is not in Z_" + std::to_string(mod_.p()));
  }
  return of_int(Residue::from_rational(mod_, x).value());
}

Residue gamma_p_of_int(u64 n, const GammaContext& ctx) { return ctx.of_int(n); }

Residue gamma_p(const Rational& x, const GammaContext& ctx) { return ctx.of(x); }

Residue gamma_derivative_at_zero(u64 p) {
  const Modulus m1(p, 1);
  const u64 p2 = p * p;
  u64 f = 1;
  for (u64 j = 2; j < p; ++j) f = mul_mod(f, j, p2);
  const u64 wilson = ((f + 1) % p2) / p;
  return -Residue(m1, wilson);
}

namespace {

// (-1)^e for the reflection formula, as a residue.
Residue sign(const Modulus& m, u64 e) { return Residue(m, e % 2 == 0 ? 1 : m.pk() - 1); }

// m^{((1-p) m x + <-mx>_p) / p}. Writing a = <-mx>_p and s = (mx + a)/p, the
// exponent is a - (p-1) s; m^(p-1) ≡ 1 (mod p), so its Z_p-power only needs
// -s modulo p^(k-1).
Residue gauss_factor(const Modulus& mod, std::int64_t m, const Rational& x) {
  const u64 p = mod.p();
  const Rational mx = m * x;
  const u64 a = least_nonneg_residue(-mx, p);
  const Residue base = Residue::from_int(mod, m);
  Residue out = base.pow(a);
  if (mod.k() > 1) {
    const Rational s = (mx + Rational(to_bigint(a))) / Rational(to_bigint(p));
    const Modulus low = mod.with_exponent(mod.k() - 1);
    const u64 y = (-Residue::from_rational(low, s)).value();
    out *= base.pow(p - 1).pow(y);
  }
  return out;
}

std::string describe(const char* what, const Rational& x) { return std::string(what) + " = " + to_string(x); }

}  // namespace

SuiteReport gamma_identity_suite(u64 p, int k, int samples, std::uint64_t seed) {
  const Modulus mod(p, k);
  const GammaContext ctx(mod);
  auto rng = keyed_rng(seed, "gamma-identities", p);

  CheckResult reflection("reflection");
  CheckResult functional("functional equation");
  CheckResult gauss("Gauss multiplication");
  CheckResult expansion("first-order expansion");

  const Rational prat(to_bigint(p));
  for (int i = 0; i < samples; ++i) {
    Rational x = draw_zp(rng, p);
    if (i % 5 == 4) x *= prat;  // exercise the p | x branch

    const u64 neg = least_nonneg_residue(-x, p);
    reflection.record(ctx.of(x) * ctx.of(1 - x) == sign(mod, p - neg),
                      [&] { return describe("x", x); });

    const Residue ratio = ctx.of(x + 1) * ctx.of(x).inverse();
    const bool divisible = least_nonneg_residue(x, p) == 0;
    const Residue expected = divisible ? Residue::from_int(mod, -1) : -Residue::from_rational(mod, x);
    functional.record(ratio == expected, [&] { return describe("x", x); });

    for (std::int64_t m : {2, 3, 4, 6}) {
      Residue lhs(mod, 1), rhs = ctx.of(m * x) * gauss_factor(mod, m, x);
      for (std::int64_t j = 0; j < m; ++j) {
        lhs *= ctx.of(x + make_rational(j, m));
        rhs *= ctx.of(make_rational(j, m));
      }
      gauss.record(lhs == rhs, [&] { return describe("x", x) + ", m = " + std::to_string(m); });
    }
  }

  if (k >= 2) {
    const Modulus m1(p, 1), m2 = mod.with_exponent(2);
    const Residue g0 = gamma_derivative_at_zero(p);
    for (int i = 0; i < samples; ++i) {
      // every tenth alpha is ≡ -1 mod p, so H_{p-1-<-alpha>} = H_0
      const Rational alpha = i % 10 == 3 ? Rational(-1) + prat * draw_int(rng, -5, 5) : draw_zp(rng, p);
      const Rational t = draw_zp(rng, p);
      if (alpha == 0 && t == 1) {
        // this point is how Gamma_p'(0) is defined; testing it would be circular
        ++expansion.skipped;
        continue;
      }
      const u64 neg = least_nonneg_residue(-alpha, p);
      const Residue inner = g0 + harmonic_number_mod(p - 1 - neg, m1);
      const u64 tp_term = p * (Residue::from_rational(m1, t) * inner).value();
      const Residue lhs = ctx.of(alpha + t * prat).reduce(2);
      const Residue rhs = ctx.of(alpha).reduce(2) * Residue(m2, 1 + tp_term);
      expansion.record(lhs == rhs, [&] { return describe("alpha", alpha) + ", " + describe("t", t); });
    }
  }

  SuiteReport report;
  report.checks = {reflection, functional, gauss, expansion};
  return report;
}

}  // namespace supercong
