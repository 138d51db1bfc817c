#include "supercong/factorial.hpp"

#include "supercong/errors.hpp"

namespace supercong {

FactorialTable::FactorialTable(const Modulus& m, u64 n_max) : mod_(m) {
  units_.resize(n_max + 1);
  valuations_.resize(n_max + 1);
  const u64 p = m.p();
  const u64 pk = m.pk();
  units_[0] = 1;
  valuations_[0] = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    u64 j = n;
    std::uint32_t v = 0;
    while (j % p == 0) {
      j /= p;
      ++v;
    }
    units_[n] = mul_mod(units_[n - 1], j % pk, pk);
    valuations_[n] = valuations_[n - 1] + v;
  }
}

PadicApprox FactorialTable::factorial(u64 n) const {
  if (n > n_max()) throw RangeError("FactorialTable: n beyond table");
  return PadicApprox::from_parts(mod_, static_cast<int>(valuations_[n]), units_[n], mod_.k());
}

PadicApprox FactorialTable::binomial(i64 n, i64 r) const {
  if (n < 0) throw RangeError("FactorialTable::binomial: negative row");
  if (r < 0 || r > n) return PadicApprox::zero(mod_);
  const auto un = static_cast<u64>(n), ur = static_cast<u64>(r);
  if (un > n_max()) throw RangeError("FactorialTable: n beyond table");
  const u64 pk = mod_.pk();
  const u64 den = mul_mod(units_[ur], units_[un - ur], pk);
  const u64 unit = mul_mod(units_[un], inverse_mod_u64(den, pk), pk);
  const int v = static_cast<int>(valuations_[un]) - static_cast<int>(valuations_[ur]) -
                static_cast<int>(valuations_[un - ur]);
  return PadicApprox::from_parts(mod_, v, unit, mod_.k());
}

PadicApprox factorial_padic(u64 n, const Modulus& m) {
  const u64 p = m.p();
  const u64 pk = m.pk();
  u64 unit = 1;
  for (u64 i = 1; i <= n; ++i) {
    u64 j = i;
    while (j % p == 0) j /= p;
    unit = mul_mod(unit, j % pk, pk);
  }
  int v = 0;
  for (u64 q = n / p; q > 0; q /= p) v += static_cast<int>(q);
  return PadicApprox::from_parts(m, v, unit, m.k());
}

PadicApprox binomial_padic(u64 n, i64 r, const Modulus& m) {
  if (r < 0 || static_cast<u64>(r) > n) return PadicApprox::zero(m);
  const auto ur = static_cast<u64>(r);
  return factorial_padic(n, m) / (factorial_padic(ur, m) * factorial_padic(n - ur, m));
}

PadicApprox pochhammer_padic(const Rational& alpha, u64 j, const Modulus& m) {
  if (!in_zp(alpha, m.p())) {
    throw NotPAdic("pochhammer: " + to_string(alpha) + " is not in Z_" + std::to_string(m.p()));
  }
  PadicApprox acc = PadicApprox::one(m);
  Rational factor = alpha;
  for (u64 i = 0; i < j; ++i) {
    acc *= PadicApprox::from_rational(m, factor);
    if (acc.is_exact_zero()) break;
    factor += 1;
  }
  return acc;
}

}  // namespace supercong
