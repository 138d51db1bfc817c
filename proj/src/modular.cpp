#include "supercong/modular.hpp"

#include <ostream>

#include "supercong/errors.hpp"

namespace supercong {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // first twelve primes as witnesses: deterministic below 3.3e24
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 checked_power(u64 p, int e) {
  constexpr u64 limit = u64{1} << 62;
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > limit / p) {
      throw InvalidModulus(std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^62");
    }
    r *= p;
  }
  return r;
}

int legendre_symbol(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0) throw RangeError("legendre_symbol: p must be an odd prime");
  u64 n = p;
  u64 x = a >= 0 ? static_cast<u64>(a) % p
                 : (p - (static_cast<u64>(0) - static_cast<u64>(a)) % p) % p;
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const u64 r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

Modulus::Modulus(u64 p, int k) : p_(p), k_(k), pk_(0) {
  if (p <= 3 || !is_prime(p)) {
    throw InvalidModulus("modulus base must be a prime > 3, got " + std::to_string(p));
  }
  if (k < 1) throw InvalidModulus("modulus exponent must be >= 1");
  pk_ = checked_power(p, k);
}

Modulus::Modulus(u64 p, int k, Trusted) : p_(p), k_(k), pk_(checked_power(p, k)) {
  if (k < 1) throw InvalidModulus("modulus exponent must be >= 1");
}

Modulus Modulus::with_exponent(int k) const { return Modulus(p_, k, Trusted{}); }

u64 Modulus::power(int e) const {
  if (e < 0 || e > k_) throw RangeError("Modulus::power: exponent out of range");
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

Residue::Residue(const Modulus& m, u64 value) : value_(value % m.pk()), mod_(m) {}

Residue Residue::from_int(const Modulus& m, i64 v) {
  const u64 pk = m.pk();
  if (v >= 0) return Residue(m, static_cast<u64>(v) % pk);
  const u64 mag = (static_cast<u64>(0) - static_cast<u64>(v)) % pk;
  return Residue(m, (pk - mag) % pk);
}

Residue Residue::from_bigint(const Modulus& m, const BigInt& v) { return Residue(m, mod_u64(v, m.pk())); }

Residue Residue::from_rational(const Modulus& m, const Rational& q) {
  if (!in_zp(q, m.p())) throw NotPAdic("rational " + to_string(q) + " is not in Z_" + std::to_string(m.p()));
  const u64 den = mod_u64(q.get_den(), m.pk());
  return Residue(m, mul_mod(mod_u64(q.get_num(), m.pk()), inverse_mod_u64(den, m.pk()), m.pk()));
}

void Residue::require_same(const Residue& o) const {
  if (!(mod_ == o.mod_)) throw std::invalid_argument("Residue: mismatched moduli");
}

Residue& Residue::operator+=(const Residue& o) {
  require_same(o);
  value_ += o.value_;
  if (value_ >= mod_.pk()) value_ -= mod_.pk();
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + mod_.pk() - o.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same(o);
  value_ = mul_mod(value_, o.value_, mod_.pk());
  return *this;
}

Residue Residue::operator-() const { return Residue(mod_, value_ == 0 ? 0 : mod_.pk() - value_); }

Residue Residue::inverse() const {
  if (!is_unit()) {
    throw NotInvertible(std::to_string(value_) + " is not invertible mod " + std::to_string(mod_.pk()));
  }
  return Residue(mod_, inverse_mod_u64(value_, mod_.pk()));
}

Residue Residue::pow(u64 e) const { return Residue(mod_, pow_mod(value_, e, mod_.pk())); }

Residue Residue::reduce(int e) const {
  if (e > mod_.k()) throw PrecisionLoss("Residue::reduce: cannot raise precision");
  const Modulus m = mod_.with_exponent(e);
  return Residue(m, value_ % m.pk());
}

std::string to_string(const Residue& r) { return std::to_string(r.value()); }

std::ostream& operator<<(std::ostream& out, const Residue& r) {
  return out << r.value() << " (mod " << r.modulus().pk() << ")";
}

u64 inverse_mod_u64(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to avoid overflow for m < 2^62
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

Residue mod_inverse(i64 a, const Modulus& m) { return Residue::from_int(m, a).inverse(); }

u64 least_nonneg_residue(const Rational& alpha, u64 p) {
  if (!in_zp(alpha, p)) {
    throw NotPAdic("rational " + to_string(alpha) + " is not in Z_" + std::to_string(p));
  }
  const u64 num = mod_u64(alpha.get_num(), p);
  const u64 den = mod_u64(alpha.get_den(), p);
  return mul_mod(num, inverse_mod_u64(den, p), p);
}

Residue fermat_quotient(i64 a, u64 p) { return fermat_quotient_lift(a, Modulus(p, 1)); }

Residue fermat_quotient_lift(i64 a, const Modulus& m) {
  const u64 p = m.p();
  const BigInt base = to_bigint(a);
  if (mpz_divisible_ui_p(base.get_mpz_t(), p) != 0) {
    throw NotInvertible("fermat quotient undefined: p divides " + std::to_string(a));
  }
  // a^{p-1} mod p^{k+1}, then (x - 1)/p is exact mod p^k
  BigInt modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(m.k() + 1));
  BigInt x;
  mpz_powm_ui(x.get_mpz_t(), base.get_mpz_t(), p - 1, modulus.get_mpz_t());
  x -= 1;
  if (x < 0) x += modulus;
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
  return Residue::from_bigint(m, x);
}

Residue harmonic_number_mod(u64 n, const Modulus& m) {
  const u64 pk = m.pk();
  // running fraction num/den with den a unit; one inversion at the end
  u64 num = 0, den = 1;
  for (u64 j = 1; j <= n; ++j) {
    if (j % m.p() == 0) {
      throw NotInvertible("H_" + std::to_string(n) + " has the term 1/" + std::to_string(j) +
                          " outside Z_" + std::to_string(m.p()));
    }
    const u64 jm = j % pk;
    num = (mul_mod(num, jm, pk) + den) % pk;
    den = mul_mod(den, jm, pk);
  }
  return Residue(m, mul_mod(num, inverse_mod_u64(den, pk), pk));
}

}  // namespace supercong
