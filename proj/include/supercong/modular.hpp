#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "supercong/rational.hpp"

namespace supercong {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n);

/// p^e, throwing InvalidModulus if the result would not fit below 2^62.
u64 checked_power(u64 p, int e);

/// Legendre symbol (a/p) for an odd prime p, computed with the Jacobi
/// reciprocity algorithm (not Euler's criterion).
int legendre_symbol(i64 a, u64 p);

/// The arena p^k for a prime p > 3. Residues are kept in one machine word, so
/// p^k must stay below 2^62; any k >= 1 satisfying that is accepted.
class Modulus {
 public:
  Modulus(u64 p, int k);

  u64 p() const { return p_; }
  int k() const { return k_; }
  u64 pk() const { return pk_; }

  /// p^e for 0 <= e <= k.
  u64 power(int e) const;

  /// Same prime, different exponent; skips the primality test.
  Modulus with_exponent(int k) const;

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  struct Trusted {};
  Modulus(u64 p, int k, Trusted);

  u64 p_;
  int k_;
  u64 pk_;
};

class Residue {
 public:
  /// value is reduced into [0, p^k).
  Residue(const Modulus& m, u64 value);

  static Residue from_int(const Modulus& m, i64 v);
  static Residue from_bigint(const Modulus& m, const BigInt& v);
  /// Throws NotPAdic when p divides the denominator.
  static Residue from_rational(const Modulus& m, const Rational& q);

  u64 value() const { return value_; }
  const Modulus& modulus() const { return mod_; }
  bool is_unit() const { return value_ % mod_.p() != 0; }

  Residue inverse() const;
  Residue pow(u64 e) const;

  /// Same value read modulo p^e for e <= k.
  Residue reduce(int e) const;

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue operator-() const;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void require_same(const Residue& o) const;

  u64 value_;
  Modulus mod_;
};

std::string to_string(const Residue& r);
std::ostream& operator<<(std::ostream& out, const Residue& r);

/// a^{-1} mod p^k; NotInvertible when p | a.
Residue mod_inverse(i64 a, const Modulus& m);
u64 inverse_mod_u64(u64 a, u64 m);

/// <alpha>_p, the representative of alpha mod p in {0, ..., p-1}.
u64 least_nonneg_residue(const Rational& alpha, u64 p);

/// q_p(a) = (a^{p-1} - 1)/p reduced mod p.
Residue fermat_quotient(i64 a, u64 p);

/// q_p(a) reduced mod p^k (exact lift through GMP, no size limit).
Residue fermat_quotient_lift(i64 a, const Modulus& m);

/// H_n = sum_{j=1}^{n} 1/j mod p^k. NotInvertible when some j <= n is a
/// multiple of p.
Residue harmonic_number_mod(u64 n, const Modulus& m);

}  // namespace supercong
