#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supercong {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws DivisionByZero when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a" or "a/b" (decimal integers of any size).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// v_p(n) for n != 0; strips the factor in place when `rest` is given.
int valuation(const BigInt& n, std::uint64_t p, BigInt* rest = nullptr);

/// v_p(q) for q != 0 (negative when p divides the denominator).
int valuation(const Rational& q, std::uint64_t p);

/// True iff p does not divide the (reduced) denominator of q.
bool in_zp(const Rational& q, std::uint64_t p);

inline BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt to_bigint(std::int64_t v) {
  if (v >= 0) return to_bigint(static_cast<std::uint64_t>(v));
  // magnitude of INT64_MIN does not fit in int64_t, go through uint64_t
  BigInt r = to_bigint(static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v));
  return -r;
}

/// Value of n reduced into [0, m). m must be positive.
std::uint64_t mod_u64(const BigInt& n, std::uint64_t m);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace supercong
