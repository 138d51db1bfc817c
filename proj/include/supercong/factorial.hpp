#pragma once

#include <cstdint>
#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

/// Prefix tables of n! = p^v(n) * u(n) for 0 <= n <= n_max. Immutable after
/// construction, so one table can be shared by concurrent readers.
class FactorialTable {
 public:
  FactorialTable(const Modulus& m, u64 n_max);

  const Modulus& modulus() const { return mod_; }
  u64 n_max() const { return static_cast<u64>(units_.size()) - 1; }

  PadicApprox factorial(u64 n) const;
  /// C(n, r); exact zero when r < 0 or r > n.
  PadicApprox binomial(i64 n, i64 r) const;

 private:
  Modulus mod_;
  std::vector<u64> units_;
  std::vector<std::uint32_t> valuations_;
};

/// n! as p^v * u with v = sum floor(n / p^i); O(n).
PadicApprox factorial_padic(u64 n, const Modulus& m);

/// C(n, r) with exact zero outside 0 <= r <= n.
PadicApprox binomial_padic(u64 n, i64 r, const Modulus& m);

/// (alpha)_j = alpha (alpha + 1) ... (alpha + j - 1). NotPAdic when p divides
/// the denominator of alpha.
PadicApprox pochhammer_padic(const Rational& alpha, u64 j, const Modulus& m);

}  // namespace supercong
