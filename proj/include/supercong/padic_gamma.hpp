#pragma once

#include <cstdint>
#include <vector>

#include "supercong/check.hpp"
#include "supercong/modular.hpp"

namespace supercong {

/// Morita's Gamma_p on Z_p, evaluated modulo p^k.
///
/// Gamma_p is 1-Lipschitz, so Gamma_p(x) mod p^k only depends on x mod p^k and
/// is read off from the representative n in [0, p^k). When p^k fits in the
/// table budget every value is a lookup; otherwise each call multiplies out
/// the product directly.
class GammaContext {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

  explicit GammaContext(const Modulus& m, std::uint64_t table_budget = kDefaultBudget);

  const Modulus& modulus() const { return mod_; }
  bool tabulated() const { return !table_.empty(); }

  /// (-1)^n * prod_{1 <= j < n, p ∤ j} j; Gamma_p(0) = 1.
  Residue of_int(u64 n) const;
  /// NotPAdic when p divides the denominator of x.
  Residue of(const Rational& x) const;

 private:
  Modulus mod_;
  std::vector<u64> table_;
};

Residue gamma_p_of_int(u64 n, const GammaContext& ctx);
Residue gamma_p(const Rational& x, const GammaContext& ctx);

/// Gamma_p'(0) mod p, i.e. -((p-1)! + 1)/p, the negated Wilson quotient.
Residue gamma_derivative_at_zero(u64 p);

/// Randomized check of reflection, the functional equation, Gauss
/// multiplication (m in {2, 3, 4, 6}) and the first-order expansion mod p^2.
/// The expansion check needs k >= 2 and is skipped otherwise.
SuiteReport gamma_identity_suite(u64 p, int k, int samples, std::uint64_t seed);

}  // namespace supercong
