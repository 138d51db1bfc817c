#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supercong/check.hpp"
#include "supercong/padic.hpp"

namespace supercong {

/// c0 + cn*n + cd*delta + ck*k, all integers.
struct Affine {
  std::int64_t c0 = 0, cn = 0, cd = 0, ck = 0;
  std::int64_t at(std::int64_t n, int delta, std::int64_t k) const { return c0 + cn * n + cd * delta + ck * k; }
};

/// Rational parameter q + cn*n + cd*delta.
struct Param {
  Rational q;
  std::int64_t cn = 0, cd = 0;
  Rational at(std::int64_t n, int delta) const;
};

/// Gamma(mul*n + q + cd*delta)^power with mul a positive integer.
struct GammaArg {
  std::int64_t mul;
  Rational q;
  std::int64_t cd = 0;
  int power = 1;
};

/// base^(en*n + e0 + ed*delta) with en, ed integers and e0 rational.
struct PowerFactor {
  Rational base;
  std::int64_t en;
  Rational e0;
  std::int64_t ed = 0;
};

/// A terminating sum with a Gamma-quotient closed form:
///   sum_{k=0}^{n} w(n,k) prod(u_i)_k / ((1)_k prod(l_j)_k) z^k
///     = C * prod base^(...) * prod Gamma(...)^(±1).
/// RHS(n) is evaluated exactly as RHS(n0) * prod_{j=n0}^{n-1} r(j) where r is
/// the rational ratio read off from the Gamma and power factors. RHS(n0) is
/// a registered rational, checked against both the summed LHS and a
/// floating-point evaluation of the closed form.
struct IdentityFamily {
  std::string id;
  std::string statement;
  std::vector<int> deltas{0};
  std::vector<Param> upper;
  std::vector<Param> lower;  // (1)_k is implicit
  Rational z;
  Affine weight_num{1};
  Affine weight_den{1};
  double constant = 1.0;  // transcendental prefactor, numeric check only
  std::vector<PowerFactor> powers;
  std::vector<GammaArg> gammas;
  int base_n = 0;
  std::vector<Rational> base_value;  // RHS(base_n) for each delta
  /// LHS values below base_n where the closed form is a limit (Gamma poles).
  std::vector<std::pair<int, Rational>> limit_values;
  /// Set when the registered display differs from the printed source.
  std::string note;
};

const std::vector<IdentityFamily>& identity_families();
const IdentityFamily& identity_family(const std::string& id);
/// Printed readings known to be wrong, kept so that reports can show they fail.
const std::vector<IdentityFamily>& identity_printed_variants();

/// Direct exact summation of the left side.
Rational identity_lhs(const IdentityFamily& f, std::int64_t n, int delta);
/// The same sum term by term in Z_p arithmetic (for cross-checks).
PadicApprox identity_lhs_padic(const IdentityFamily& f, std::int64_t n, int delta, const Modulus& m);
/// r(n) = RHS(n+1)/RHS(n). DivisionByZero if it is undefined at n.
Rational identity_rhs_ratio(const IdentityFamily& f, std::int64_t n, int delta);
/// Floating-point closed form; NaN if a Gamma argument is a pole.
double identity_rhs_numeric(const IdentityFamily& f, std::int64_t n, int delta);

/// LHS(n) == RHS(n) for n <= n_max and every delta, plus the anchoring
/// checks. One CheckResult named after the family.
CheckResult verify_identity_family(const std::string& id, std::int64_t n_max);
CheckResult verify_identity_family(const IdentityFamily& f, std::int64_t n_max);

/// A linear recurrence sum_i c_i(n) S(n+i) = rhs(n) claimed for some sum S.
struct Recurrence {
  std::string id;
  std::string statement;
  std::function<std::vector<Rational>(std::int64_t n, const Rational& param)> coefficients;
  std::function<Rational(std::int64_t n, const Rational& param)> rhs;
  std::function<Rational(std::int64_t n, const Rational& param)> sum;
  std::vector<Rational> params;  // delta values, or t samples
};

const std::vector<Recurrence>& recurrences();

/// Checks the recurrence on directly summed values for n <= n_max - order.
CheckResult verify_recurrence(const std::string& id, std::int64_t n_max);

/// sum_{k=0}^{n} (-n)_k/k! t^k H_k.
Rational harmonic_lhs(std::int64_t n, const Rational& t);
/// (1-t)^n H_n - sum_{k=1}^{n} (1-t)^(n-k)/k.
Rational harmonic_rhs(std::int64_t n, const Rational& t);

/// Checks the harmonic identity for every n <= n_max at max(n+1, 5)
/// distinct t values: the given samples first, then a fixed fallback list.
/// Both sides are polynomials in t of degree <= n, so this proves it.
CheckResult harmonic_sum_identity_check(std::int64_t n_max, const std::vector<Rational>& t_samples);

struct NumericReport {
  int digits = 0;
  std::string lhs;          // decimal, `digits` places
  std::string rhs;
  std::string difference;   // |LHS - RHS| of the computed approximations
  std::string error_bound;  // certified bound on total approximation error
  bool certified = false;   // difference + error_bound < 10^-digits
  std::int64_t lhs_terms = 0;
  std::int64_t rhs_pairs = 0;
  int em_terms = 0;
  std::string ratio_certificate;
};

/// Fixed-point evaluation of
///   sum_{k>=1} 48^k / (k(2k-1) C(4k,2k) C(2k,k))  vs  (15/2) sum_{k>=1} (k/3)/k^2
/// with rigorous tail bounds. digits <= 60; PrecisionUnreachable otherwise
/// or if the iteration cap is hit.
NumericReport series_numeric_check(int digits);

}  // namespace supercong
