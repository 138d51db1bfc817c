#pragma once

#include <climits>
#include <string>

#include "supercong/modular.hpp"

namespace supercong {

/// A p-adic number known to finite precision, stored as p^v * u.
///
/// Three states:
///  - exact zero (infinite valuation, infinite precision);
///  - a unit part u coprime to p known modulo p^r, 1 <= r <= k, so the value
///    is fixed modulo p^(v + r) ("absolute precision");
///  - vanishing: nothing is known except value == 0 (mod p^v); r == 0.
///
/// Products keep min(r1, r2) relative digits. Sums keep the smaller absolute
/// precision of the operands and lose relative digits on cancellation.
/// Reading a residue beyond the absolute precision raises PrecisionLoss.
class PadicApprox {
 public:
  static constexpr int kInfinite = INT_MAX;

  static PadicApprox zero(const Modulus& m);
  static PadicApprox one(const Modulus& m);
  static PadicApprox from_int(const Modulus& m, i64 v);
  static PadicApprox from_bigint(const Modulus& m, const BigInt& v);
  /// Exact value with full relative precision k. Negative valuations allowed.
  static PadicApprox from_rational(const Modulus& m, const Rational& q);
  /// Exact num/den for machine-size integers; avoids big-number conversion.
  /// DivisionByZero when den == 0.
  static PadicApprox from_fraction(const Modulus& m, i64 num, i64 den);
  /// A value known only modulo r.modulus(); r.modulus() may be coarser than m.
  static PadicApprox from_residue(const Modulus& m, const Residue& r);
  /// p^valuation * unit, unit known modulo p^precision (0 < precision <= k).
  static PadicApprox from_parts(const Modulus& m, int valuation, u64 unit, int precision);
  /// Known only to be divisible by p^valuation.
  static PadicApprox vanishing(const Modulus& m, int valuation);

  const Modulus& modulus() const { return mod_; }
  bool is_exact_zero() const { return zero_; }
  bool is_vanishing() const { return !zero_ && precision_ == 0; }
  /// kInfinite for exact zero; for a vanishing value, its guaranteed valuation.
  int valuation() const { return zero_ ? kInfinite : valuation_; }
  /// Relative digits of the unit (kInfinite for exact zero).
  int precision() const { return zero_ ? kInfinite : precision_; }
  /// Value is determined modulo p^absolute_precision().
  int absolute_precision() const { return zero_ ? kInfinite : valuation_ + precision_; }
  /// Unit part reduced modulo p^precision() (1 for zero / vanishing).
  u64 unit() const { return unit_; }

  PadicApprox operator-() const;
  PadicApprox& operator+=(const PadicApprox& o);
  PadicApprox& operator-=(const PadicApprox& o) { return *this += -o; }
  PadicApprox& operator*=(const PadicApprox& o);
  PadicApprox& operator/=(const PadicApprox& o);

  friend PadicApprox operator+(PadicApprox a, const PadicApprox& b) { return a += b; }
  friend PadicApprox operator-(PadicApprox a, const PadicApprox& b) { return a -= b; }
  friend PadicApprox operator*(PadicApprox a, const PadicApprox& b) { return a *= b; }
  friend PadicApprox operator/(PadicApprox a, const PadicApprox& b) { return a /= b; }

  PadicApprox inverse() const;
  PadicApprox pow(u64 e) const;
  /// Multiplies by p^e (e may be negative); exact.
  PadicApprox shifted(int e) const;

  /// The value modulo p^e as a residue. NotPAdic if the value has negative
  /// valuation, PrecisionLoss if fewer than e absolute digits are known.
  Residue reduce(int e) const;

  /// Whether a == b (mod p^e), raising PrecisionLoss if undecidable.
  friend bool congruent(const PadicApprox& a, const PadicApprox& b, int e);

  /// Identical state (used by tests; not a p-adic equality).
  friend bool operator==(const PadicApprox& a, const PadicApprox& b);

 private:
  explicit PadicApprox(const Modulus& m) : mod_(m) {}
  void normalize(u64 raw, int base_valuation, int width);

  Modulus mod_;
  bool zero_ = true;
  int valuation_ = 0;
  int precision_ = 0;
  u64 unit_ = 1;
};

std::string to_string(const PadicApprox& x);

}  // namespace supercong
