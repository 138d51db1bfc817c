#include "supercong/padic.hpp"

#include <algorithm>

#include "supercong/errors.hpp"

namespace supercong {

PadicApprox PadicApprox::zero(const Modulus& m) { return PadicApprox(m); }

PadicApprox PadicApprox::one(const Modulus& m) { return from_parts(m, 0, 1, m.k()); }

PadicApprox PadicApprox::from_int(const Modulus& m, i64 v) { return from_bigint(m, to_bigint(v)); }

PadicApprox PadicApprox::from_bigint(const Modulus& m, const BigInt& v) {
  if (v == 0) return zero(m);
  BigInt rest;
  const int val = supercong::valuation(v, m.p(), &rest);
  return from_parts(m, val, mod_u64(rest, m.pk()), m.k());
}

PadicApprox PadicApprox::from_rational(const Modulus& m, const Rational& q) {
  if (q == 0) return zero(m);
  BigInt num, den;
  const int vn = supercong::valuation(q.get_num(), m.p(), &num);
  const int vd = supercong::valuation(q.get_den(), m.p(), &den);
  const u64 pk = m.pk();
  const u64 unit = mul_mod(mod_u64(num, pk), inverse_mod_u64(mod_u64(den, pk), pk), pk);
  return from_parts(m, vn - vd, unit, m.k());
}

PadicApprox PadicApprox::from_fraction(const Modulus& m, i64 num, i64 den) {
  if (den == 0) throw DivisionByZero("PadicApprox::from_fraction: zero denominator");
  if (num == 0) return zero(m);
  const bool negative = (num < 0) != (den < 0);
  // magnitudes as u64 so that INT64_MIN is safe
  u64 a = num < 0 ? 0 - static_cast<u64>(num) : static_cast<u64>(num);
  u64 b = den < 0 ? 0 - static_cast<u64>(den) : static_cast<u64>(den);
  const u64 p = m.p();
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  while (b % p == 0) {
    b /= p;
    --v;
  }
  const u64 pk = m.pk();
  u64 unit = mul_mod(a % pk, inverse_mod_u64(b % pk, pk), pk);
  if (negative) unit = pk - unit;
  return from_parts(m, v, unit, m.k());
}

PadicApprox PadicApprox::from_residue(const Modulus& m, const Residue& r) {
  if (r.modulus().p() != m.p()) throw std::invalid_argument("PadicApprox::from_residue: prime mismatch");
  const int known = std::min(r.modulus().k(), m.k());
  const u64 width_mod = m.power(known);
  u64 v = r.value() % width_mod;
  if (v == 0) return vanishing(m, known);
  int val = 0;
  while (v % m.p() == 0) {
    v /= m.p();
    ++val;
  }
  return from_parts(m, val, v, known - val);
}

PadicApprox PadicApprox::from_parts(const Modulus& m, int valuation, u64 unit, int precision) {
  if (precision <= 0 || precision > m.k()) throw RangeError("PadicApprox: precision out of range");
  PadicApprox x(m);
  x.zero_ = false;
  x.valuation_ = valuation;
  x.precision_ = precision;
  x.unit_ = unit % m.power(precision);
  if (x.unit_ % m.p() == 0) throw std::invalid_argument("PadicApprox: unit part divisible by p");
  return x;
}

PadicApprox PadicApprox::vanishing(const Modulus& m, int valuation) {
  PadicApprox x(m);
  x.zero_ = false;
  x.valuation_ = valuation;
  x.precision_ = 0;
  x.unit_ = 1;
  return x;
}

PadicApprox PadicApprox::operator-() const {
  if (zero_ || precision_ == 0) return *this;
  PadicApprox r = *this;
  r.unit_ = mod_.power(precision_) - unit_;
  return r;
}

// Rebuilds the state from raw = value / p^base_valuation known modulo p^width.
void PadicApprox::normalize(u64 raw, int base_valuation, int width) {
  zero_ = false;
  if (width <= 0 || raw == 0) {
    valuation_ = base_valuation + std::max(width, 0);
    precision_ = 0;
    unit_ = 1;
    return;
  }
  int t = 0;
  while (raw % mod_.p() == 0) {
    raw /= mod_.p();
    ++t;
  }
  valuation_ = base_valuation + t;
  precision_ = width - t;
  unit_ = raw % mod_.power(precision_);
}

PadicApprox& PadicApprox::operator+=(const PadicApprox& o) {
  if (!(mod_ == o.mod_)) throw std::invalid_argument("PadicApprox: mismatched moduli");
  if (o.zero_) return *this;
  if (zero_) return *this = o;
  const int abs_prec = std::min(absolute_precision(), o.absolute_precision());
  const int vmin = std::min(valuation_, o.valuation_);
  const int width = abs_prec - vmin;
  if (width <= 0) {
    normalize(0, abs_prec, 0);
    return *this;
  }
  const u64 wm = mod_.power(width);
  u64 s = 0;
  for (const PadicApprox* x : {static_cast<const PadicApprox*>(this), &o}) {
    if (x->precision_ == 0) continue;
    const int shift = x->valuation_ - vmin;
    if (shift >= width) continue;
    s = (s + mul_mod(x->unit_ % wm, mod_.power(shift), wm)) % wm;
  }
  normalize(s, vmin, width);
  return *this;
}

PadicApprox& PadicApprox::operator*=(const PadicApprox& o) {
  if (!(mod_ == o.mod_)) throw std::invalid_argument("PadicApprox: mismatched moduli");
  if (zero_) return *this;
  if (o.zero_) return *this = o;
  valuation_ += o.valuation_;
  precision_ = std::min(precision_, o.precision_);
  if (precision_ == 0) {
    unit_ = 1;
  } else {
    const u64 m = mod_.power(precision_);
    unit_ = mul_mod(unit_ % m, o.unit_ % m, m);
  }
  return *this;
}

PadicApprox PadicApprox::inverse() const {
  if (zero_) throw DivisionByZero("PadicApprox: division by exact zero");
  if (precision_ == 0) {
    throw PrecisionLoss("PadicApprox: cannot invert a value known only to vanish mod p^" +
                        std::to_string(valuation_));
  }
  PadicApprox r = *this;
  r.valuation_ = -valuation_;
  r.unit_ = inverse_mod_u64(unit_, mod_.power(precision_));
  return r;
}

PadicApprox& PadicApprox::operator/=(const PadicApprox& o) { return *this *= o.inverse(); }

PadicApprox PadicApprox::pow(u64 e) const {
  PadicApprox result = one(mod_);
  PadicApprox base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

PadicApprox PadicApprox::shifted(int e) const {
  if (zero_) return *this;
  PadicApprox r = *this;
  r.valuation_ += e;
  return r;
}

Residue PadicApprox::reduce(int e) const {
  const Modulus target = mod_.with_exponent(e);
  if (zero_) return Residue(target, 0);
  if (valuation_ >= e) {
    // vanishing or not, the value is 0 mod p^e as long as it is known that far
    return Residue(target, 0);
  }
  if (valuation_ < 0) {
    throw NotPAdic("value " + to_string(*this) + " has negative valuation; no residue mod p^" +
                   std::to_string(e));
  }
  if (absolute_precision() < e) {
    throw PrecisionLoss("value known only mod p^" + std::to_string(absolute_precision()) +
                        ", requested p^" + std::to_string(e));
  }
  const u64 pe = target.pk();
  return Residue(target, mul_mod(unit_ % pe, mod_.power(valuation_), pe));
}

bool congruent(const PadicApprox& a, const PadicApprox& b, int e) {
  const PadicApprox d = a - b;
  if (d.is_exact_zero()) return true;
  if (d.valuation() >= e) return true;
  if (d.is_vanishing()) {
    throw PrecisionLoss("difference known only mod p^" + std::to_string(d.valuation()) +
                        ", requested p^" + std::to_string(e));
  }
  // unit part is nonzero mod p, so valuation is exact
  return false;
}

bool operator==(const PadicApprox& a, const PadicApprox& b) {
  if (!(a.mod_ == b.mod_) || a.zero_ != b.zero_) return false;
  if (a.zero_) return true;
  return a.valuation_ == b.valuation_ && a.precision_ == b.precision_ && a.unit_ == b.unit_;
}

std::string to_string(const PadicApprox& x) {
  const std::string p = std::to_string(x.modulus().p());
  if (x.is_exact_zero()) return "0";
  if (x.is_vanishing()) return "O(" + p + "^" + std::to_string(x.valuation()) + ")";
  return p + "^" + std::to_string(x.valuation()) + "*" + std::to_string(x.unit()) + " + O(" + p + "^" +
         std::to_string(x.absolute_precision()) + ")";
}

}  // namespace supercong
