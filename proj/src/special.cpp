#include "supercong/special.hpp"

#include <algorithm>
#include <cmath>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

// Factorials and inverse factorials mod p up to n < p.
struct BinomialsModP {
  BinomialsModP(u64 p, int n) : p(p), fact(n + 1), inv_fact(n + 1) {
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = mul_mod(fact[i - 1], static_cast<u64>(i), p);
    inv_fact[n] = inverse_mod_u64(fact[n], p);
    for (int i = n; i > 0; --i) inv_fact[i - 1] = mul_mod(inv_fact[i], static_cast<u64>(i), p);
  }
  u64 operator()(int n, int r) const { return mul_mod(fact[n], mul_mod(inv_fact[r], inv_fact[n - r], p), p); }

  u64 p;
  std::vector<u64> fact, inv_fact;
};

std::int64_t isqrt_exact(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

std::vector<Residue> bernoulli_mod_p(u64 p, int n_max) {
  const Modulus m(p, 1);
  if (n_max < 0 || static_cast<u64>(n_max) + 3 > p) {
    throw RangeError("bernoulli_mod_p: need 0 <= n_max <= p-3, got " + std::to_string(n_max));
  }
  const BinomialsModP binom(p, n_max + 1);
  std::vector<u64> b(n_max + 1);
  b[0] = 1;
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b[n] = 0;
      continue;
    }
    u64 s = 0;
    for (int j = 0; j < n; ++j) s = (s + mul_mod(binom(n + 1, j), b[j], p)) % p;
    b[n] = mul_mod((p - s) % p, inverse_mod_u64(static_cast<u64>(n + 1), p), p);
  }
  std::vector<Residue> out;
  out.reserve(b.size());
  for (u64 v : b) out.emplace_back(m, v);
  return out;
}

Residue bernoulli_poly_mod_p(int n, const Rational& x, u64 p) {
  if (n < 0 || static_cast<u64>(n) + 2 > p) {
    throw RangeError("bernoulli_poly_mod_p: need 0 <= n <= p-2, got " + std::to_string(n));
  }
  const Modulus m(p, 1);
  const Residue xr = Residue::from_rational(m, x);
  const int known = std::min(n, static_cast<int>(p) - 3);
  std::vector<Residue> b = bernoulli_mod_p(p, known);
  if (n > known) b.emplace_back(m, 0);  // B_{p-2}, odd index >= 3
  const BinomialsModP binom(p, n);
  // Horner in x: B_n(x) = sum_j C(n, j) B_j x^{n-j}
  Residue acc(m, 0);
  for (int j = 0; j <= n; ++j) acc = acc * xr + Residue(m, binom(n, j)) * b[j];
  return acc;
}

Residue euler_number_mod_p(int n, u64 p) {
  const Modulus m(p, 1);
  if (n < 0 || static_cast<u64>(n) + 3 > p) {
    throw RangeError("euler_number_mod_p: need 0 <= n <= p-3, got " + std::to_string(n));
  }
  if (n % 2 == 1) return Residue(m, 0);
  const BinomialsModP binom(p, n);
  std::vector<u64> e(n + 1, 0);
  e[0] = 1;
  // sum_{j even} C(n, j) E_j = 0 for even n >= 2
  for (int k = 2; k <= n; k += 2) {
    u64 s = 0;
    for (int j = 0; j < k; j += 2) s = (s + mul_mod(binom(k, j), e[j], p)) % p;
    e[k] = (p - s) % p;
  }
  return Residue(m, e[n]);
}

std::string to_string(QuadForm f) {
  switch (f) {
    case QuadForm::FourPX2Plus27Y2:
      return "4p = x^2 + 27y^2";
    case QuadForm::X2Plus3Y2:
      return "p = x^2 + 3y^2";
    case QuadForm::X2Plus4Y2:
      return "p = x^2 + 4y^2";
  }
  return "?";
}

QuadFormRep represent_form(u64 p, QuadForm form, Normalization norm) {
  std::int64_t target = static_cast<std::int64_t>(p);
  std::int64_t d = 0;
  switch (form) {
    case QuadForm::FourPX2Plus27Y2:
      target *= 4;
      d = 27;
      break;
    case QuadForm::X2Plus3Y2:
      d = 3;
      break;
    case QuadForm::X2Plus4Y2:
      d = 4;
      break;
  }
  for (std::int64_t y = 1; d * y * y <= target; ++y) {
    const std::int64_t x = isqrt_exact(target - d * y * y);
    if (x < 0) continue;
    const bool plus = floor_mod(x, norm.modulus) == floor_mod(norm.residue, norm.modulus);
    const bool minus = floor_mod(-x, norm.modulus) == floor_mod(norm.residue, norm.modulus);
    if (!plus && !minus) {
      throw NormalizationConflict("no sign of x = " + std::to_string(x) + " satisfies x ≡ " +
                                  std::to_string(norm.residue) + " (mod " + std::to_string(norm.modulus) + ")");
    }
    return QuadFormRep{form, plus ? x : -x, y, norm};
  }
  throw NotRepresentable(std::to_string(p) + " has no representation " + to_string(form));
}

}  // namespace supercong
