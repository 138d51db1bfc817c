#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/modular.hpp"

namespace supercong {

/// B_0, ..., B_{n_max} mod p (with B_1 = -1/2). RangeError unless n_max <= p-3.
std::vector<Residue> bernoulli_mod_p(u64 p, int n_max);

/// B_n(x) = sum_j C(n, j) B_j x^(n-j) mod p for n <= p-2. Degree p-2 is
/// allowed because it only needs B_j for j <= p-3 plus B_{p-2} = 0.
Residue bernoulli_poly_mod_p(int n, const Rational& x, u64 p);

/// Euler number E_n mod p (sech coefficients, E_2 = -1). Odd n gives 0.
/// RangeError for n < 0 or n > p-3.
Residue euler_number_mod_p(int n, u64 p);

enum class QuadForm {
  FourPX2Plus27Y2,  // 4p = x^2 + 27 y^2
  X2Plus3Y2,        // p = x^2 + 3 y^2
  X2Plus4Y2,        // p = x^2 + 4 y^2
};

std::string to_string(QuadForm f);

/// x ≡ residue (mod modulus).
struct Normalization {
  std::int64_t modulus;
  std::int64_t residue;
};

struct QuadFormRep {
  QuadForm form;
  std::int64_t x;
  std::int64_t y;
  Normalization normalization;
};

/// Finds (x, y) with y > 0 and the sign of x fixed by `norm`. Searches y up
/// to the bound implied by the form, with an integer square test.
/// NotRepresentable when no solution exists; NormalizationConflict if neither
/// sign of x satisfies `norm`.
QuadFormRep represent_form(u64 p, QuadForm form, Normalization norm);

}  // namespace supercong
