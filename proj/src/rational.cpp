#include "supercong/rational.hpp"

#include <cctype>

#include "supercong/errors.hpp"

namespace supercong {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("make_rational: zero denominator");
  Rational q(to_bigint(num), to_bigint(den));
  q.canonicalize();
  return q;
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw RangeError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw RangeError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw RangeError("malformed rational '" + std::string(whole) + "'");
    }
  }
  BigInt v(std::string(s.substr(i)), 10);
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DivisionByZero("parse_rational: zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& n) { return n.get_str(10); }

int valuation(const BigInt& n, std::uint64_t p, BigInt* rest) {
  if (n == 0) throw RangeError("valuation of zero is infinite");
  BigInt tmp;
  BigInt bp = to_bigint(p);
  const auto v = mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t());
  if (rest != nullptr) *rest = tmp;
  return static_cast<int>(v);
}

int valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) throw RangeError("valuation of zero is infinite");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool in_zp(const Rational& q, std::uint64_t p) {
  return mpz_divisible_p(q.get_den_mpz_t(), to_bigint(p).get_mpz_t()) == 0;
}

std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), to_bigint(m).get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace supercong
