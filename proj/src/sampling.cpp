#include "supercong/sampling.hpp"

namespace supercong {

std::mt19937_64 keyed_rng(std::uint64_t seed, std::string_view tag, std::uint64_t p) {
  // FNV-1a over the tag, then mixed with seed and p through seed_seq
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational draw_zp(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_den, std::int64_t num_bound) {
  std::int64_t den = draw_int(rng, 1, max_den);
  while (static_cast<std::uint64_t>(den) % p == 0) den = draw_int(rng, 1, max_den);
  return make_rational(draw_int(rng, -num_bound, num_bound), den);
}

}  // namespace supercong
