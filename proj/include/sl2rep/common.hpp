#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl2rep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;

// Argument/state validation; failures carry a message suitable for CLI error output.
#define SL2_REQUIRE(cond, msg)                         \
  do {                                                 \
    if (!(cond)) throw std::invalid_argument(msg);     \
  } while (0)

// Internal invariant; violation means a bug, not bad input.
#define SL2_CHECK(cond, msg)                           \
  do {                                                 \
    if (!(cond)) throw std::logic_error(msg);          \
  } while (0)

// Deterministic 64-bit mixer, used to derive per-index streams from a seed.
inline u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// splitmix64 stream; cheap, seedable, stable across platforms.
class Rng {
 public:
  explicit Rng(u64 seed) : state_(seed) {}
  u64 next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }
  // Uniform in [0, n); n > 0.
  u64 below(u64 n) {
    SL2_CHECK(n > 0, "Rng::below: empty range");
    // rejection sampling keeps the draw unbiased
    u64 limit = UINT64_MAX - UINT64_MAX % n;
    u64 v = next();
    while (v >= limit) v = next();
    return v % n;
  }

 private:
  u64 state_;
};

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// x^e mod m via binary powering on __uint128_t; m < 2^63.
inline u64 powmod_u64(u64 x, u64 e, u64 m) {
  u64 r = 1 % m;
  x %= m;
  while (e) {
    if (e & 1) r = (u64)((unsigned __int128)r * x % m);
    x = (u64)((unsigned __int128)x * x % m);
    e >>= 1;
  }
  return r;
}

}  // namespace sl2rep
