#include "nihoperm/exponents.hpp"

#include <numeric>
#include <string>

#include "nihoperm/error.hpp"
#include "nihoperm/poly.hpp"

namespace nihoperm::exponents {

namespace {

std::uint64_t abs_u64(std::int64_t v) noexcept {
  return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t gcd(std::int64_t a, std::uint64_t b) noexcept { return std::gcd(abs_u64(a), b); }

NihoParams make_niho(int m, std::int64_t s, std::int64_t l, std::int64_t e) {
  if (m < 2 || m > 16) throw PreconditionError("make_niho: m must lie in [2, 16]");
  if (e < 1) throw PreconditionError("make_niho: e must be positive");
  const int n = 2 * m;
  const int128 q = (int128{1} << m) - 1;
  NihoParams p;
  p.m = m;
  p.s = s;
  p.l = l;
  p.e = e;
  p.d1 = gf2n::canonical_exponent(int128{s} * q + e, n);
  p.d2 = gf2n::canonical_exponent(int128{s - l} * q + e, n);
  p.d1_coprime = std::gcd(p.d1, (std::uint64_t{1} << n) - 1) == 1;
  return p;
}

std::uint64_t gcd_mersenne_like(int r, Sign sign_r, int s, Sign sign_s) {
  if (r < 1 || s < 1 || r > 62 || s > 62) throw PreconditionError("gcd_mersenne_like: r, s must lie in [1, 62]");
  const int g = std::gcd(r, s);
  const std::uint64_t pow_g = std::uint64_t{1} << g;
  if (sign_r == Sign::kMinus && sign_s == Sign::kMinus) return pow_g - 1;
  if (sign_r == Sign::kPlus && sign_s == Sign::kPlus) {
    return ((r / g) % 2 == 1 && (s / g) % 2 == 1) ? pow_g + 1 : 1;
  }
  // One minus, one plus; gcd is symmetric, so look at the Mersenne side.
  const int minus_side = sign_r == Sign::kMinus ? r : s;
  return (minus_side / g) % 2 == 0 ? pow_g + 1 : 1;
}

bool is_odd_prime(std::uint64_t p) noexcept {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t order_of_two(std::uint64_t p) {
  if (!is_odd_prime(p)) throw PreconditionError("order_of_two: " + std::to_string(p) + " is not an odd prime");
  std::uint64_t r = 1;
  std::uint64_t v = 2 % p;
  while (v != 1) {
    v = (v * 2) % p;
    ++r;
  }
  return r;
}

bool gcd_p_2k1_guaranteed_one(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw PreconditionError("gcd_p_2k1_guaranteed_one: k must be positive");
  const std::uint64_t r = order_of_two(p);
  if (r % 2 == 1) return true;
  const std::uint64_t half = r / 2;
  if (k % half != 0) return true;
  return ((2 * k) / r) % 2 == 0;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % mod), r = static_cast<std::int64_t>(mod);
  std::int64_t old_t = 1, t = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r != 1) {
    throw PreconditionError(std::to_string(a) + " is not invertible modulo " + std::to_string(mod));
  }
  const auto m = static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(((old_t % m) + m) % m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace nihoperm::exponents
