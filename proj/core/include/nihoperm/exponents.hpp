#pragma once

// Integer number theory for Niho-type exponents d = s(2^m - 1) + e over
// F_{2^{2m}}, and the gcd identities for numbers of the form 2^r +- 1.

#include <cstdint>
#include <vector>

#include "nihoperm/gf2n.hpp"

namespace nihoperm::exponents {

enum class Sign : int { kMinus = -1, kPlus = 1 };

/// Parameters of a binomial x^{d1} + u x^{d2} with
///   d1 = s(2^m - 1) + e,  d2 = (s - l)(2^m - 1) + e,
/// both reduced into [1, 2^{2m} - 1].
struct NihoParams {
  int m = 0;
  std::int64_t s = 0;
  std::int64_t l = 0;
  std::int64_t e = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
  bool d1_coprime = false;  // gcd(d1, 2^n - 1) == 1

  int n() const noexcept { return 2 * m; }
  friend bool operator==(const NihoParams&, const NihoParams&) = default;
};

/// Requires 2 <= m <= 16 and e >= 1 (PreconditionError otherwise).
NihoParams make_niho(int m, std::int64_t s, std::int64_t l, std::int64_t e);

std::uint64_t gcd(std::int64_t a, std::uint64_t b) noexcept;

/// gcd(2^r + sign_r, 2^s + sign_s) from the closed forms:
///   gcd(2^r-1, 2^s-1) = 2^g - 1,
///   gcd(2^r-1, 2^s+1) = 2^g + 1 if r/g is even, else 1,
///   gcd(2^r+1, 2^s+1) = 2^g + 1 if r/g and s/g are both odd, else 1,
/// with g = gcd(r, s). Requires 1 <= r, s <= 62.
std::uint64_t gcd_mersenne_like(int r, Sign sign_r, int s, Sign sign_s);

bool is_odd_prime(std::uint64_t p) noexcept;

/// Multiplicative order of 2 modulo an odd prime p. Throws PreconditionError
/// if p is not an odd prime.
std::uint64_t order_of_two(std::uint64_t p);

/// True when gcd(p, 2^k + 1) = 1 is guaranteed by the order of 2 mod p:
/// the order r is odd, or r is even and either r/2 does not divide k or
/// 2k/r is even. False means "no guarantee", not "gcd > 1".
bool gcd_p_2k1_guaranteed_one(std::uint64_t p, std::uint64_t k);

/// Inverse of a modulo mod, if gcd(a, mod) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod);

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace nihoperm::exponents
