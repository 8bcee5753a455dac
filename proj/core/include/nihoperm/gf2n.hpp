#pragma once

// Arithmetic in the binary field F_{2^n}, n even, polynomial basis.
//
// Elements are single machine words; multiplication is a carry-less
// shift-and-add followed by folding reduction against a fixed low-weight
// irreducible polynomial. There are no log/antilog tables, so a FieldCtx is
// a few words and can be copied freely into worker threads.

#include <array>
#include <compare>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

namespace nihoperm {

// Wide signed integer for unreduced exponent arithmetic.
__extension__ typedef __int128 int128;

}  // namespace nihoperm

namespace nihoperm::gf2n {

struct FieldElement {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Entry of the pinned basis table.
struct FieldDefinition {
  int n;
  std::uint32_t irreducible;  // includes the x^n bit
  std::uint32_t primitive;
};

/// Pinned table of defining polynomials: for each supported even n, the
/// irreducible trinomial x^n + x^k + 1 with least k if one exists, otherwise
/// the pentanomial with least integer encoding. The primitive element is the
/// least element (as an integer) of multiplicative order 2^n - 1.
///
///   n   irreducible               hex        primitive
///   4   x^4+x+1                   0x13       0x2
///   6   x^6+x+1                   0x43       0x2
///   8   x^8+x^4+x^3+x+1           0x11b      0x3
///  10   x^10+x^3+1                0x409      0x2
///  12   x^12+x^3+1                0x1009     0x3
///  14   x^14+x^5+1                0x4021     0x7
///  16   x^16+x^5+x^3+x+1          0x1002b    0x3
///  18   x^18+x^3+1                0x40009    0xa
///  20   x^20+x^3+1                0x100009   0x2
///  22   x^22+x+1                  0x400003   0x2
///  24   x^24+x^4+x^3+x+1          0x100001b  0x2
const std::vector<FieldDefinition>& field_table();

/// F_2-linear map on F_{2^n} evaluated by byte-sliced table lookup.
class LinearMap {
 public:
  LinearMap() = default;
  /// images[i] is the image of the basis vector x^i.
  explicit LinearMap(const std::vector<std::uint32_t>& images);

  FieldElement operator()(FieldElement a) const noexcept {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
      r ^= tables_[i][(a.bits >> (8 * i)) & 0xffu];
    }
    return FieldElement{r};
  }

 private:
  std::vector<std::array<std::uint32_t, 256>> tables_;
};

class FieldCtx {
 public:
  static constexpr int kMinDegree = 4;
  static constexpr int kDefaultMaxDegree = 20;
  static constexpr int kHardMaxDegree = 24;

  explicit FieldCtx(const FieldDefinition& def);

  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ / 2; }
  std::uint32_t irreducible() const noexcept { return irreducible_; }
  FieldElement primitive() const noexcept { return primitive_; }

  /// 2^n
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  /// 2^n - 1
  std::uint64_t group_order() const noexcept { return size() - 1; }
  /// 2^m - 1 and 2^m + 1
  std::uint64_t subfield_order_minus_one() const noexcept { return (std::uint64_t{1} << m()) - 1; }
  std::uint64_t unit_circle_order() const noexcept { return (std::uint64_t{1} << m()) + 1; }

  bool contains(FieldElement a) const noexcept { return (a.bits >> n_) == 0; }
  /// Validating conversion from a raw bit pattern.
  FieldElement element(std::uint64_t bits) const;

  static constexpr FieldElement zero() noexcept { return FieldElement{0}; }
  static constexpr FieldElement one() noexcept { return FieldElement{1}; }

  static constexpr FieldElement add(FieldElement a, FieldElement b) noexcept {
    return FieldElement{a.bits ^ b.bits};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return FieldElement{reduce(clmul(a.bits, b.bits))};
  }
  FieldElement square(FieldElement a) const noexcept { return mul(a, a); }

  /// a^k for any integer k. For a != 0 the exponent is reduced modulo
  /// 2^n - 1; 0^k = 0 for k > 0 and 0^0 = 1. Throws PreconditionError for
  /// a = 0 and k < 0.
  FieldElement pow(FieldElement a, std::int64_t k) const;
  /// Same convention, non-negative exponent, no reduction needed by caller.
  FieldElement pow_unsigned(FieldElement a, std::uint64_t k) const noexcept;
  /// Throws PreconditionError for a = 0.
  FieldElement inverse(FieldElement a) const;
  /// a^{2^k}
  FieldElement frobenius(FieldElement a, int k) const noexcept;

  /// Tr^n_{sub_m}(a) = sum_{i < n/sub_m} a^{2^{i*sub_m}}. Throws
  /// PreconditionError if sub_m does not divide n.
  FieldElement trace(FieldElement a, int sub_m) const;
  /// Tr^n_1(a) as 0 or 1; one AND and a popcount.
  int absolute_trace(FieldElement a) const noexcept {
    return __builtin_popcount(a.bits & trace_mask_) & 1;
  }
  /// The linear map a -> a^{2^k}.
  LinearMap frobenius_map(int k) const;

  /// Field spec as printed in reports: n, irreducible and primitive in hex.
  std::string irreducible_hex() const;
  std::string primitive_hex() const;

 private:
  std::uint64_t clmul(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t r = 0;
    std::uint64_t shifted = a;
    for (int i = 0; i < n_; ++i) {
      r ^= shifted & (std::uint64_t{0} - ((b >> i) & 1u));
      shifted <<= 1;
    }
    return r;
  }

  std::uint32_t reduce(std::uint64_t p) const noexcept {
    while (p >> n_) {
      const std::uint64_t hi = p >> n_;
      p &= low_mask_;
      for (int k = 0; k < tail_count_; ++k) p ^= hi << tail_[k];
    }
    return static_cast<std::uint32_t>(p);
  }

  int n_;
  std::uint32_t irreducible_;
  FieldElement primitive_;
  std::uint64_t low_mask_;
  std::array<int, 4> tail_{};  // exponents of the non-leading terms
  int tail_count_ = 0;
  std::uint32_t trace_mask_ = 0;
};

/// Build the context for F_{2^n} from the pinned table. Throws
/// UnsupportedFieldError when n is odd, below 4, or above max_n (which is
/// itself clamped to FieldCtx::kHardMaxDegree).
FieldCtx field_new(int n, int max_n = FieldCtx::kDefaultMaxDegree);

/// All 2^n elements in increasing bit order, starting at 0.
inline auto enumerate(const FieldCtx& ctx) {
  return std::views::iota(std::uint64_t{0}, ctx.size()) |
         std::views::transform([](std::uint64_t v) { return FieldElement{static_cast<std::uint32_t>(v)}; });
}

/// Lowercase hex without prefix; "0" for zero.
std::string to_hex(FieldElement a);
/// Accepts an optional 0x prefix. Throws ParseError.
FieldElement parse_hex(const FieldCtx& ctx, std::string_view text);

}  // namespace nihoperm::gf2n
