#include "nihoperm/gf2n.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "nihoperm/error.hpp"

namespace nihoperm::gf2n {

const std::vector<FieldDefinition>& field_table() {
  static const std::vector<FieldDefinition> table = {
      {4, 0x13, 0x2},        {6, 0x43, 0x2},      {8, 0x11b, 0x3},      {10, 0x409, 0x2},
      {12, 0x1009, 0x3},     {14, 0x4021, 0x7},   {16, 0x1002b, 0x3},   {18, 0x40009, 0xa},
      {20, 0x100009, 0x2},   {22, 0x400003, 0x2}, {24, 0x100001b, 0x2},
  };
  return table;
}

LinearMap::LinearMap(const std::vector<std::uint32_t>& images) {
  const std::size_t bytes = (images.size() + 7) / 8;
  tables_.resize(bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    auto& table = tables_[b];
    table[0] = 0;
    for (std::uint32_t v = 1; v < 256; ++v) {
      // Build incrementally from the lowest set bit.
      const int low = __builtin_ctz(v);
      const std::size_t bit = 8 * b + static_cast<std::size_t>(low);
      const std::uint32_t image = bit < images.size() ? images[bit] : 0;
      table[v] = table[v & (v - 1)] ^ image;
    }
  }
}

FieldCtx::FieldCtx(const FieldDefinition& def)
    : n_(def.n),
      irreducible_(def.irreducible),
      primitive_{def.primitive},
      low_mask_((std::uint64_t{1} << def.n) - 1) {
  for (int k = 0; k < n_; ++k) {
    if ((irreducible_ >> k) & 1u) {
      if (tail_count_ == static_cast<int>(tail_.size())) {
        throw UnsupportedFieldError("defining polynomial has more than five terms");
      }
      tail_[tail_count_++] = k;
    }
  }
  for (int i = 0; i < n_; ++i) {
    const FieldElement basis{std::uint32_t{1} << i};
    if (trace(basis, 1).bits != 0) trace_mask_ |= basis.bits;
  }
}

FieldElement FieldCtx::element(std::uint64_t bits) const {
  if ((bits >> n_) != 0) {
    throw PreconditionError("value does not fit in F_{2^" + std::to_string(n_) + "}");
  }
  return FieldElement{static_cast<std::uint32_t>(bits)};
}

FieldElement FieldCtx::pow_unsigned(FieldElement a, std::uint64_t k) const noexcept {
  if (k == 0) return one();
  if (a.is_zero()) return zero();
  k %= group_order();
  if (k == 0) return one();
  FieldElement result = one();
  FieldElement base = a;
  while (k != 0) {
    if (k & 1u) result = mul(result, base);
    base = square(base);
    k >>= 1;
  }
  return result;
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw PreconditionError("zero has no negative powers");
    return k == 0 ? one() : zero();
  }
  const auto order = static_cast<std::int64_t>(group_order());
  std::int64_t reduced = k % order;
  if (reduced < 0) reduced += order;
  return pow_unsigned(a, static_cast<std::uint64_t>(reduced));
}

FieldElement FieldCtx::inverse(FieldElement a) const {
  if (a.is_zero()) throw PreconditionError("zero is not invertible");
  return pow_unsigned(a, group_order() - 1);
}

FieldElement FieldCtx::frobenius(FieldElement a, int k) const noexcept {
  for (int i = 0; i < k; ++i) a = square(a);
  return a;
}

FieldElement FieldCtx::trace(FieldElement a, int sub_m) const {
  if (sub_m <= 0 || n_ % sub_m != 0) {
    throw PreconditionError("trace: " + std::to_string(sub_m) + " does not divide " + std::to_string(n_));
  }
  FieldElement sum = zero();
  FieldElement term = a;
  for (int i = 0; i < n_ / sub_m; ++i) {
    sum = add(sum, term);
    term = frobenius(term, sub_m);
  }
  return sum;
}

LinearMap FieldCtx::frobenius_map(int k) const {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) images[i] = frobenius(FieldElement{std::uint32_t{1} << i}, k).bits;
  return LinearMap(images);
}

std::string FieldCtx::irreducible_hex() const { return to_hex(FieldElement{irreducible_}); }
std::string FieldCtx::primitive_hex() const { return to_hex(primitive_); }

FieldCtx field_new(int n, int max_n) {
  const int cap = std::min(max_n, FieldCtx::kHardMaxDegree);
  if (n % 2 != 0) {
    throw UnsupportedFieldError("unsupported n=" + std::to_string(n) + ": the extension degree must be even");
  }
  if (n < FieldCtx::kMinDegree || n > cap) {
    throw UnsupportedFieldError("unsupported n=" + std::to_string(n) + ": supported range is " +
                                std::to_string(FieldCtx::kMinDegree) + ".." + std::to_string(cap));
  }
  const auto& table = field_table();
  const auto it = std::find_if(table.begin(), table.end(), [n](const FieldDefinition& d) { return d.n == n; });
  return FieldCtx(*it);
}

std::string to_hex(FieldElement a) {
  char buf[16];
  const int len = std::snprintf(buf, sizeof buf, "%x", a.bits);
  return std::string(buf, static_cast<std::size_t>(len));
}

FieldElement parse_hex(const FieldCtx& ctx, std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, 16);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("malformed hex element '" + std::string(text) + "'");
  }
  if ((value >> ctx.n()) != 0) {
    throw ParseError("element 0x" + std::string(text) + " does not fit in F_{2^" + std::to_string(ctx.n()) + "}");
  }
  return FieldElement{static_cast<std::uint32_t>(value)};
}

}  // namespace nihoperm::gf2n
