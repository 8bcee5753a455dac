#include "nihoperm/unit_circle.hpp"

#include <numeric>

#include "nihoperm/error.hpp"

namespace nihoperm::unit_circle {

UnitCircle::UnitCircle(FieldCtx ctx) : ctx_(std::move(ctx)) {
  const std::uint64_t order = ctx_.unit_circle_order();
  const FieldElement g = ctx_.pow_unsigned(ctx_.primitive(), ctx_.subfield_order_minus_one());
  elements_.reserve(order);
  FieldElement x = FieldCtx::one();
  for (std::uint64_t j = 0; j < order; ++j) {
    elements_.push_back(x);
    x = ctx_.mul(x, g);
  }
}

bool UnitCircle::contains(FieldElement x) const noexcept {
  return !x.is_zero() && ctx_.pow_unsigned(x, order()) == FieldCtx::one();
}

UnitCircle build_unit_circle(const FieldCtx& ctx) { return UnitCircle(ctx); }

std::vector<FieldElement> power_subgroup(const UnitCircle& u, std::uint64_t r) {
  if (r == 0) throw PreconditionError("power_subgroup: r must be positive");
  // U is cyclic, so U^r is generated by generator^g with g = gcd(r, |U|).
  const std::uint64_t g = std::gcd(r, u.order());
  std::vector<FieldElement> out;
  out.reserve(u.order() / g);
  for (std::uint64_t j = 0; j < u.order(); j += g) out.push_back(u.elements()[j]);
  return out;
}

std::vector<FieldElement> complement_coset(const UnitCircle& u, std::uint64_t r) {
  if (r == 0) throw PreconditionError("complement_coset: r must be positive");
  const std::uint64_t g = std::gcd(r, u.order());
  std::vector<FieldElement> out;
  out.reserve(u.order() - u.order() / g);
  for (std::uint64_t j = 0; j < u.order(); ++j) {
    if (j % g != 0) out.push_back(u.elements()[j]);
  }
  return out;
}

PolarForm polar_decompose(const FieldCtx& ctx, FieldElement x) {
  if (x.is_zero()) throw PreconditionError("polar_decompose: x must be nonzero");
  const std::uint64_t order = ctx.group_order();
  // (2^m + 1) * 2^{n-1} mod (2^n - 1), computed without overflow for n <= 24.
  const std::uint64_t exp = (ctx.unit_circle_order() % order) * ((std::uint64_t{1} << (ctx.n() - 1)) % order) % order;
  const FieldElement y = ctx.pow_unsigned(x, exp);
  return PolarForm{ctx.mul(x, ctx.inverse(y)), y};
}

}  // namespace nihoperm::unit_circle
