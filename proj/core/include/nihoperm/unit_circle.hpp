#pragma once

// The unit circle U = { x : x^{2^m + 1} = 1 } of F_{2^{2m}}, its subgroups of
// r-th powers, and the polar decomposition x = lambda * y with lambda in U and
// y in the subfield F_{2^m}.

#include <cstdint>
#include <vector>

#include "nihoperm/gf2n.hpp"

namespace nihoperm::unit_circle {

using gf2n::FieldCtx;
using gf2n::FieldElement;

class UnitCircle {
 public:
  explicit UnitCircle(FieldCtx ctx);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  /// primitive^{2^m - 1}, of order 2^m + 1.
  FieldElement generator() const noexcept { return elements_[1]; }
  /// generator^0, generator^1, ...
  const std::vector<FieldElement>& elements() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  /// generator^j with j taken modulo the order.
  FieldElement at(std::uint64_t j) const noexcept { return elements_[j % elements_.size()]; }

  bool contains(FieldElement x) const noexcept;

 private:
  FieldCtx ctx_;
  std::vector<FieldElement> elements_;
};

UnitCircle build_unit_circle(const FieldCtx& ctx);

/// U^r = { v^r : v in U }, deduplicated, in generator-power order.
std::vector<FieldElement> power_subgroup(const UnitCircle& u, std::uint64_t r);

/// U \ U^r in generator-power order. Membership test:
/// x^{(2^m+1)/gcd(r, 2^m+1)} != 1.
std::vector<FieldElement> complement_coset(const UnitCircle& u, std::uint64_t r);

struct PolarForm {
  FieldElement lambda;  // in U
  FieldElement y;       // in F_{2^m}^*
};

/// y = sqrt(x^{2^m+1}) = x^{(2^m+1) 2^{n-1}}, lambda = x / y. Throws
/// PreconditionError for x = 0.
PolarForm polar_decompose(const FieldCtx& ctx, FieldElement x);

}  // namespace nihoperm::unit_circle
