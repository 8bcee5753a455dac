#include <gtest/gtest.h>

#include <algorithm>

#include "nihoperm/error.hpp"
#include "nihoperm/unit_circle.hpp"

using namespace nihoperm;
using namespace nihoperm::unit_circle;

namespace {

std::vector<std::uint32_t> bits_of(const std::vector<FieldElement>& v) {
  std::vector<std::uint32_t> out;
  for (auto x : v) out.push_back(x.bits);
  return out;
}

}  // namespace

TEST(UnitCircle, SizeAndMembership) {
  for (int n : {4, 6, 8, 10, 12}) {
    const auto f = gf2n::field_new(n);
    const auto u = build_unit_circle(f);
    EXPECT_EQ(u.order(), f.unit_circle_order());
    for (auto x : u.elements()) EXPECT_EQ(f.pow_unsigned(x, u.order()), f.one());
    std::size_t members = 0;
    for (auto x : gf2n::enumerate(f)) members += u.contains(x);
    EXPECT_EQ(members, u.order());
  }
}

TEST(UnitCircle, KnownElementsInF64) {
  const auto u = build_unit_circle(gf2n::field_new(6));
  EXPECT_EQ(bits_of(u.elements()),
            (std::vector<std::uint32_t>{0x1, 0x6, 0x14, 0x3b, 0x1c, 0xb, 0x3a, 0x1a, 0x1f}));
  EXPECT_EQ(u.at(10), u.at(1));
}

TEST(UnitCircle, MeetsSubfieldOnlyInOne) {
  const auto f = gf2n::field_new(8);
  const auto u = build_unit_circle(f);
  for (auto x : u.elements()) {
    const bool in_subfield = f.frobenius(x, f.m()) == x;
    EXPECT_EQ(in_subfield, x == f.one());
  }
}

TEST(PowerSubgroup, Sizes) {
  EXPECT_EQ(power_subgroup(build_unit_circle(gf2n::field_new(6)), 3).size(), 3u);
  EXPECT_EQ(power_subgroup(build_unit_circle(gf2n::field_new(4)), 3).size(), 5u);
  EXPECT_EQ(power_subgroup(build_unit_circle(gf2n::field_new(6)), 9).size(), 1u);
  EXPECT_THROW(power_subgroup(build_unit_circle(gf2n::field_new(6)), 0), PreconditionError);
}

TEST(ComplementCoset, SizesAndContent) {
  const auto u6 = build_unit_circle(gf2n::field_new(6));
  EXPECT_EQ(bits_of(complement_coset(u6, 3)), (std::vector<std::uint32_t>{0x6, 0x14, 0x1c, 0xb, 0x1a, 0x1f}));
  EXPECT_TRUE(complement_coset(build_unit_circle(gf2n::field_new(4)), 3).empty());
  EXPECT_EQ(complement_coset(u6, 9).size(), 8u);

  const auto f = u6.ctx();
  const auto cubes = power_subgroup(u6, 3);
  for (auto x : complement_coset(u6, 3)) {
    EXPECT_EQ(std::count(cubes.begin(), cubes.end(), x), 0);
    EXPECT_NE(f.pow_unsigned(x, 3), f.one());
  }
}

TEST(Polar, RoundTrip) {
  for (int n : {4, 6, 8}) {
    const auto f = gf2n::field_new(n);
    const auto u = build_unit_circle(f);
    for (auto x : gf2n::enumerate(f)) {
      if (x.is_zero()) continue;
      const auto p = polar_decompose(f, x);
      EXPECT_TRUE(u.contains(p.lambda));
      EXPECT_EQ(f.pow_unsigned(p.y, f.subfield_order_minus_one()), f.one());
      EXPECT_EQ(f.mul(p.lambda, p.y), x);
    }
  }
  const auto f6 = gf2n::field_new(6);
  const auto p = polar_decompose(f6, FieldElement{0x2b});
  EXPECT_EQ(p.lambda, FieldElement{0x3a});
  EXPECT_EQ(p.y, FieldElement{0x18});
  EXPECT_THROW(polar_decompose(f6, FieldElement{0}), PreconditionError);
}
