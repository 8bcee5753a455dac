#include <gtest/gtest.h>

#include <random>

#include "nihoperm/error.hpp"
#include "nihoperm/poly.hpp"
#include "oracles.hpp"

using namespace nihoperm;
using namespace nihoperm::gf2n;

TEST(CanonicalExponent, Representatives) {
  EXPECT_EQ(canonical_exponent(0, 6), 63u);
  EXPECT_EQ(canonical_exponent(63, 6), 63u);
  EXPECT_EQ(canonical_exponent(64, 6), 1u);
  EXPECT_EQ(canonical_exponent(-11, 6), 52u);
  EXPECT_EQ(canonical_exponent(-63, 6), 63u);
  EXPECT_EQ(canonical_exponent(10, 6), 10u);
}

TEST(SparsePoly, MergesAndDropsZeros) {
  const auto f = field_new(6);
  const SparsePoly p(f, {{FieldElement{3}, 10}, {FieldElement{5}, 73}, {FieldElement{7}, 52}, {FieldElement{0}, 4}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms()[0], (Term{FieldElement{6}, 10}));
  EXPECT_EQ(p.terms()[1], (Term{FieldElement{7}, 52}));

  const SparsePoly cancel(f, {{FieldElement{3}, 5}, {FieldElement{3}, 68}});
  EXPECT_TRUE(cancel.empty());
}

TEST(SparsePoly, EvalExamples) {
  const auto f = field_new(6);
  const auto id = SparsePoly::monomial(f, 1);
  const auto u = FieldElement{0x14};
  const SparsePoly b(f, {{FieldCtx::one(), 10}, {u, 52}});
  for (auto a : enumerate(f)) {
    EXPECT_EQ(eval_sparse(id, a), a);
    EXPECT_EQ(b(a), f.add(f.pow(a, 10), f.mul(u, f.pow(a, 52))));
  }
  EXPECT_EQ(b(f.zero()), f.zero());
}

TEST(SparsePoly, ZeroMapsToZeroUnderCanonicalExponent) {
  const auto f = field_new(4);
  const auto p = SparsePoly::monomial(f, 0);
  EXPECT_EQ(p.terms()[0].exp, 15u);
  EXPECT_EQ(p(f.zero()), f.zero());
  EXPECT_EQ(p(FieldElement{7}), f.one());
}

TEST(SparsePoly, ForEachValueMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int n : {4, 6, 8, 10}) {
    const auto f = field_new(n);
    for (int trial = 0; trial < 10; ++trial) {
      oracle::Terms terms;
      std::vector<SparsePoly::RawTerm> raw;
      for (int t = 0; t < 3; ++t) {
        const auto c = static_cast<std::uint32_t>(rng() % f.size());
        const auto e = 1 + rng() % f.group_order();
        terms.push_back({c, e});
        raw.push_back({FieldElement{c}, static_cast<int128>(e)});
      }
      const SparsePoly p(f, raw);
      std::size_t visited = 0;
      p.for_each_value([&](FieldElement x, FieldElement v) {
        ++visited;
        ASSERT_EQ(v, p(x));
        ASSERT_EQ(v.bits, oracle::eval(terms, x.bits, f.irreducible()));
      });
      EXPECT_EQ(visited, f.size());
    }
  }
}

TEST(SparsePoly, PlusIdentityAndScaling) {
  const auto f = field_new(4);
  const auto x = SparsePoly::monomial(f, 1);
  EXPECT_TRUE(x.plus_identity().empty());
  const auto sq = SparsePoly::monomial(f, 2).plus_identity();
  EXPECT_EQ(sq.to_string(), "1:1,1:2");
  EXPECT_EQ(SparsePoly::monomial(f, 3).scaled(FieldElement{5}).to_string(), "5:3");
  EXPECT_TRUE(SparsePoly::monomial(f, 3).scaled(FieldElement{0}).empty());
}

TEST(ParsePoly, Forms) {
  const auto f = field_new(6);
  EXPECT_EQ(parse_poly(f, "1:10,14:52").to_string(), "1:10,14:52");
  EXPECT_EQ(parse_poly(f, "1:10,14:-11").to_string(), "1:10,14:52");
  EXPECT_EQ(parse_poly(f, "3:1"), SparsePoly::monomial(f, 1, FieldElement{3}));
  EXPECT_THROW(parse_poly(f, ""), ParseError);
  EXPECT_THROW(parse_poly(f, "1"), ParseError);
  EXPECT_THROW(parse_poly(f, "1:x"), ParseError);
  EXPECT_THROW(parse_poly(f, "40:1"), ParseError);
  EXPECT_THROW(parse_poly(f, "g:1"), ParseError);
}
