#include <gtest/gtest.h>

#include <random>

#include "nihoperm/error.hpp"
#include "nihoperm/spectra.hpp"
#include "oracles.hpp"

using namespace nihoperm;
using namespace nihoperm::spectra;
using gf2n::field_new;

namespace {

oracle::Terms terms_of(const SparsePoly& p) {
  oracle::Terms out;
  for (const auto& t : p.terms()) out.push_back({t.coeff.bits, t.exp});
  return out;
}

SparsePoly random_poly(const FieldCtx& f, std::mt19937_64& rng, int max_terms) {
  std::vector<SparsePoly::RawTerm> raw;
  const int count = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < count; ++i) {
    raw.push_back({FieldElement{static_cast<std::uint32_t>(1 + rng() % f.group_order())},
                   static_cast<int128>(1 + rng() % f.group_order())});
  }
  return SparsePoly(f, raw);
}

SparsePoly binomial(const FieldCtx& f, std::uint64_t d1, FieldElement u, std::uint64_t d2) {
  return SparsePoly(f, {{FieldCtx::one(), d1}, {u, d2}});
}

const std::vector<std::uint32_t> kNonCubesF64 = {0x6, 0x14, 0x1c, 0xb, 0x1a, 0x1f};

}  // namespace

TEST(Brute, MonomialCubeOnF16) {
  const auto f = field_new(4);
  const auto r = is_permutation_brute(SparsePoly::monomial(f, 3));
  EXPECT_EQ(r.engine, Engine::kBrute);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, Witness::Kind::kCollision);
  ASSERT_EQ(r.witness->elements.size(), 2u);
  EXPECT_EQ(r.witness->elements[0], FieldElement{1});
  EXPECT_EQ(r.witness->elements[1], FieldElement{6});
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.irreducible, 0x13u);
}

TEST(Brute, WitnessIsEarliestPair) {
  const auto f = field_new(4);
  const auto r = is_permutation_brute(SparsePoly::monomial(f, 2).plus_identity());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->elements[0], FieldElement{0});
  EXPECT_EQ(r.witness->elements[1], FieldElement{1});

  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto p = random_poly(f, rng, 3);
    const auto rep = is_permutation_brute(p);
    const auto t = terms_of(p);
    // smallest x2 with an earlier preimage, paired with its least preimage
    std::optional<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t x2 = 0; x2 < 16 && !expected; ++x2) {
      for (std::uint32_t x1 = 0; x1 < x2; ++x1) {
        if (oracle::eval(t, x1, 0x13) == oracle::eval(t, x2, 0x13)) {
          expected = std::pair{x1, x2};
          break;
        }
      }
    }
    EXPECT_EQ(rep.verdict, !expected.has_value());
    if (expected) {
      EXPECT_EQ(rep.witness->elements[0].bits, expected->first);
      EXPECT_EQ(rep.witness->elements[1].bits, expected->second);
    } else {
      EXPECT_FALSE(rep.witness.has_value());
    }
  }
}

TEST(Brute, BinomialFamilyOnF64) {
  const auto f = field_new(6);
  for (auto u : kNonCubesF64) {
    const auto r = is_permutation_brute(binomial(f, 10, FieldElement{u}, 52));
    EXPECT_TRUE(r.verdict) << u;
    EXPECT_FALSE(r.witness.has_value());
  }
  EXPECT_FALSE(is_permutation_brute(binomial(f, 10, FieldCtx::one(), 52)).verdict);
}

TEST(CharSum, KnownValuesForCube) {
  const auto f = field_new(4);
  const auto g = SparsePoly::monomial(f, 3);
  const std::vector<std::int64_t> expected = {16, -8, 4, 4, 4, 4, 4, 4, -8, 4, -8, 4, -8, 4, 4, -8};
  for (std::uint32_t gamma = 0; gamma < 16; ++gamma) {
    EXPECT_EQ(char_sum(g, FieldElement{gamma}), expected[gamma]) << gamma;
  }
}

TEST(CharSum, MatchesOracleAndIdentity) {
  std::mt19937_64 rng(3);
  for (int n : {4, 6, 8}) {
    const auto f = field_new(n);
    for (int i = 0; i < 5; ++i) {
      const auto g = random_poly(f, rng, 3);
      EXPECT_EQ(char_sum(g, FieldCtx::zero()), static_cast<std::int64_t>(f.size()));
      for (std::uint32_t gamma = 0; gamma < f.size(); gamma += 7) {
        EXPECT_EQ(char_sum(g, FieldElement{gamma}), oracle::char_sum(terms_of(g), gamma, f.irreducible()));
      }
    }
  }
  EXPECT_EQ(char_sum(SparsePoly::monomial(field_new(4), 1), FieldElement{1}), 0);
}

TEST(CharSum, Parseval) {
  std::mt19937_64 rng(17);
  for (int n : {4, 6, 8}) {
    const auto f = field_new(n);
    for (int i = 0; i < 6; ++i) {
      const auto g = random_poly(f, rng, 3);
      std::int64_t total = 0;
      for (auto gamma : gf2n::enumerate(f)) {
        const auto s = char_sum(g, gamma);
        total += s * s;
      }
      const auto pairs = oracle::collision_pairs(terms_of(g), f.irreducible());
      EXPECT_EQ(total, static_cast<std::int64_t>(f.size() * pairs));
    }
  }
}

TEST(CharSumEngine, VerdictsAndCap) {
  const auto f = field_new(4);
  const auto r = is_pp_charsum(SparsePoly::monomial(f, 3));
  EXPECT_EQ(r.engine, Engine::kCharSum);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, Witness::Kind::kGamma);
  EXPECT_EQ(r.witness->elements[0], FieldElement{1});
  EXPECT_TRUE(is_pp_charsum(SparsePoly::monomial(f, 7)).verdict);

  const auto big = field_new(14);
  EXPECT_THROW(is_pp_charsum(SparsePoly::monomial(big, 1)), SizeCapError);
  EngineOptions small;
  small.max_quadratic_n = 4;
  EXPECT_THROW(is_pp_charsum(SparsePoly::monomial(field_new(6), 1), small), SizeCapError);
  small.allow_large = true;
  EXPECT_TRUE(is_pp_charsum(SparsePoly::monomial(field_new(6), 1), small).verdict);
}

TEST(CharSumEngine, ThreadCountDoesNotChangeWitness) {
  std::mt19937_64 rng(23);
  const auto f = field_new(8);
  for (int i = 0; i < 8; ++i) {
    const auto g = random_poly(f, rng, 3);
    EngineOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = is_pp_charsum(g, one);
    const auto b = is_pp_charsum(g, four);
    EXPECT_EQ(a.verdict, b.verdict);
    if (a.witness) EXPECT_EQ(a.witness->elements, b.witness->elements);
  }
}

TEST(DeltaCriterion, NihoAndDirectPaths) {
  const auto f = field_new(6);
  for (auto u : kNonCubesF64) {
    const auto p = binomial(f, 10, FieldElement{u}, 52);
    const auto niho = is_pp_delta_criterion(p);
    EXPECT_EQ(niho.engine, Engine::kNiho);
    EXPECT_TRUE(niho.verdict);
    EngineOptions direct;
    direct.force_direct = true;
    const auto d = is_pp_delta_criterion(p, 10, direct);
    EXPECT_EQ(d.engine, Engine::kDeltaCriterion);
    EXPECT_TRUE(d.verdict);
  }
  const auto cube = binomial(f, 10, FieldCtx::one(), 52);
  EngineOptions direct;
  direct.force_direct = true;
  const auto a = is_pp_delta_criterion(cube);
  const auto b = is_pp_delta_criterion(cube, 10, direct);
  EXPECT_EQ(a.verdict, is_permutation_brute(cube).verdict);
  EXPECT_EQ(a.verdict, b.verdict);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(a.witness->kind, Witness::Kind::kDelta);
  EXPECT_EQ(a.witness->elements, b.witness->elements);
}

TEST(DeltaCriterion, Preconditions) {
  const auto f = field_new(4);
  EXPECT_THROW(is_pp_delta_criterion(SparsePoly::monomial(f, 3)), PreconditionError);
  EXPECT_THROW(is_pp_delta_criterion(SparsePoly::monomial(f, 7), 2), PreconditionError);
  EXPECT_EQ(delta_lead_exponent(binomial(f, 3, FieldCtx::one(), 7)), std::optional<std::uint64_t>{7});
  EXPECT_FALSE(delta_lead_exponent(SparsePoly::monomial(f, 5)).has_value());
}

TEST(DeltaCriterion, NormalizesLeadCoefficient) {
  const auto f = field_new(6);
  const SparsePoly p(f, {{FieldElement{0x21}, 10}, {f.mul(FieldElement{0x21}, FieldElement{0x14}), 52}});
  EXPECT_TRUE(is_pp_delta_criterion(p).verdict);
  EXPECT_TRUE(is_permutation_brute(p).verdict);
}

TEST(EngineAgreement, RandomSparsePolynomials) {
  std::mt19937_64 rng(29);
  for (int n : {4, 6, 8}) {
    const auto f = field_new(n);
    for (int i = 0; i < 60; ++i) {
      const auto p = random_poly(f, rng, 3);
      if (p.empty()) continue;
      const bool brute = is_permutation_brute(p).verdict;
      EXPECT_EQ(is_pp_charsum(p).verdict, brute) << p.to_string();
      EXPECT_EQ(brute, oracle::is_permutation(terms_of(p), f.irreducible()));
      if (delta_lead_exponent(p)) {
        EXPECT_EQ(is_pp_delta_criterion(p).verdict, brute) << p.to_string();
        EngineOptions direct;
        direct.force_direct = true;
        EXPECT_EQ(is_pp_delta_criterion(p, direct).verdict, brute) << p.to_string();
      }
    }
  }
}

TEST(NihoCongruent, Detects) {
  const auto f = field_new(6);
  const std::vector<std::uint64_t> yes = {10, 52, 3};
  const std::vector<std::uint64_t> no = {10, 11};
  EXPECT_TRUE(niho_congruent(f, yes));
  EXPECT_FALSE(niho_congruent(f, no));
}

TEST(UnitCircleCount, IdentityWithDirectSum) {
  std::mt19937_64 rng(31);
  for (int n : {4, 6, 8, 10}) {
    const auto f = field_new(n);
    const UnitCircle u(f);
    const std::uint64_t q = f.subfield_order_minus_one();
    for (int i = 0; i < 25; ++i) {
      const int t = 2 + static_cast<int>(rng() % 2);
      std::uint64_t e = 1 + rng() % q;
      while (exponents::gcd(static_cast<std::int64_t>(e), q) != 1) e = 1 + rng() % q;
      std::vector<std::uint64_t> d;
      do {
        d = {gf2n::canonical_exponent(static_cast<int128>((rng() % (q + 2)) * q + e), n)};
      } while (exponents::gcd(static_cast<std::int64_t>(d[0]), f.group_order()) != 1);
      std::vector<FieldElement> w;
      std::vector<SparsePoly::RawTerm> raw = {{FieldCtx::one(), static_cast<int128>(d[0])}};
      for (int k = 1; k < t; ++k) {
        d.push_back(gf2n::canonical_exponent(static_cast<int128>((rng() % (q + 2)) * q + e), n));
        w.push_back(FieldElement{static_cast<std::uint32_t>(1 + rng() % f.group_order())});
        raw.push_back({w.back(), static_cast<int128>(d.back())});
      }
      const SparsePoly g(f, raw);
      EXPECT_EQ(exp_sum_via_niho(u, d, w), char_sum(g, FieldCtx::one()));
      EXPECT_EQ(exp_sum_via_niho(u, d, w),
                (static_cast<std::int64_t>(count_unit_circle_solutions(u, d, w)) - 1) << f.m());
    }
  }
}

TEST(UnitCircleCount, Preconditions) {
  const auto f = field_new(6);
  const UnitCircle u(f);
  const std::vector<std::uint64_t> d = {10, 52};
  const std::vector<FieldElement> none;
  const std::vector<FieldElement> one = {FieldElement{6}};
  EXPECT_THROW(count_unit_circle_solutions(u, d, none), PreconditionError);
  const std::vector<std::uint64_t> noncongruent = {10, 11};
  EXPECT_THROW(count_unit_circle_solutions(u, noncongruent, one), PreconditionError);
  const std::vector<std::uint64_t> shared = {3, 10};
  EXPECT_THROW(count_unit_circle_solutions(u, shared, one), PreconditionError);
}

TEST(UniqueSolution, BinomialInstances) {
  const auto f = field_new(6);
  const UnitCircle circle(f);
  const auto p = exponents::make_niho(3, 1, 3, 3);
  for (auto u : kNonCubesF64) {
    const auto r = unique_solution_check(circle, p, FieldElement{u});
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.engine, Engine::kNiho);
  }
  try {
    unique_solution_check(circle, p, FieldCtx::one());
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_STREQ(e.what(), "condition (iii) u in U\\U^r failed");
  }
  EXPECT_THROW(unique_solution_check(circle, exponents::make_niho(3, 1, 3, 2), FieldElement{6}), ConstraintError);
  EXPECT_THROW(unique_solution_check(circle, exponents::make_niho(3, 1, 2, 3), FieldElement{6}), ConstraintError);
}

TEST(UniqueSolution, ImpliesBrute) {
  const auto f = field_new(10);
  const UnitCircle circle(f);
  const auto p = exponents::make_niho(5, 3, 3, 1);
  const auto eligible = unit_circle::complement_coset(circle, 3);
  ASSERT_EQ(eligible.size(), 22u);
  for (std::size_t i = 0; i < eligible.size(); i += 5) {
    EXPECT_TRUE(unique_solution_check(circle, p, eligible[i]).verdict);
    EXPECT_TRUE(is_permutation_brute(binomial(f, p.d1, eligible[i], p.d2)).verdict);
  }
}

TEST(Cpp, Examples) {
  const auto f4 = field_new(4);
  EXPECT_FALSE(is_cpp(SparsePoly::monomial(f4, 1)).verdict);
  EXPECT_FALSE(is_cpp(SparsePoly::monomial(f4, 2)).verdict);
  const auto f6 = field_new(6);
  for (auto u : kNonCubesF64) {
    EXPECT_TRUE(is_cpp(SparsePoly::monomial(f6, 43, f6.inverse(FieldElement{u}))).verdict) << u;
  }
  const auto r = is_cpp(SparsePoly::monomial(f6, 43, f6.one()));
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->kind, Witness::Kind::kCollision);
}

TEST(Engines, Names) {
  EXPECT_EQ(engine_name(Engine::kBrute), "brute");
  EXPECT_EQ(engine_name(Engine::kCharSum), "charsum");
  EXPECT_EQ(engine_name(Engine::kDeltaCriterion), "delta_criterion");
  EXPECT_EQ(engine_name(Engine::kNiho), "niho");
}
