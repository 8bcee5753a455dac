#pragma once

// Parameter validation and instance generation for the binomial PP and
// monomial CPP constructions, plus the two conjectured trinomials.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nihoperm/exponents.hpp"
#include "nihoperm/gf2n.hpp"
#include "nihoperm/poly.hpp"

namespace nihoperm::families {

using exponents::NihoParams;
using gf2n::FieldElement;
using gf2n::SparsePoly;

enum class FamilyId {
  kTheorem1,
  kProp1Case1,
  kProp1Case2,
  kProp1Case3,
  kProp1Case4,
  kProp1Case5,
  kProp1Case6,
  kProp3,
  kCor2Cpp,
  kCppClass1,
  kCppClass2,
  kCppClass3,
  kCppClass4,
  kCppClass5,
  kCppClass6,
  kConjF,
  kConjG,
};

/// "THM1", "PROP1_CASE3", "CPP_CLASS6", "CONJ_G", ...
std::string_view family_name(FamilyId id) noexcept;
FamilyId prop1_family(int which_case);
FamilyId cpp_class_family(int which_class);

enum Claim : unsigned { kClaimPP = 1u, kClaimCPP = 2u };

/// Conditions for x^{d1} + u x^{d2} to permute F_{2^{2m}}:
/// gcd(d1, 2^n-1) = 1, (i) r = gcd(l, 2^m+1) > 1,
/// (ii) gcd(e+l-2s, 2^m+1) = 1, (iii) u in U \ U^r.
struct Theorem1Conditions {
  bool gcd_d1_ok = false;
  std::uint64_t r = 0;
  bool r_ok = false;
  bool cond_ii_ok = false;
  std::uint64_t eligible_u_count = 0;  // |U \ U^r|

  bool all_ok() const noexcept { return gcd_d1_ok && r_ok && cond_ii_ok; }
  /// Message naming the first failed condition; empty when all hold.
  std::string first_failure() const;
};

struct FamilyInstance {
  FamilyId family;
  int m = 0;
  std::optional<std::int64_t> s, l, e;
  std::optional<std::int64_t> k1, k2, k3;
  std::optional<NihoParams> params;
  std::optional<FieldElement> u;
  SparsePoly poly;
  unsigned claims = 0;

  std::string claim_name() const { return (claims & kClaimCPP) ? "CPP" : "PP"; }
};

Theorem1Conditions check_theorem1(const NihoParams& p);

/// One instance x^{d1} + u x^{d2} per u in U \ U^r. Throws ConstraintError
/// naming the failed condition.
std::vector<FamilyInstance> gen_theorem1(const NihoParams& p, FamilyId id = FamilyId::kTheorem1);

/// (s, l, e) of the given case (1..6). Requires m odd and the case's parity,
/// gcd and integrality constraints, with s a nonnegative integer.
NihoParams prop1_params(int which_case, int m, std::int64_t k1, std::int64_t k2 = 0, std::int64_t k3 = 0);

/// Instances for one case: gen_theorem1 on prop1_params, tagged with the
/// case's family id and k values.
std::vector<FamilyInstance> gen_prop1(int which_case, int m, std::int64_t k1, std::int64_t k2 = 0,
                                      std::int64_t k3 = 0);

/// Conditions for x^{d1} + u x, d1 = s(2^m-1)+1: the l = s, e = 1
/// specialization of check_theorem1.
Theorem1Conditions check_prop3(int m, std::int64_t s);

/// x^{d1} + u x for each u in U \ U^r, claiming PP.
std::vector<FamilyInstance> gen_prop3(int m, std::int64_t s);

/// u^{-1} x^{d1} for each u in U \ U^r, claiming CPP.
std::vector<FamilyInstance> gen_cpp_cor2(int m, std::int64_t s);

struct CppClassParams {
  std::int64_t s;
  std::uint64_t r;  // u ranges over U \ U^r
};

/// Class 1: s = 2^k+1, m and k odd, r = 2^gcd(m,k)+1.
/// Class 2: s = 2^k+1, m and k even, k/t and m/t odd for t = gcd(m,k), r = 2^t+1.
/// Classes 3..6: m odd, s = 6 (and 5 does not divide m), 15, 63, 2^m-2; r = 3.
CppClassParams cpp_class_params(int which_class, int m, std::int64_t k = 0);

/// u^{-1} x^{d} for each u in U \ U^r of the class, claiming CPP.
std::vector<FamilyInstance> gen_cpp_class(int which_class, int m, std::int64_t k = 0);

/// f = x^{2^m+4} + x^{2^{m+1}+3} + x^{2^{m+2}+1} and
/// g = x^{2^m} + x^{2^{m+1}-1} + x^{2^{2m}-2^m+1} over F_{2^{2m}}, m odd >= 3.
/// The field is built with the given size cap.
std::pair<SparsePoly, SparsePoly> conjecture_trinomials(int m, int max_n = gf2n::FieldCtx::kDefaultMaxDegree);

}  // namespace nihoperm::families
