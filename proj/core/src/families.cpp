#include "nihoperm/families.hpp"

#include <numeric>

#include "nihoperm/error.hpp"
#include "nihoperm/unit_circle.hpp"

namespace nihoperm::families {

namespace {

using gf2n::FieldCtx;

constexpr std::int64_t kMaxK = 40;

std::int64_t pow2(std::int64_t k) { return std::int64_t{1} << k; }

bool odd(std::int64_t v) { return v % 2 != 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstraintError("constraint violated: " + what);
}

std::string prop3_failure(const Theorem1Conditions& c) {
  if (!c.gcd_d1_ok) return "gcd(d1,2^n-1)=1 failed";
  if (!c.r_ok) return "condition (i) r:=gcd(s,2^m+1)>1 failed";
  if (!c.cond_ii_ok) return "condition (ii) gcd(s-1,2^m+1)=1 failed";
  return {};
}

FieldCtx field_for(int m) { return gf2n::field_new(2 * m, FieldCtx::kHardMaxDegree); }

/// u^{-1} x^{d} for each u in U \ U^r.
std::vector<FamilyInstance> monomial_cpps(FamilyId id, int m, std::int64_t s, std::uint64_t r) {
  const auto ctx = field_for(m);
  const auto params = exponents::make_niho(m, s, s, 1);
  const unit_circle::UnitCircle circle(ctx);
  std::vector<FamilyInstance> out;
  for (const auto u : unit_circle::complement_coset(circle, r)) {
    FamilyInstance inst{id, m, s, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                        params, u, SparsePoly::monomial(ctx, static_cast<std::int64_t>(params.d1), ctx.inverse(u)),
                        kClaimPP | kClaimCPP};
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

std::string_view family_name(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::kTheorem1: return "THM1";
    case FamilyId::kProp1Case1: return "PROP1_CASE1";
    case FamilyId::kProp1Case2: return "PROP1_CASE2";
    case FamilyId::kProp1Case3: return "PROP1_CASE3";
    case FamilyId::kProp1Case4: return "PROP1_CASE4";
    case FamilyId::kProp1Case5: return "PROP1_CASE5";
    case FamilyId::kProp1Case6: return "PROP1_CASE6";
    case FamilyId::kProp3: return "PROP3";
    case FamilyId::kCor2Cpp: return "COR2_CPP";
    case FamilyId::kCppClass1: return "CPP_CLASS1";
    case FamilyId::kCppClass2: return "CPP_CLASS2";
    case FamilyId::kCppClass3: return "CPP_CLASS3";
    case FamilyId::kCppClass4: return "CPP_CLASS4";
    case FamilyId::kCppClass5: return "CPP_CLASS5";
    case FamilyId::kCppClass6: return "CPP_CLASS6";
    case FamilyId::kConjF: return "CONJ_F";
    case FamilyId::kConjG: return "CONJ_G";
  }
  return "UNKNOWN";
}

FamilyId prop1_family(int which_case) {
  if (which_case < 1 || which_case > 6) throw ConstraintError("PROP1 has cases 1..6");
  return static_cast<FamilyId>(static_cast<int>(FamilyId::kProp1Case1) + which_case - 1);
}

FamilyId cpp_class_family(int which_class) {
  if (which_class < 1 || which_class > 6) throw ConstraintError("there are CPP classes 1..6");
  return static_cast<FamilyId>(static_cast<int>(FamilyId::kCppClass1) + which_class - 1);
}

std::string Theorem1Conditions::first_failure() const {
  if (!gcd_d1_ok) return "gcd(d1,2^n-1)=1 failed";
  if (!r_ok) return "condition (i) r:=gcd(l,2^m+1)>1 failed";
  if (!cond_ii_ok) return "condition (ii) gcd(e+l-2s,2^m+1)=1 failed";
  return {};
}

Theorem1Conditions check_theorem1(const NihoParams& p) {
  const std::uint64_t order = (std::uint64_t{1} << p.m) + 1;
  Theorem1Conditions c;
  c.gcd_d1_ok = p.d1_coprime;
  c.r = exponents::gcd(p.l, order);
  c.r_ok = c.r > 1;
  c.cond_ii_ok = exponents::gcd(p.e + p.l - 2 * p.s, order) == 1;
  c.eligible_u_count = order - order / c.r;
  return c;
}

std::vector<FamilyInstance> gen_theorem1(const NihoParams& p, FamilyId id) {
  const auto cond = check_theorem1(p);
  if (!cond.all_ok()) throw ConstraintError(cond.first_failure());

  const auto ctx = field_for(p.m);
  const unit_circle::UnitCircle circle(ctx);
  std::vector<FamilyInstance> out;
  out.reserve(cond.eligible_u_count);
  for (const auto u : unit_circle::complement_coset(circle, cond.r)) {
    SparsePoly poly(ctx, {{FieldCtx::one(), p.d1}, {u, p.d2}});
    out.push_back(FamilyInstance{id, p.m, p.s, p.l, p.e, std::nullopt, std::nullopt, std::nullopt, p, u,
                                 std::move(poly), kClaimPP});
  }
  return out;
}

NihoParams prop1_params(int which_case, int m, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  prop1_family(which_case);
  require(m % 2 == 1, "m must be odd");
  require(k1 >= 0 && k2 >= 0 && k3 >= 0, "k1, k2, k3 must be nonnegative");
  require(k1 <= kMaxK && k2 <= kMaxK && k3 <= kMaxK, "k1, k2, k3 must not exceed " + std::to_string(kMaxK));
  const auto g1 = exponents::gcd(k1, static_cast<std::uint64_t>(m));
  const auto g1p = exponents::gcd(k1 * (k1 + 1), static_cast<std::uint64_t>(m));

  std::int64_t s = 0, l = 0, e = 0;
  switch (which_case) {
    case 1:
    case 2: {
      const bool want_odd = which_case == 1;
      require(odd(k1) == want_odd && odd(k2) == want_odd,
              want_odd ? "k1, k2 are odd" : "k1, k2 are even");
      require(g1 == 1, "gcd(k1,m)=1");
      if (k2 < 1 || k3 < 1) {
        throw ConstraintError("constraint violated: s=2^{k3-1}-2^{k2-1}" + std::string(want_odd ? "+1" : "") +
                              " is not an integer for k2=" + std::to_string(k2) + ", k3=" + std::to_string(k3));
      }
      e = pow2(k3) + 1;
      s = pow2(k3 - 1) - pow2(k2 - 1) + (want_odd ? 1 : 0);
      l = want_odd ? pow2(k1) + 1 : pow2(k1) - 1;
      break;
    }
    case 3:
      require(odd(k1), "k1 is odd");
      require(g1 == 1, "gcd(k1,m)=1");
      e = pow2(k1 + 1) + 1, s = pow2(k1) + 1, l = pow2(k1) + 1;
      break;
    case 4:
      require(!odd(k1), "k1 is even");
      require(g1 == 1, "gcd(k1,m)=1");
      e = pow2(k1 + 1) + 1, s = pow2(k1), l = pow2(k1) - 1;
      break;
    case 5:
      require(odd(k1), "k1 is odd");
      require(g1p == 1, "gcd(k1(k1+1),m)=1");
      e = pow2(k1 + 1) - 1, s = pow2(k1), l = pow2(k1) + 1;
      break;
    case 6:
      require(!odd(k1), "k1 is even");
      require(g1p == 1, "gcd(k1(k1+1),m)=1");
      e = pow2(k1 + 1) - 1, s = pow2(k1) - 1, l = pow2(k1) - 1;
      break;
  }
  require(s >= 0, "s=" + std::to_string(s) + " must be a nonnegative integer");
  return exponents::make_niho(m, s, l, e);
}

std::vector<FamilyInstance> gen_prop1(int which_case, int m, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  const auto params = prop1_params(which_case, m, k1, k2, k3);
  auto out = gen_theorem1(params, prop1_family(which_case));
  const bool uses_k2_k3 = which_case <= 2;
  for (auto& inst : out) {
    inst.k1 = k1;
    if (uses_k2_k3) {
      inst.k2 = k2;
      inst.k3 = k3;
    }
  }
  return out;
}

Theorem1Conditions check_prop3(int m, std::int64_t s) { return check_theorem1(exponents::make_niho(m, s, s, 1)); }

std::vector<FamilyInstance> gen_prop3(int m, std::int64_t s) {
  const auto cond = check_prop3(m, s);
  if (!cond.all_ok()) throw ConstraintError(prop3_failure(cond));
  auto out = gen_theorem1(exponents::make_niho(m, s, s, 1), FamilyId::kProp3);
  return out;
}

std::vector<FamilyInstance> gen_cpp_cor2(int m, std::int64_t s) {
  const auto cond = check_prop3(m, s);
  if (!cond.all_ok()) throw ConstraintError(prop3_failure(cond));
  return monomial_cpps(FamilyId::kCor2Cpp, m, s, cond.r);
}

CppClassParams cpp_class_params(int which_class, int m, std::int64_t k) {
  cpp_class_family(which_class);
  require(m >= 2 && m <= gf2n::FieldCtx::kHardMaxDegree / 2, "m must lie in [2, 12]");
  CppClassParams out{};
  switch (which_class) {
    case 1:
    case 2: {
      const bool want_odd = which_class == 1;
      require(k >= 1 && k <= kMaxK, "k must lie in [1, " + std::to_string(kMaxK) + "]");
      require(odd(m) == want_odd && odd(k) == want_odd, want_odd ? "m and k are odd" : "m and k are even");
      const auto t = static_cast<std::int64_t>(exponents::gcd(k, static_cast<std::uint64_t>(m)));
      if (!want_odd) require(odd(k / t) && odd(m / t), "k/t and m/t are odd for t=gcd(m,k)");
      out = {pow2(k) + 1, static_cast<std::uint64_t>(pow2(t) + 1)};
      break;
    }
    case 3:
      require(odd(m), "m is odd");
      require(m % 5 != 0, "5∤m (5 must not divide m)");
      out = {6, 3};
      break;
    case 4:
      require(odd(m), "m is odd");
      out = {15, 3};
      break;
    case 5:
      require(odd(m), "m is odd");
      out = {63, 3};
      break;
    case 6:
      require(odd(m), "m is odd");
      out = {pow2(m) - 2, 3};
      break;
  }
  const auto cond = check_prop3(m, out.s);
  if (!cond.all_ok()) throw ConstraintError(prop3_failure(cond));
  return out;
}

std::vector<FamilyInstance> gen_cpp_class(int which_class, int m, std::int64_t k) {
  const auto cp = cpp_class_params(which_class, m, k);
  auto out = monomial_cpps(cpp_class_family(which_class), m, cp.s, cp.r);
  if (which_class <= 2) {
    for (auto& inst : out) inst.k1 = k;
  }
  return out;
}

std::pair<SparsePoly, SparsePoly> conjecture_trinomials(int m, int max_n) {
  require(m >= 3 && odd(m), "m must be odd and at least 3");
  const auto ctx = gf2n::field_new(2 * m, max_n);
  const FieldElement one = FieldCtx::one();
  const std::int64_t pm = pow2(m);
  SparsePoly f(ctx, {{one, pm + 4}, {one, 2 * pm + 3}, {one, 4 * pm + 1}});
  SparsePoly g(ctx, {{one, pm}, {one, 2 * pm - 1}, {one, pm * pm - pm + 1}});
  return {std::move(f), std::move(g)};
}

}  // namespace nihoperm::families
