#pragma once

// Permutation verification engines over F_{2^n}:
//
//   brute             evaluate on every element, detect collisions in a
//                     2^n-bit occupancy set;
//   charsum           sum_x (-1)^{Tr(gamma g(x))} = 0 for every gamma != 0;
//   delta_criterion   the same sums after substituting gamma = delta^{d1}
//                     for a leading exponent d1 coprime to 2^n - 1;
//   niho              the delta criterion with each inner sum replaced by
//                     (N - 1) 2^m, N counting roots of h + h^{2^m} on the
//                     unit circle. Used when all exponents agree mod 2^m - 1.
//
// All sums are exact integers. Loops over gamma/delta may run on several
// threads; the reported witness is always the smallest failing index.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nihoperm/exponents.hpp"
#include "nihoperm/gf2n.hpp"
#include "nihoperm/poly.hpp"
#include "nihoperm/unit_circle.hpp"

namespace nihoperm::spectra {

using gf2n::FieldCtx;
using gf2n::FieldElement;
using gf2n::SparsePoly;
using unit_circle::UnitCircle;

enum class Engine { kBrute, kCharSum, kDeltaCriterion, kNiho };

std::string_view engine_name(Engine e) noexcept;

struct Witness {
  enum class Kind { kCollision, kGamma, kDelta };
  Kind kind;
  /// Colliding pair (x1 < x2) for kCollision, otherwise one element.
  std::vector<FieldElement> elements;
};

struct VerificationReport {
  Engine engine;
  bool verdict = false;
  std::optional<Witness> witness;
  std::chrono::nanoseconds elapsed{0};
  int n = 0;
  std::uint32_t irreducible = 0;
  std::uint32_t primitive = 0;
};

struct EngineOptions {
  /// Largest n for the 2^{2n} engines (charsum, direct delta criterion).
  int max_quadratic_n = 12;
  /// Lift max_quadratic_n entirely.
  bool allow_large = false;
  /// Evaluate every delta sum by direct summation even when the Niho path
  /// applies.
  bool force_direct = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

VerificationReport is_permutation_brute(const SparsePoly& f);

/// sum_x (-1)^{Tr^n_1(gamma g(x))}, in [-2^n, 2^n].
std::int64_t char_sum(const SparsePoly& g, FieldElement gamma);

/// Every sum for gamma != 0 must vanish. Throws SizeCapError when n
/// exceeds the cap.
VerificationReport is_pp_charsum(const SparsePoly& g, const EngineOptions& opts = {});

/// The per-delta criterion with the term of exponent lead_exponent playing
/// the role of x^{d1}. Throws PreconditionError when that exponent is not a
/// term of f or is not coprime to 2^n - 1.
VerificationReport is_pp_delta_criterion(const SparsePoly& f, std::uint64_t lead_exponent,
                                         const EngineOptions& opts = {});
/// Picks the smallest exponent of f coprime to 2^n - 1.
VerificationReport is_pp_delta_criterion(const SparsePoly& f, const EngineOptions& opts = {});
/// The smallest exponent of f coprime to 2^n - 1, if any.
std::optional<std::uint64_t> delta_lead_exponent(const SparsePoly& f);
/// True when every exponent of f is congruent to the lead modulo 2^m - 1.
bool niho_congruent(const FieldCtx& ctx, std::span<const std::uint64_t> exps);

/// N = #{ lambda in U : h(lambda) + h(lambda)^{2^m} = 0 } with
/// h(lambda) = lambda^{d[0]} + sum_{i>=1} w[i-1] lambda^{d[i]}.
/// Requires |w| = |d| - 1, all d[i] congruent mod 2^m - 1, and
/// gcd(d[0], 2^n - 1) = 1 (PreconditionError otherwise).
std::uint64_t count_unit_circle_solutions(const UnitCircle& u, std::span<const std::uint64_t> d,
                                          std::span<const FieldElement> w);

/// (N - 1) 2^m, equal to sum_x (-1)^{Tr(x^{d[0]} + sum w x^{d[i]})}.
std::int64_t exp_sum_via_niho(const UnitCircle& u, std::span<const std::uint64_t> d,
                              std::span<const FieldElement> w);

/// Walks the uniqueness argument for x^{d1} + u x^{d2}: for each delta != 0
/// with w = u delta^{d1-d2}, checks w in U, that w lambda^{d2} + lambda^{d1}
/// never vanishes on U, and that w lambda^{d1+d2} = 1 has exactly one root
/// on U, namely w^{-(d1+d2)^{-1} mod 2^m+1}. Throws ConstraintError when the
/// sufficient conditions on (params, u) do not hold.
VerificationReport unique_solution_check(const UnitCircle& circle, const exponents::NihoParams& params,
                                         FieldElement u, const EngineOptions& opts = {});

/// f and f + x both bijective (brute force). The witness, if any, comes from
/// whichever map failed first (f before f + x).
VerificationReport is_cpp(const SparsePoly& f);

}  // namespace nihoperm::spectra
