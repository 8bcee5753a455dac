#include "nihoperm/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "nihoperm/error.hpp"
#include "parallel.hpp"

namespace nihoperm::spectra {

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport make_report(Engine engine, const FieldCtx& ctx) {
  VerificationReport r;
  r.engine = engine;
  r.n = ctx.n();
  r.irreducible = ctx.irreducible();
  r.primitive = ctx.primitive().bits;
  return r;
}

void finish(VerificationReport& r, Clock::time_point start, std::optional<Witness> witness) {
  r.verdict = !witness.has_value();
  r.witness = std::move(witness);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

/// Bit i holds Tr(w x^i), so Tr(w y) = parity(y & mask).
std::uint32_t trace_form_mask(const FieldCtx& ctx, FieldElement w) {
  std::uint32_t mask = 0;
  for (int i = 0; i < ctx.n(); ++i) {
    if (ctx.absolute_trace(ctx.mul(w, FieldElement{std::uint32_t{1} << i}))) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

inline int parity(std::uint32_t v) noexcept { return __builtin_popcount(v) & 1; }

void check_quadratic_cap(const FieldCtx& ctx, const EngineOptions& opts, std::string_view engine) {
  if (!opts.allow_large && ctx.n() > opts.max_quadratic_n) {
    throw SizeCapError(std::string(engine) + ": n=" + std::to_string(ctx.n()) + " exceeds the size cap n<=" +
                       std::to_string(opts.max_quadratic_n) + " (override to run anyway)");
  }
}

std::vector<std::uint32_t> value_table(const SparsePoly& f) {
  std::vector<std::uint32_t> values(f.ctx().size());
  f.for_each_value([&](FieldElement x, FieldElement fx) { values[x.bits] = fx.bits; });
  return values;
}

std::vector<std::uint32_t> power_table(const FieldCtx& ctx, std::uint64_t d) {
  std::vector<std::uint32_t> values(ctx.size());
  SparsePoly::monomial(ctx, static_cast<std::int64_t>(d))
      .for_each_value([&](FieldElement x, FieldElement xd) { values[x.bits] = xd.bits; });
  return values;
}

/// Evaluates h on the unit circle through generator indices: lambda_j^d is
/// the element at index j*d mod |U|.
struct CircleCounter {
  const UnitCircle& circle;
  gf2n::LinearMap frob_m;
  std::vector<std::uint64_t> multipliers;  // d[i] mod |U|

  CircleCounter(const UnitCircle& u, std::span<const std::uint64_t> d)
      : circle(u), frob_m(u.ctx().frobenius_map(u.ctx().m())) {
    for (const auto di : d) multipliers.push_back(di % u.order());
  }

  /// w[i] pairs with multipliers[i + 1].
  std::uint64_t count(std::span<const FieldElement> w) const {
    const auto& ctx = circle.ctx();
    const std::uint64_t order = circle.order();
    std::uint64_t solutions = 0;
    for (std::uint64_t j = 0; j < order; ++j) {
      FieldElement h = circle.at(j * multipliers[0]);
      for (std::size_t i = 0; i < w.size(); ++i) {
        h = FieldCtx::add(h, ctx.mul(w[i], circle.at(j * multipliers[i + 1])));
      }
      if (frob_m(h) == h) ++solutions;
    }
    return solutions;
  }
};

/// Every delta != 0 enters the Niho-path checks only through
/// mu = delta^{2^m-1}, which lies in U and runs over all of U. fails_at(j)
/// is evaluated once for mu = generator^j; the result is the least delta
/// whose mu fails.
template <typename Fails>
std::optional<std::uint64_t> first_failing_delta(const UnitCircle& circle, unsigned threads, const Fails& fails_at) {
  const auto& ctx = circle.ctx();
  const std::uint64_t order = circle.order();
  std::vector<std::uint8_t> bad(order, 0);
  detail::parallel_for(order, threads, [&](std::uint64_t j) { bad[j] = fails_at(j) ? 1 : 0; });
  if (std::none_of(bad.begin(), bad.end(), [](std::uint8_t b) { return b != 0; })) return std::nullopt;

  std::unordered_map<std::uint32_t, std::uint64_t> index;
  for (std::uint64_t j = 0; j < order; ++j) index.emplace(circle.at(j).bits, j);
  const std::uint64_t q = ctx.subfield_order_minus_one();
  for (std::uint64_t delta = 1; delta < ctx.size(); ++delta) {
    const auto mu = ctx.pow_unsigned(FieldElement{static_cast<std::uint32_t>(delta)}, q);
    if (bad[index.at(mu.bits)]) return delta;
  }
  return std::nullopt;
}

void validate_niho_inputs(const UnitCircle& u, std::span<const std::uint64_t> d, std::span<const FieldElement> w) {
  const auto& ctx = u.ctx();
  if (d.empty() || w.size() + 1 != d.size()) {
    throw PreconditionError("expected one coefficient for every exponent after the first");
  }
  if (std::gcd(d[0], ctx.group_order()) != 1) {
    throw PreconditionError("gcd(d1, 2^n-1) must be 1");
  }
  if (!niho_congruent(ctx, d)) {
    throw PreconditionError("exponents are not congruent modulo 2^m-1");
  }
}

}  // namespace

std::string_view engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::kBrute: return "brute";
    case Engine::kCharSum: return "charsum";
    case Engine::kDeltaCriterion: return "delta_criterion";
    case Engine::kNiho: return "niho";
  }
  return "unknown";
}

VerificationReport is_permutation_brute(const SparsePoly& f) {
  const auto start = Clock::now();
  const auto& ctx = f.ctx();
  auto report = make_report(Engine::kBrute, ctx);

  std::vector<std::uint64_t> seen((ctx.size() + 63) / 64, 0);
  bool collision = false;
  f.for_each_value([&](FieldElement, FieldElement fx) {
    std::uint64_t& word = seen[fx.bits >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (fx.bits & 63u);
    collision = collision || (word & bit) != 0;
    word |= bit;
  });

  std::optional<Witness> witness;
  if (collision) {
    // Rescan in increasing order for the pair with the smallest second
    // element; the first element is the least preimage of the same value.
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto x : gf2n::enumerate(ctx)) {
      const std::uint32_t v = f(x).bits;
      std::uint64_t& word = seen[v >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (v & 63u);
      if (word & bit) {
        for (const auto y : gf2n::enumerate(ctx)) {
          if (f(y).bits == v) {
            witness = Witness{Witness::Kind::kCollision, {y, x}};
            break;
          }
        }
        break;
      }
      word |= bit;
    }
  }
  finish(report, start, std::move(witness));
  return report;
}

std::int64_t char_sum(const SparsePoly& g, FieldElement gamma) {
  const auto& ctx = g.ctx();
  std::int64_t sum = 0;
  for (const auto x : gf2n::enumerate(ctx)) sum += ctx.absolute_trace(ctx.mul(gamma, g(x))) ? -1 : 1;
  return sum;
}

VerificationReport is_pp_charsum(const SparsePoly& g, const EngineOptions& opts) {
  const auto& ctx = g.ctx();
  check_quadratic_cap(ctx, opts, "charsum");
  const auto start = Clock::now();
  auto report = make_report(Engine::kCharSum, ctx);

  const auto values = value_table(g);
  const auto failing = detail::parallel_find_first(1, ctx.size(), opts.threads, [&](std::uint64_t gamma) {
    const std::uint32_t mask = trace_form_mask(ctx, FieldElement{static_cast<std::uint32_t>(gamma)});
    std::int64_t ones = 0;
    for (const auto v : values) ones += parity(v & mask);
    return 2 * ones != static_cast<std::int64_t>(values.size());
  });

  std::optional<Witness> witness;
  if (failing) witness = Witness{Witness::Kind::kGamma, {FieldElement{static_cast<std::uint32_t>(*failing)}}};
  finish(report, start, std::move(witness));
  return report;
}

bool niho_congruent(const FieldCtx& ctx, std::span<const std::uint64_t> exps) {
  const std::uint64_t q = ctx.subfield_order_minus_one();
  return std::all_of(exps.begin(), exps.end(), [&](std::uint64_t d) { return d % q == exps.front() % q; });
}

std::optional<std::uint64_t> delta_lead_exponent(const SparsePoly& f) {
  for (const auto& t : f.terms()) {
    if (std::gcd(t.exp, f.ctx().group_order()) == 1) return t.exp;
  }
  return std::nullopt;
}

VerificationReport is_pp_delta_criterion(const SparsePoly& f, const EngineOptions& opts) {
  const auto lead = delta_lead_exponent(f);
  if (!lead) throw PreconditionError("delta criterion: no exponent of f is coprime to 2^n-1");
  return is_pp_delta_criterion(f, *lead, opts);
}

VerificationReport is_pp_delta_criterion(const SparsePoly& f, std::uint64_t lead_exponent,
                                         const EngineOptions& opts) {
  const auto& ctx = f.ctx();
  const auto order = ctx.group_order();
  const auto lead_it = std::find_if(f.terms().begin(), f.terms().end(),
                                    [&](const gf2n::Term& t) { return t.exp == lead_exponent; });
  if (lead_it == f.terms().end()) {
    throw PreconditionError("delta criterion: x^" + std::to_string(lead_exponent) + " is not a term of f");
  }
  if (std::gcd(lead_exponent, order) != 1) {
    throw PreconditionError("delta criterion: gcd(d1, 2^n-1) != 1 for d1=" + std::to_string(lead_exponent));
  }

  // Normalize to a monic leading term; a scalar multiple of a PP is a PP.
  const FieldElement lead_inv = ctx.inverse(lead_it->coeff);
  std::vector<std::uint64_t> exps{lead_exponent};
  std::vector<FieldElement> coeffs;
  std::vector<std::uint64_t> shifts;  // d1 - d_i mod 2^n - 1
  for (const auto& t : f.terms()) {
    if (t.exp == lead_exponent) continue;
    exps.push_back(t.exp);
    coeffs.push_back(ctx.mul(t.coeff, lead_inv));
    shifts.push_back((lead_exponent + order - t.exp % order) % order);
  }

  const bool use_niho = !opts.force_direct && niho_congruent(ctx, exps);
  if (!use_niho) check_quadratic_cap(ctx, opts, "delta_criterion");

  const auto start = Clock::now();
  auto report = make_report(use_niho ? Engine::kNiho : Engine::kDeltaCriterion, ctx);

  auto weights_for = [&](FieldElement delta) {
    std::vector<FieldElement> w(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) w[i] = ctx.mul(coeffs[i], ctx.pow_unsigned(delta, shifts[i]));
    return w;
  };

  std::optional<std::uint64_t> failing;
  if (use_niho) {
    // d1 - d_i = c_i (2^m - 1), so delta^{d1 - d_i} = mu^{c_i}.
    const UnitCircle circle(ctx);
    const CircleCounter counter(circle, exps);
    const std::uint64_t q = ctx.subfield_order_minus_one();
    failing = first_failing_delta(circle, opts.threads, [&](std::uint64_t j) {
      std::vector<FieldElement> w(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) w[i] = ctx.mul(coeffs[i], circle.at(j * (shifts[i] / q)));
      return counter.count(w) != 1;
    });
  } else {
    std::vector<std::vector<std::uint32_t>> powers;
    for (const auto d : exps) powers.push_back(power_table(ctx, d));
    const std::uint32_t lead_mask = trace_form_mask(ctx, FieldCtx::one());
    failing = detail::parallel_find_first(1, ctx.size(), opts.threads, [&](std::uint64_t delta) {
      const auto w = weights_for(FieldElement{static_cast<std::uint32_t>(delta)});
      std::vector<std::uint32_t> masks{lead_mask};
      for (const auto wi : w) masks.push_back(trace_form_mask(ctx, wi));
      std::int64_t ones = 0;
      for (std::uint64_t x = 0; x < ctx.size(); ++x) {
        int bit = 0;
        for (std::size_t i = 0; i < masks.size(); ++i) bit ^= parity(powers[i][x] & masks[i]);
        ones += bit;
      }
      return 2 * ones != static_cast<std::int64_t>(ctx.size());
    });
  }

  std::optional<Witness> witness;
  if (failing) witness = Witness{Witness::Kind::kDelta, {FieldElement{static_cast<std::uint32_t>(*failing)}}};
  finish(report, start, std::move(witness));
  return report;
}

std::uint64_t count_unit_circle_solutions(const UnitCircle& u, std::span<const std::uint64_t> d,
                                          std::span<const FieldElement> w) {
  validate_niho_inputs(u, d, w);
  return CircleCounter(u, d).count(w);
}

std::int64_t exp_sum_via_niho(const UnitCircle& u, std::span<const std::uint64_t> d,
                              std::span<const FieldElement> w) {
  const auto solutions = static_cast<std::int64_t>(count_unit_circle_solutions(u, d, w));
  return (solutions - 1) * (std::int64_t{1} << u.ctx().m());
}

VerificationReport unique_solution_check(const UnitCircle& circle, const exponents::NihoParams& params,
                                         FieldElement u, const EngineOptions& opts) {
  const auto& ctx = circle.ctx();
  if (params.n() != ctx.n()) throw PreconditionError("parameters do not match the field");
  const std::uint64_t order = circle.order();
  const std::uint64_t r = exponents::gcd(params.l, order);
  if (!params.d1_coprime) throw ConstraintError("gcd(d1,2^n-1)=1 failed");
  if (r <= 1) throw ConstraintError("condition (i) r:=gcd(l,2^m+1)>1 failed");
  if (exponents::gcd(params.e + params.l - 2 * params.s, order) != 1) {
    throw ConstraintError("condition (ii) gcd(e+l-2s,2^m+1)=1 failed");
  }
  if (!circle.contains(u) || ctx.pow_unsigned(u, order / r) == FieldCtx::one()) {
    throw ConstraintError("condition (iii) u in U\\U^r failed");
  }

  const auto start = Clock::now();
  auto report = make_report(Engine::kNiho, ctx);

  const std::uint64_t group = ctx.group_order();
  const std::uint64_t shift = (params.d1 + group - params.d2) % group;
  const std::uint64_t a1 = params.d1 % order;
  const std::uint64_t a2 = params.d2 % order;
  const std::uint64_t sum = (a1 + a2) % order;
  const std::uint64_t root_exp = exponents::mod_inverse(sum, order);

  // delta^{d1-d2} = mu^{shift / (2^m-1)} with mu = delta^{2^m-1}.
  const std::uint64_t mu_exp = (shift / ctx.subfield_order_minus_one()) % order;
  const auto failing = first_failing_delta(circle, opts.threads, [&](std::uint64_t index) {
    const FieldElement w = ctx.mul(u, circle.at(index * mu_exp));
    if (!circle.contains(w)) return true;
    std::uint64_t roots = 0;
    FieldElement root{};
    for (std::uint64_t j = 0; j < order; ++j) {
      const FieldElement first = FieldCtx::add(ctx.mul(w, circle.at(j * a2)), circle.at(j * a1));
      if (first.is_zero()) return true;
      if (ctx.mul(w, circle.at(j * sum)) == FieldCtx::one()) {
        ++roots;
        root = circle.at(j);
      }
    }
    if (roots != 1) return true;
    // w^{-(d1+d2)^{-1}}; the exponent is reduced modulo |U| since w lies in U.
    return root != ctx.pow_unsigned(w, (order - root_exp) % order);
  });

  std::optional<Witness> witness;
  if (failing) witness = Witness{Witness::Kind::kDelta, {FieldElement{static_cast<std::uint32_t>(*failing)}}};
  finish(report, start, std::move(witness));
  return report;
}

VerificationReport is_cpp(const SparsePoly& f) {
  const auto start = Clock::now();
  auto report = is_permutation_brute(f);
  if (report.verdict) {
    auto shifted = is_permutation_brute(f.plus_identity());
    report.verdict = shifted.verdict;
    report.witness = std::move(shifted.witness);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

}  // namespace nihoperm::spectra
