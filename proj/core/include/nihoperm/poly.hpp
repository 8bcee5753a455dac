#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nihoperm/gf2n.hpp"

namespace nihoperm::gf2n {

/// Maps an integer exponent to its representative in [1, 2^n - 1] modulo
/// 2^n - 1 (0 maps to 2^n - 1). The induced map on F_{2^n} is unchanged
/// because every exponent used here is positive and 0 -> 0 either way.
std::uint64_t canonical_exponent(int128 k, int n) noexcept;

struct Term {
  FieldElement coeff;
  std::uint64_t exp;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial sum coeff_i * x^{exp_i} over F_{2^n}. Terms are kept with
/// canonical exponents, strictly increasing, no zero coefficients.
class SparsePoly {
 public:
  struct RawTerm {
    FieldElement coeff;
    int128 exp;
  };

  /// Canonicalizes exponents, merges equal exponents by addition and drops
  /// zero coefficients.
  SparsePoly(FieldCtx ctx, std::span<const RawTerm> terms);
  SparsePoly(FieldCtx ctx, std::initializer_list<RawTerm> terms)
      : SparsePoly(std::move(ctx), std::span<const RawTerm>(terms.begin(), terms.size())) {}

  /// x^d
  static SparsePoly monomial(FieldCtx ctx, std::int64_t d, FieldElement coeff = FieldCtx::one());

  const FieldCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  FieldElement operator()(FieldElement x) const noexcept;

  /// Calls fn(x, f(x)) for every x: first x = 0, then x = g^0, g^1, ...,
  /// g^{2^n-2} for the primitive element g. Each term is advanced by one
  /// multiplication per step instead of a full exponentiation.
  template <typename Fn>
  void for_each_value(Fn&& fn) const {
    fn(FieldCtx::zero(), (*this)(FieldCtx::zero()));
    std::vector<FieldElement> current, step;
    for (const auto& t : terms_) {
      current.push_back(t.coeff);
      step.push_back(ctx_.pow_unsigned(ctx_.primitive(), t.exp));
    }
    FieldElement x = FieldCtx::one();
    const FieldElement g = ctx_.primitive();
    for (std::uint64_t i = 0; i < ctx_.group_order(); ++i) {
      FieldElement value = FieldCtx::zero();
      for (std::size_t k = 0; k < current.size(); ++k) {
        value = FieldCtx::add(value, current[k]);
        current[k] = ctx_.mul(current[k], step[k]);
      }
      fn(x, value);
      x = ctx_.mul(x, g);
    }
  }

  /// this + x, merging with an existing x^1 term.
  SparsePoly plus_identity() const;
  /// Every coefficient multiplied by c.
  SparsePoly scaled(FieldElement c) const;

  /// "coeffhex:exp,coeffhex:exp"; "" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.ctx_.n() == b.ctx_.n() && a.terms_ == b.terms_;
  }

 private:
  SparsePoly(FieldCtx ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  FieldCtx ctx_;
  std::vector<Term> terms_;
};

/// p(x) with the pow convention of FieldCtx::pow.
inline FieldElement eval_sparse(const SparsePoly& p, FieldElement x) noexcept { return p(x); }

/// Parses "coeffhex:exp[,coeffhex:exp...]" with decimal (possibly negative)
/// exponents. Throws ParseError.
SparsePoly parse_poly(const FieldCtx& ctx, std::string_view text);

}  // namespace nihoperm::gf2n
