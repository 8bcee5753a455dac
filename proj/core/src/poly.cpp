#include "nihoperm/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "nihoperm/error.hpp"

namespace nihoperm::gf2n {

std::uint64_t canonical_exponent(int128 k, int n) noexcept {
  const int128 order = (int128{1} << n) - 1;
  int128 r = k % order;
  if (r <= 0) r += order;
  return static_cast<std::uint64_t>(r);
}

SparsePoly::SparsePoly(FieldCtx ctx, std::span<const RawTerm> terms) : ctx_(std::move(ctx)) {
  std::map<std::uint64_t, FieldElement> merged;
  for (const auto& t : terms) {
    if (!ctx_.contains(t.coeff)) throw PreconditionError("coefficient does not belong to the field");
    auto& c = merged[canonical_exponent(t.exp, ctx_.n())];
    c = FieldCtx::add(c, t.coeff);
  }
  for (const auto& [exp, coeff] : merged) {
    if (!coeff.is_zero()) terms_.push_back(Term{coeff, exp});
  }
}

SparsePoly SparsePoly::monomial(FieldCtx ctx, std::int64_t d, FieldElement coeff) {
  const RawTerm t{coeff, d};
  return SparsePoly(std::move(ctx), std::span<const RawTerm>(&t, 1));
}

FieldElement SparsePoly::operator()(FieldElement x) const noexcept {
  FieldElement acc = FieldCtx::zero();
  for (const auto& t : terms_) {
    acc = FieldCtx::add(acc, ctx_.mul(t.coeff, ctx_.pow_unsigned(x, t.exp)));
  }
  return acc;
}

SparsePoly SparsePoly::plus_identity() const {
  std::vector<RawTerm> raw;
  raw.reserve(terms_.size() + 1);
  for (const auto& t : terms_) raw.push_back({t.coeff, t.exp});
  raw.push_back({FieldCtx::one(), 1});
  return SparsePoly(ctx_, std::span<const RawTerm>(raw));
}

SparsePoly SparsePoly::scaled(FieldElement c) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto coeff = ctx_.mul(t.coeff, c);
    if (!coeff.is_zero()) out.push_back({coeff, t.exp});
  }
  return SparsePoly(ctx_, std::move(out));
}

std::string SparsePoly::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += ',';
    out += to_hex(t.coeff);
    out += ':';
    out += std::to_string(t.exp);
  }
  return out;
}

SparsePoly parse_poly(const FieldCtx& ctx, std::string_view text) {
  std::vector<SparsePoly::RawTerm> raw;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("term '" + std::string(item) + "' is not of the form coeffhex:exp");
    }
    const auto coeff = parse_hex(ctx, item.substr(0, colon));
    const auto exp_text = item.substr(colon + 1);
    std::int64_t exp = 0;
    const auto* end = exp_text.data() + exp_text.size();
    const auto [ptr, ec] = std::from_chars(exp_text.data(), end, exp);
    if (exp_text.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("malformed exponent in term '" + std::string(item) + "'");
    }
    raw.push_back({coeff, exp});
  }
  if (raw.empty()) throw ParseError("empty polynomial");
  return SparsePoly(ctx, std::span<const SparsePoly::RawTerm>(raw));
}

}  // namespace nihoperm::gf2n
