#include "nihoperm/report.hpp"

#include "report_json.hpp"

namespace nihoperm {

namespace {

nlohmann::ordered_json field_object(int n, std::uint32_t irreducible, std::uint32_t primitive) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["irreducible_hex"] = gf2n::to_hex(gf2n::FieldElement{irreducible});
  j["primitive_hex"] = gf2n::to_hex(gf2n::FieldElement{primitive});
  return j;
}

}  // namespace

namespace detail {

double elapsed_ms(const spectra::VerificationReport& r, bool with_timing) {
  if (!with_timing) return 0.0;
  return static_cast<double>(r.elapsed.count()) / 1e6;
}

nlohmann::ordered_json report_object(const spectra::VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["engine"] = std::string(spectra::engine_name(r.engine));
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? nlohmann::ordered_json(witness_hex(*r.witness)) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = elapsed_ms(r, with_timing);
  j["field"] = field_object(r.n, r.irreducible, r.primitive);
  return j;
}

}  // namespace detail

std::string field_spec_json(const gf2n::FieldCtx& ctx) {
  return field_object(ctx.n(), ctx.irreducible(), ctx.primitive().bits).dump();
}

std::string report_json(const spectra::VerificationReport& r, bool with_timing) {
  return detail::report_object(r, with_timing).dump();
}

std::string witness_hex(const spectra::Witness& w) {
  std::string out;
  for (const auto e : w.elements) {
    if (!out.empty()) out += ',';
    out += gf2n::to_hex(e);
  }
  return out;
}

}  // namespace nihoperm
