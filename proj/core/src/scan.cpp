#include "nihoperm/scan.hpp"

#include <atomic>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "nihoperm/error.hpp"
#include "nihoperm/unit_circle.hpp"
#include "parallel.hpp"
#include "report_json.hpp"

namespace nihoperm::families {

namespace {

using Tuple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

constexpr int kExhaustiveMaxM = 3;

template <typename Fn>
void append_if_valid(std::vector<FamilyInstance>& out, Fn&& make) {
  try {
    auto batch = make();
    for (auto& inst : batch) out.push_back(std::move(inst));
  } catch (const ConstraintError&) {
    // Parameter tuple outside the family; not an instance.
  }
}

/// Deterministic across standard libraries: raw mt19937_64 output only.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

std::mt19937_64 seeded(std::uint64_t seed, int m, unsigned family) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), family};
  return std::mt19937_64(seq);
}

std::vector<Tuple> theorem1_tuples(const ScanConfig& cfg, int m) {
  std::vector<Tuple> tuples;
  auto passes = [m](const Tuple& t) {
    return check_theorem1(exponents::make_niho(m, std::get<0>(t), std::get<1>(t), std::get<2>(t))).all_ok();
  };
  if (m <= kExhaustiveMaxM) {
    for (std::int64_t s = 0; s <= cfg.exhaustive_max; ++s)
      for (std::int64_t l = 0; l <= cfg.exhaustive_max; ++l)
        for (std::int64_t e = 1; e <= cfg.exhaustive_max; ++e)
          if (passes({s, l, e})) tuples.emplace_back(s, l, e);
    return tuples;
  }
  // Exponents depend on s and l only modulo 2^m + 1 and on e modulo 2^m - 1
  // jointly with s, so these ranges reach every binomial shape.
  const std::uint64_t pm = std::uint64_t{1} << m;
  auto rng = seeded(cfg.seed, m, kScanTheorem1);
  std::set<Tuple> chosen;
  for (std::uint64_t attempts = 0; chosen.size() < cfg.budget && attempts < 1000 * cfg.budget + 1000; ++attempts) {
    const Tuple t{static_cast<std::int64_t>(draw(rng, 0, pm)), static_cast<std::int64_t>(draw(rng, 0, pm)),
                  static_cast<std::int64_t>(draw(rng, 1, pm - 1))};
    if (passes(t)) chosen.insert(t);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<std::int64_t> prop3_values(const ScanConfig& cfg, int m) {
  std::vector<std::int64_t> values;
  if (m <= kExhaustiveMaxM) {
    for (std::int64_t s = 0; s <= cfg.exhaustive_max; ++s)
      if (check_prop3(m, s).all_ok()) values.push_back(s);
    return values;
  }
  const std::uint64_t pm = std::uint64_t{1} << m;
  auto rng = seeded(cfg.seed, m, kScanProp3);
  std::set<std::int64_t> chosen;
  for (std::uint64_t attempts = 0; chosen.size() < cfg.budget && attempts < 1000 * cfg.budget + 1000; ++attempts) {
    const auto s = static_cast<std::int64_t>(draw(rng, 0, pm));
    if (check_prop3(m, s).all_ok()) chosen.insert(s);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<FamilyInstance> generate(const ScanConfig& cfg, int m) {
  std::vector<FamilyInstance> out;
  if (cfg.families & kScanTheorem1) {
    for (const auto& [s, l, e] : theorem1_tuples(cfg, m)) {
      append_if_valid(out, [&] { return gen_theorem1(exponents::make_niho(m, s, l, e)); });
    }
  }
  if ((cfg.families & kScanProp1) && m % 2 == 1) {
    const auto kmax = cfg.prop1_max_k;
    for (int c = 1; c <= 6; ++c) {
      if (c <= 2) {
        for (std::int64_t k1 = 0; k1 <= kmax; ++k1)
          for (std::int64_t k2 = 0; k2 <= kmax; ++k2)
            for (std::int64_t k3 = 0; k3 <= kmax; ++k3)
              append_if_valid(out, [&] { return gen_prop1(c, m, k1, k2, k3); });
      } else {
        for (std::int64_t k1 = 0; k1 <= kmax; ++k1) append_if_valid(out, [&] { return gen_prop1(c, m, k1); });
      }
    }
  }
  if (cfg.families & kScanProp3) {
    const auto values = prop3_values(cfg, m);
    for (const auto s : values) append_if_valid(out, [&] { return gen_prop3(m, s); });
    for (const auto s : values) append_if_valid(out, [&] { return gen_cpp_cor2(m, s); });
  }
  if (cfg.families & kScanCppClasses) {
    for (int c = 1; c <= 6; ++c) {
      if (c <= 2) {
        for (std::int64_t k = 1; k <= 2 * m; ++k) append_if_valid(out, [&] { return gen_cpp_class(c, m, k); });
      } else {
        append_if_valid(out, [&] { return gen_cpp_class(c, m); });
      }
    }
  }
  if ((cfg.families & kScanConjecture) && m % 2 == 1 && m >= 3) {
    auto [f, g] = conjecture_trinomials(m, cfg.max_n);
    out.push_back(FamilyInstance{FamilyId::kConjF, m, {}, {}, {}, {}, {}, {}, {}, {}, std::move(f), kClaimPP});
    out.push_back(FamilyInstance{FamilyId::kConjG, m, {}, {}, {}, {}, {}, {}, {}, {}, std::move(g), kClaimPP});
  }
  return out;
}

bool has_proof_path(FamilyId id) {
  return id == FamilyId::kTheorem1 || id == FamilyId::kProp3 ||
         (id >= FamilyId::kProp1Case1 && id <= FamilyId::kProp1Case6);
}

std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

bool is_monomial_family(FamilyId id) { return id == FamilyId::kCor2Cpp || (id >= FamilyId::kCppClass1 && id <= FamilyId::kCppClass6); }

std::string d1_text(const FamilyInstance& inst) {
  return inst.params ? std::to_string(inst.params->d1) : std::string();
}

std::string d2_text(const FamilyInstance& inst) {
  if (!inst.params || is_monomial_family(inst.family)) return {};
  return std::to_string(inst.params->d2);
}

}  // namespace

unsigned parse_scan_families(std::string_view text) {
  if (text == "all") return kScanAll;
  unsigned mask = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item == "thm1") mask |= kScanTheorem1;
    else if (item == "prop1") mask |= kScanProp1;
    else if (item == "prop3" || item == "cor2") mask |= kScanProp3;
    else if (item == "cpp") mask |= kScanCppClasses;
    else if (item == "conj") mask |= kScanConjecture;
    else if (item == "all") mask |= kScanAll;
    else throw ParseError("unknown family '" + std::string(item) + "'");
  }
  if (mask == 0) throw ParseError("no families selected");
  return mask;
}

ScanResult scan_families(const ScanConfig& cfg) {
  std::vector<FamilyInstance> instances;
  for (const int m : cfg.m_values) {
    if (2 * m > cfg.max_n) {
      throw SizeCapError("m=" + std::to_string(m) + " needs n=" + std::to_string(2 * m) +
                         " which exceeds the size cap n<=" + std::to_string(cfg.max_n));
    }
    auto batch = generate(cfg, m);
    for (auto& inst : batch) instances.push_back(std::move(inst));
  }
  return verify_instances(std::move(instances), cfg.proof_path, cfg.threads);
}

ScanResult verify_instances(std::vector<FamilyInstance> instances, bool proof_path, unsigned threads) {
  ScanResult result;

  // Identical polynomials within one family and m are verified once.
  std::vector<std::size_t> first(instances.size());
  std::map<std::tuple<FamilyId, int, std::string>, std::size_t> seen;
  std::vector<std::size_t> unique;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto key = std::make_tuple(instances[i].family, instances[i].m, instances[i].poly.to_string());
    const auto [it, inserted] = seen.emplace(key, i);
    first[i] = it->second;
    if (inserted) unique.push_back(i);
  }

  std::vector<spectra::VerificationReport> reports(instances.size());
  std::vector<std::optional<bool>> proofs(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < unique.size();) {
      const auto& inst = instances[unique[k]];
      reports[unique[k]] = (inst.claims & kClaimCPP) ? spectra::is_cpp(inst.poly) : spectra::is_permutation_brute(inst.poly);
      if (proof_path && has_proof_path(inst.family) && inst.params && inst.u) {
        const unit_circle::UnitCircle circle(inst.poly.ctx());
        spectra::EngineOptions opts;
        opts.threads = 1;
        proofs[unique[k]] = spectra::unique_solution_check(circle, *inst.params, *inst.u, opts).verdict;
      }
    }
  };
  {
    const unsigned count = std::min<unsigned>(detail::resolve_threads(threads),
                                              std::max<std::size_t>(1, unique.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  result.unique_polynomials = unique.size();
  result.rows.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    ScanRow row{std::move(instances[i]), reports[first[i]], proofs[first[i]], first[i]};
    if (!row.ok()) ++result.failures;
    result.rows.push_back(std::move(row));
  }
  return result;
}

void write_csv_header(std::ostream& out) {
  out << "family_id,m,s,l,e,k1,k2,k3,u_hex,d1,d2,claim,verdict,elapsed_ms\n";
}

void write_csv_row(std::ostream& out, const ScanRow& row, bool with_timing) {
  const auto& inst = row.instance;
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << detail::elapsed_ms(row.report, with_timing);
  out << family_name(inst.family) << ',' << inst.m << ',' << opt(inst.s) << ',' << opt(inst.l) << ','
      << opt(inst.e) << ',' << opt(inst.k1) << ',' << opt(inst.k2) << ',' << opt(inst.k3) << ','
      << (inst.u ? gf2n::to_hex(*inst.u) : std::string()) << ',' << d1_text(inst) << ',' << d2_text(inst) << ','
      << inst.claim_name() << ',' << (row.ok() ? "true" : "false") << ',' << ms.str() << '\n';
}

void write_jsonl_row(std::ostream& out, const ScanRow& row, bool with_timing) {
  const auto& inst = row.instance;
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(inst.family));
  j["m"] = inst.m;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  auto put = [&params](const char* key, const std::optional<std::int64_t>& v) {
    if (v) params[key] = std::to_string(*v);
  };
  put("s", inst.s);
  put("l", inst.l);
  put("e", inst.e);
  put("k1", inst.k1);
  put("k2", inst.k2);
  put("k3", inst.k3);
  if (inst.params) {
    params["d1"] = d1_text(inst);
    if (!is_monomial_family(inst.family)) params["d2"] = d2_text(inst);
  }
  j["params"] = std::move(params);
  j["u"] = inst.u ? nlohmann::ordered_json(gf2n::to_hex(*inst.u)) : nlohmann::ordered_json(nullptr);
  j["poly"] = inst.poly.to_string();
  j["claim"] = inst.claim_name();
  j["proof_ok"] = row.proof_ok ? nlohmann::ordered_json(*row.proof_ok) : nlohmann::ordered_json(nullptr);
  j["report"] = detail::report_object(row.report, with_timing);
  out << j.dump() << '\n';
}

}  // namespace nihoperm::families
