#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "nihoperm/error.hpp"
#include "nihoperm/families.hpp"
#include "nihoperm/gf2n.hpp"
#include "nihoperm/poly.hpp"
#include "nihoperm/report.hpp"
#include "nihoperm/scan.hpp"
#include "nihoperm/spectra.hpp"

namespace nihoperm::cli {

namespace {

using families::FamilyInstance;
using gf2n::SparsePoly;
using spectra::VerificationReport;

constexpr const char* kMaxNEnv = "NIHO_PERM_MAX_N";

struct CommonOptions {
  std::string format;
  bool timing = false;
  std::optional<int> max_n;
  unsigned threads = 0;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), what));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (out.empty()) throw ParseError("empty " + std::string(what) + " list");
  return out;
}

/// --max-n, then NIHO_PERM_MAX_N, then the library default.
int size_cap(const CommonOptions& common) {
  if (common.max_n) return *common.max_n;
  if (const char* env = std::getenv(kMaxNEnv); env != nullptr && *env != '\0') {
    return parse_int(env, kMaxNEnv);
  }
  return gf2n::FieldCtx::kDefaultMaxDegree;
}

void add_common(CLI::App* sub, CommonOptions& common, const std::string& default_format,
                const std::vector<std::string>& formats) {
  common.format = default_format;
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_flag("--timing", common.timing, "Report measured elapsed_ms (otherwise 0, for reproducible output)");
  sub->add_option("--max-n", common.max_n, std::string("Field size cap (overrides ") + kMaxNEnv + ")");
  sub->add_option("--threads", common.threads, "Worker threads (0 = hardware concurrency)");
}

std::string verdict_word(bool pp) { return pp ? "PP" : "not PP"; }

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  int n = 0;
  std::string poly;
  std::string engine = "default";
  bool cpp = false;
  bool direct = false;
  bool allow_large = false;
  CommonOptions common;
};

struct EngineRun {
  std::string map;  // "f" or "f+x"
  std::string poly;
  VerificationReport report;
};

std::vector<EngineRun> run_engines(const VerifyOptions& o, const std::string& label, const SparsePoly& f) {
  spectra::EngineOptions opts;
  opts.allow_large = o.allow_large;
  opts.force_direct = o.direct;
  opts.threads = o.common.threads;

  const bool explicit_engine = o.engine != "default" && o.engine != "all";
  std::vector<EngineRun> runs;
  auto push = [&](VerificationReport r) { runs.push_back({label, f.to_string(), std::move(r)}); };

  if (o.engine == "default" || o.engine == "all" || o.engine == "brute") push(spectra::is_permutation_brute(f));
  if (o.engine == "charsum" || (o.engine == "all" && (o.allow_large || f.ctx().n() <= opts.max_quadratic_n))) {
    push(spectra::is_pp_charsum(f, opts));
  }
  if (o.engine == "delta" || o.engine == "default" || o.engine == "all") {
    const auto lead = spectra::delta_lead_exponent(f);
    if (!lead) {
      if (explicit_engine) throw PreconditionError("delta criterion needs an exponent coprime to 2^n-1");
    } else {
      std::vector<std::uint64_t> exps;
      for (const auto& t : f.terms()) exps.push_back(t.exp);
      const bool niho = !o.direct && spectra::niho_congruent(f.ctx(), exps);
      const bool within_cap = o.allow_large || f.ctx().n() <= opts.max_quadratic_n;
      if (niho || within_cap || explicit_engine) push(spectra::is_pp_delta_criterion(f, *lead, opts));
    }
  }
  return runs;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto ctx = gf2n::field_new(o.n, size_cap(o.common));
  const auto f = gf2n::parse_poly(ctx, o.poly);

  auto runs = run_engines(o, "f", f);
  if (o.cpp) {
    auto shifted = run_engines(o, "f+x", f.plus_identity());
    runs.insert(runs.end(), shifted.begin(), shifted.end());
  }

  bool agree = true;
  bool verdict = true;
  for (const std::string map : {"f", "f+x"}) {
    std::optional<bool> first;
    for (const auto& run : runs) {
      if (run.map != map) continue;
      if (!first) first = run.report.verdict;
      if (*first != run.report.verdict) agree = false;
      verdict = verdict && run.report.verdict;
    }
  }
  const std::string claim = o.cpp ? "CPP" : "PP";

  if (o.common.format == "json") {
    for (const auto& run : runs) {
      nlohmann::ordered_json j;
      j["map"] = run.map;
      j["poly"] = run.poly;
      j["report"] = nlohmann::ordered_json::parse(report_json(run.report, o.common.timing));
      out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["claim"] = claim;
    summary["verdict"] = verdict;
    summary["agree"] = agree;
    out << summary.dump() << '\n';
  } else {
    out << "field n=" << ctx.n() << " irreducible=0x" << ctx.irreducible_hex() << " primitive=0x"
        << ctx.primitive_hex() << '\n';
    for (const auto& run : runs) {
      out << std::left << std::setw(4) << run.map << std::setw(16) << spectra::engine_name(run.report.engine)
          << std::setw(8) << verdict_word(run.report.verdict);
      if (run.report.witness) out << " witness=" << witness_hex(*run.report.witness);
      if (o.common.timing) {
        out << " elapsed_ms=" << std::fixed << std::setprecision(3)
            << static_cast<double>(run.report.elapsed.count()) / 1e6;
      }
      out << '\n';
    }
    out << claim << ": " << (verdict ? "verified" : "refuted") << (agree ? "" : " (ENGINE DISAGREEMENT)") << '\n';
  }
  if (!agree) return kDisagreement;
  return verdict ? kOk : kClaimFailed;
}

// -------------------------------------------------------------- generate

struct GenerateOptions {
  std::string family;
  std::optional<int> index;  // case or class number
  std::optional<int> m;
  std::optional<std::int64_t> s, l, e, k, k1, k2, k3;
  bool check = false;
  CommonOptions common;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw ParseError(std::string("missing ") + flag);
  return *v;
}

std::vector<FamilyInstance> build_instances(const GenerateOptions& o) {
  if (!o.m) throw ParseError("missing --m");
  const int m = *o.m;
  if (2 * m > size_cap(o.common)) {
    throw UnsupportedFieldError("unsupported n=" + std::to_string(2 * m) + ": exceeds the size cap");
  }
  const auto& f = o.family;
  if (f == "thm1") {
    return families::gen_theorem1(exponents::make_niho(m, need(o.s, "--s"), need(o.l, "--l"), need(o.e, "--e")));
  }
  if (f == "prop1") {
    if (!o.index) throw ParseError("prop1 needs a case number 1..6");
    return families::gen_prop1(*o.index, m, need(o.k1, "--k1"), o.k2.value_or(0), o.k3.value_or(0));
  }
  if (f == "prop3") return families::gen_prop3(m, need(o.s, "--s"));
  if (f == "cor2") return families::gen_cpp_cor2(m, need(o.s, "--s"));
  if (f == "cpp-class") {
    if (!o.index) throw ParseError("cpp-class needs a class number 1..6");
    return families::gen_cpp_class(*o.index, m, o.k.value_or(0));
  }
  if (f == "conj") {
    auto [fp, gp] = families::conjecture_trinomials(m, size_cap(o.common));
    std::vector<FamilyInstance> out;
    out.push_back({families::FamilyId::kConjF, m, {}, {}, {}, {}, {}, {}, {}, {}, std::move(fp), families::kClaimPP});
    out.push_back({families::FamilyId::kConjG, m, {}, {}, {}, {}, {}, {}, {}, {}, std::move(gp), families::kClaimPP});
    return out;
  }
  throw ParseError("unknown family '" + f + "'");
}

void write_unchecked(std::ostream& out, const FamilyInstance& inst, const std::string& format) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  const std::string u = inst.u ? gf2n::to_hex(*inst.u) : std::string();
  if (format == "csv") {
    const bool monomial = inst.claims & families::kClaimCPP;
    out << families::family_name(inst.family) << ',' << inst.m << ',' << opt(inst.s) << ',' << opt(inst.l) << ','
        << opt(inst.e) << ',' << opt(inst.k1) << ',' << opt(inst.k2) << ',' << opt(inst.k3) << ',' << u << ','
        << (inst.params ? std::to_string(inst.params->d1) : "") << ','
        << (inst.params && !monomial ? std::to_string(inst.params->d2) : "") << ',' << inst.claim_name() << ",,\n";
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = std::string(families::family_name(inst.family));
    j["m"] = inst.m;
    j["u"] = inst.u ? nlohmann::ordered_json(u) : nlohmann::ordered_json(nullptr);
    j["poly"] = inst.poly.to_string();
    j["claim"] = inst.claim_name();
    out << j.dump() << '\n';
  } else {
    out << families::family_name(inst.family) << " m=" << inst.m << " poly=" << inst.poly.to_string() << " claim="
        << inst.claim_name() << '\n';
  }
}

void write_checked_text(std::ostream& out, const families::ScanRow& row) {
  const auto& inst = row.instance;
  out << families::family_name(inst.family) << " m=" << inst.m << " poly=" << inst.poly.to_string()
      << " claim=" << inst.claim_name() << " verdict=" << (row.ok() ? "verified" : "FAILED");
  if (row.report.witness) out << " witness=" << witness_hex(*row.report.witness);
  out << '\n';
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  auto instances = build_instances(o);
  const auto& fmt = o.common.format;
  if (fmt == "csv") families::write_csv_header(out);
  if (!o.check) {
    for (const auto& inst : instances) write_unchecked(out, inst, fmt);
    return kOk;
  }
  const auto result = families::verify_instances(std::move(instances), true, o.common.threads);
  for (const auto& row : result.rows) {
    if (fmt == "csv") families::write_csv_row(out, row, o.common.timing);
    else if (fmt == "json") families::write_jsonl_row(out, row, o.common.timing);
    else write_checked_text(out, row);
  }
  if (fmt == "text") out << "instances=" << result.rows.size() << " failures=" << result.failures << '\n';
  return result.failures == 0 ? kOk : kClaimFailed;
}

// ------------------------------------------------------------------ scan

struct ScanOptions {
  std::string m;
  std::string families = "all";
  std::uint64_t budget = 200;
  std::uint64_t seed = 1;
  bool no_proof = false;
  CommonOptions common;
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  families::ScanConfig cfg;
  cfg.m_values = parse_int_list(o.m, "m");
  for (const int m : cfg.m_values) {
    if (m < 2) throw ParseError("m must be at least 2");
  }
  cfg.families = families::parse_scan_families(o.families);
  cfg.budget = o.budget;
  cfg.seed = o.seed;
  cfg.proof_path = !o.no_proof;
  cfg.max_n = size_cap(o.common);
  cfg.threads = o.common.threads;

  const auto result = families::scan_families(cfg);
  if (o.common.format == "csv") families::write_csv_header(out);
  for (const auto& row : result.rows) {
    if (o.common.format == "csv") families::write_csv_row(out, row, o.common.timing);
    else families::write_jsonl_row(out, row, o.common.timing);
  }
  err << "instances=" << result.rows.size() << " unique=" << result.unique_polynomials
      << " failures=" << result.failures << '\n';
  return result.failures == 0 ? kOk : kClaimFailed;
}

// ------------------------------------------------------------ conjecture

struct ConjectureOptions {
  std::string m;
  CommonOptions common;
};

int cmd_conjecture(const ConjectureOptions& o, std::ostream& out) {
  const auto ms = parse_int_list(o.m, "m");
  for (const int m : ms) {
    if (m < 3 || m % 2 == 0) throw ParseError("m=" + std::to_string(m) + " rejected: m must be odd and at least 3");
  }
  const int cap = size_cap(o.common);
  for (const int m : ms) {
    if (2 * m > cap) {
      throw SizeCapError("m=" + std::to_string(m) + " needs n=" + std::to_string(2 * m) + " above the size cap n<=" +
                         std::to_string(cap) + "; raise it with --max-n or " + kMaxNEnv);
    }
  }

  bool all_pp = true;
  if (o.common.format == "text") out << "m   n   poly  exponents                 verdict\n";
  for (const int m : ms) {
    const auto [f, g] = families::conjecture_trinomials(m, cap);
    for (const auto& [name, poly] : {std::pair<std::string, const SparsePoly&>{"f", f}, {"g", g}}) {
      const auto report = spectra::is_permutation_brute(poly);
      all_pp = all_pp && report.verdict;
      std::string exps;
      for (const auto& t : poly.terms()) exps += (exps.empty() ? "" : ",") + std::to_string(t.exp);
      if (o.common.format == "json") {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["poly"] = name;
        j["exponents"] = exps;
        j["report"] = nlohmann::ordered_json::parse(report_json(report, o.common.timing));
        out << j.dump() << '\n';
      } else {
        out << std::left << std::setw(4) << m << std::setw(4) << 2 * m << std::setw(6) << name << std::setw(26)
            << exps << verdict_word(report.verdict);
        if (report.witness) out << " witness=" << witness_hex(*report.witness);
        out << '\n';
      }
    }
  }
  return all_pp ? kOk : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify Niho-type binomial permutation polynomials over F_{2^n}"};
  app.name(args.empty() ? "nihoperm" : args.front());
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a sparse polynomial permutes F_{2^n}");
  verify_cmd->add_option("--n", verify.n, "Extension degree (even)")->required();
  verify_cmd->add_option("--poly", verify.poly, "Terms as coeffhex:exp[,coeffhex:exp...]")->required();
  verify_cmd->add_option("--engine", verify.engine, "default (brute + delta), all, brute, charsum, delta")
      ->check(CLI::IsMember({"default", "all", "brute", "charsum", "delta"}));
  verify_cmd->add_flag("--cpp", verify.cpp, "Check the complete-permutation claim (f and f+x)");
  verify_cmd->add_flag("--direct", verify.direct, "Delta criterion by direct summation even for Niho exponents");
  verify_cmd->add_flag("--allow-large", verify.allow_large, "Lift the n<=12 cap of the quadratic engines");
  add_common(verify_cmd, verify.common, "json", {"json", "text"});

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Emit the instances of a family");
  gen_cmd->add_option("family", gen.family, "thm1, prop1, prop3, cor2, cpp-class, conj")
      ->required()
      ->check(CLI::IsMember({"thm1", "prop1", "prop3", "cor2", "cpp-class", "conj"}));
  gen_cmd->add_option("index", gen.index, "Case (prop1) or class (cpp-class) number");
  gen_cmd->add_option("--m", gen.m, "Half the extension degree");
  gen_cmd->add_option("--s", gen.s);
  gen_cmd->add_option("--l", gen.l);
  gen_cmd->add_option("--e", gen.e);
  gen_cmd->add_option("--k", gen.k, "k for cpp-class 1 and 2");
  gen_cmd->add_option("--k1", gen.k1);
  gen_cmd->add_option("--k2", gen.k2);
  gen_cmd->add_option("--k3", gen.k3);
  gen_cmd->add_flag("--check", gen.check, "Verify every instance by brute force");
  add_common(gen_cmd, gen.common, "json", {"json", "csv", "text"});

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Generate and verify every family over a range of m");
  scan_cmd->add_option("--m", scan.m, "Comma-separated m values")->required();
  scan_cmd->add_option("--families", scan.families, "all, or a comma list of thm1, prop1, prop3, cpp, conj");
  scan_cmd->add_option("--budget", scan.budget, "Sampled tuples per family beyond m=3");
  scan_cmd->add_option("--seed", scan.seed, "Seed for sampled scans");
  scan_cmd->add_flag("--no-proof", scan.no_proof, "Skip the unique-solution proof-path check");
  add_common(scan_cmd, scan.common, "csv", {"csv", "jsonl"});

  ConjectureOptions conj;
  auto* conj_cmd = app.add_subcommand("conjecture", "Brute-force the two conjectured trinomials");
  conj_cmd->add_option("--m", conj.m, "Comma-separated odd m values")->required();
  add_common(conj_cmd, conj.common, "text", {"text", "json"});

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("nihoperm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (gen_cmd->parsed()) return cmd_generate(gen, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, out, err);
    if (conj_cmd->parsed()) return cmd_conjecture(conj, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nihoperm::cli
