#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nihoperm/families.hpp"
#include "nihoperm/spectra.hpp"

namespace nihoperm::families {

enum ScanFamily : unsigned {
  kScanTheorem1 = 1u << 0,
  kScanProp1 = 1u << 1,
  kScanProp3 = 1u << 2,  // x^{d1} + u x and the matching u^{-1} x^{d1} monomials
  kScanCppClasses = 1u << 3,
  kScanConjecture = 1u << 4,
  kScanAll = 0x1fu,
};

/// "all" or a comma list of thm1, prop1, prop3, cpp, conj.
unsigned parse_scan_families(std::string_view text);

struct ScanConfig {
  std::vector<int> m_values;
  unsigned families = kScanAll;
  /// Number of condition-passing tuples sampled for THM1 and
  /// PROP3 when the range is not scanned exhaustively.
  std::uint64_t budget = 200;
  std::uint64_t seed = 1;
  /// Exhaustive THM1 range for (s, l, e) at m = 3.
  std::int64_t exhaustive_max = 9;
  /// Exhaustive k range for the PROP1 cases.
  std::int64_t prop1_max_k = 6;
  /// Also run unique_solution_check on binomial instances.
  bool proof_path = true;
  int max_n = gf2n::FieldCtx::kDefaultMaxDegree;
  unsigned threads = 0;
};

struct ScanRow {
  FamilyInstance instance;
  spectra::VerificationReport report;
  /// Set for binomial instances when proof_path is on.
  std::optional<bool> proof_ok;
  /// Index of the first row carrying the same polynomial within the family.
  std::size_t duplicate_of;

  bool ok() const noexcept { return report.verdict && proof_ok.value_or(true); }
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t unique_polynomials = 0;
  std::size_t failures = 0;
};

/// Verifies each distinct polynomial once (brute force, or is_cpp for CPP
/// claims) and, when proof_path is set, runs unique_solution_check on
/// binomial instances. Rows keep the input order.
ScanResult verify_instances(std::vector<FamilyInstance> instances, bool proof_path, unsigned threads = 0);

/// Generates every in-range instance, verifies each distinct polynomial
/// once by brute force (is_cpp for CPP claims) and returns rows in
/// canonical parameter order.
ScanResult scan_families(const ScanConfig& cfg);

void write_csv_header(std::ostream& out);
/// elapsed_ms is written as 0 unless with_timing.
void write_csv_row(std::ostream& out, const ScanRow& row, bool with_timing);
void write_jsonl_row(std::ostream& out, const ScanRow& row, bool with_timing);

}  // namespace nihoperm::families
