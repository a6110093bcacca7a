#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newform_weyl/exactnum/coefficients.hpp"
#include "newform_weyl/exactnum/serialization.hpp"
#include "newform_weyl/spectral/classify.hpp"
#include "newform_weyl/spectral/weyl.hpp"
#include "newform_weyl/verify/verification.hpp"

namespace nw::cli {

inline constexpr unsigned kDefaultPrecision = 12;

/// One coefficient report. Exact fields are authoritative; the approximations
/// are rounded to `precision` significant digits.
struct OutputRecord {
  CoefficientTriple coeffs;
  unsigned precision = kDefaultPrecision;
  std::optional<spectral::CocompactClassification> classification;  // newform records only
};

OutputRecord make_record(std::uint64_t M, CoefficientKind kind, unsigned precision);

ordered_json to_json(const OutputRecord& record);
std::string to_text(const OutputRecord& record);
std::string csv_header();
std::string to_csv_row(const OutputRecord& record);

struct ScanRow {
  std::uint64_t level;
  std::uint64_t t;
  std::uint64_t n;
  spectral::CocompactClassification classification;
};

inline constexpr std::uint64_t kMaxScanLevel = 1'000'000;

/// Rows for M = 1..max_level in ascending order. Throws DomainError above kMaxScanLevel.
std::vector<ScanRow> scan_levels(std::uint64_t max_level, bool only_cocompact, spectral::ClassifyMethod method);

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_text(const std::vector<ScanRow>& rows);
ordered_json scan_json(const std::vector<ScanRow>& rows);

std::string weyl_text(const CoefficientTriple& coeffs, const spectral::WeylTerms& terms, unsigned precision);

std::string verify_text(const verify::SuiteReport& report);

}  // namespace nw::cli
