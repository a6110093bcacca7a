#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Property suites cross-checking every closed form against its divisor-sum
// oracle. Each suite is a list of named checks; a check records how many
// cases it ran and the first few counterexamples.

namespace nw::verify {

struct Counterexample {
  std::string where;  // e.g. "M=12" or "p=3,m=4"
  std::string quantity;
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Counterexample> failures;  // first kMaxRecordedFailures only

  bool passed() const { return failure_count == 0; }
  void record(bool ok, Counterexample example);
};

inline constexpr std::size_t kMaxRecordedFailures = 10;

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

enum class Suite { Group, ClosedForms, Classifier, DirichletSeries };

std::string_view to_string(Suite suite);
/// "group", "closed-forms", "classifier", "dirichlet-series".
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  /// Upper level for range scans. Scans whose stated range is smaller
  /// (transfer identity and pair checks at 1e4, characters at 200) use
  /// min(max_level, that range).
  std::uint64_t max_level = 100'000;
  std::size_t random_instances = 1000;
  std::uint64_t seed = 0x5eed'cafe;
};

SuiteReport run_suite(Suite suite, const VerifyOptions& options);

SuiteReport run_group_suite(const VerifyOptions& options);
SuiteReport run_closed_forms_suite(const VerifyOptions& options);
SuiteReport run_classifier_suite(const VerifyOptions& options);
SuiteReport run_dirichlet_series_suite(const VerifyOptions& options);

/// The alternative table entry (p+1)^2 p^{n-1} for -(pi/2)c2^new(p^{2n}),
/// n > 1, checked against the convolution. Returns the note text.
std::string c2_table_note();

}  // namespace nw::verify
