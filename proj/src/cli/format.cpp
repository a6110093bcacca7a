#include "newform_weyl/cli/format.hpp"

#include <iomanip>
#include <sstream>

#include "newform_weyl/error.hpp"
#include "newform_weyl/exactnum/numeric.hpp"
#include "newform_weyl/spectral/coefficients.hpp"
#include "newform_weyl/spectral/level.hpp"

namespace nw::cli {

namespace {

template <class T>
std::string approx(const T& exact, unsigned precision) {
  return format_decimal(numeric_eval(exact, precision), precision);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed_double(double x, unsigned precision) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

}  // namespace

OutputRecord make_record(std::uint64_t M, CoefficientKind kind, unsigned precision) {
  if (precision < 1 || precision > kMaxNumericPrecision) {
    throw DomainError("precision must be between 1 and " + std::to_string(kMaxNumericPrecision));
  }
  OutputRecord record;
  record.precision = precision;
  if (kind == CoefficientKind::Full) {
    record.coeffs = spectral::full_coeffs(M);
  } else {
    record.coeffs = spectral::newform_coeffs(M);
    record.classification = spectral::classify_cocompact(M, spectral::ClassifyMethod::Theorem);
  }
  return record;
}

ordered_json to_json(const OutputRecord& record) {
  const auto& c = record.coeffs;
  ordered_json j;
  j["level"] = c.level;
  j["kind"] = std::string(to_string(c.kind));
  j["c1"] = c.c1.str();
  j["c2"] = nw::to_json(c.c2);
  j["c3"] = nw::to_json(c.c3);
  j["approx"] = {{"precision", record.precision},
                 {"c1", approx(c.c1, record.precision)},
                 {"c2", approx(c.c2, record.precision)},
                 {"c3", approx(c.c3, record.precision)}};
  if (record.classification) {
    const auto& k = *record.classification;
    j["classification"] = {{"cocompact", k.verdict},
                           {"reason", std::string(spectral::to_string(k.reason))},
                           {"c2_is_zero", k.c2_is_zero},
                           {"L_is_zero", k.L_is_zero}};
  }
  return j;
}

std::string to_text(const OutputRecord& record) {
  const auto& c = record.coeffs;
  std::ostringstream os;
  os << "level " << c.level << " (" << to_string(c.kind) << ")\n";
  os << "  c1 = " << c.c1.str() << "  ~ " << approx(c.c1, record.precision) << "\n";
  os << "  c2 = " << c.c2.str() << "  ~ " << approx(c.c2, record.precision) << "\n";
  os << "  c3 = " << c.c3.str() << "  ~ " << approx(c.c3, record.precision) << "\n";
  if (record.classification) {
    const auto& k = *record.classification;
    os << "  cocompact type: " << yes_no(k.verdict) << " (" << spectral::to_string(k.reason) << ")\n";
  }
  return os.str();
}

std::string csv_header() { return "level,kind,c1,c2,c3,c1_approx,c2_approx,c3_approx,cocompact,reason"; }

std::string to_csv_row(const OutputRecord& record) {
  const auto& c = record.coeffs;
  std::ostringstream os;
  os << c.level << ',' << to_string(c.kind) << ',' << csv_field(c.c1.str()) << ',' << csv_field(c.c2.str()) << ','
     << csv_field(c.c3.str()) << ',' << approx(c.c1, record.precision) << ',' << approx(c.c2, record.precision) << ','
     << approx(c.c3, record.precision) << ',';
  if (record.classification) {
    os << (record.classification->verdict ? "true" : "false") << ','
       << spectral::to_string(record.classification->reason);
  } else {
    os << ',';
  }
  return os.str();
}

std::vector<ScanRow> scan_levels(std::uint64_t max_level, bool only_cocompact, spectral::ClassifyMethod method) {
  if (max_level > kMaxScanLevel) {
    throw DomainError("scan: --max must be at most " + std::to_string(kMaxScanLevel));
  }
  std::vector<ScanRow> rows;
  for (std::uint64_t M = 1; M <= max_level; ++M) {
    const auto classification = spectral::classify_cocompact(M, method);
    if (only_cocompact && !classification.verdict) continue;
    const auto level = spectral::Level::of(M);
    rows.push_back({M, level.square_root_part, level.squarefree_part, classification});
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "level,t,n,cocompact,reason,c2_is_zero,L_is_zero\n";
  for (const auto& r : rows) {
    const auto& k = r.classification;
    os << r.level << ',' << r.t << ',' << r.n << ',' << (k.verdict ? "true" : "false") << ','
       << spectral::to_string(k.reason) << ',' << (k.c2_is_zero ? "true" : "false") << ','
       << (k.L_is_zero ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string scan_text(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(9) << "level" << std::setw(7) << "t" << std::setw(9) << "n" << std::setw(11)
     << "cocompact" << std::setw(26) << "reason" << std::setw(9) << "c2=0"
     << "L=0\n";
  for (const auto& r : rows) {
    const auto& k = r.classification;
    os << std::left << std::setw(9) << r.level << std::setw(7) << r.t << std::setw(9) << r.n << std::setw(11)
       << yes_no(k.verdict) << std::setw(26) << spectral::to_string(k.reason) << std::setw(9) << yes_no(k.c2_is_zero)
       << yes_no(k.L_is_zero) << '\n';
  }
  return os.str();
}

ordered_json scan_json(const std::vector<ScanRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    const auto& k = r.classification;
    out.push_back({{"level", r.level},
                   {"t", r.t},
                   {"n", r.n},
                   {"cocompact", k.verdict},
                   {"reason", std::string(spectral::to_string(k.reason))},
                   {"c2_is_zero", k.c2_is_zero},
                   {"L_is_zero", k.L_is_zero}});
  }
  return out;
}

std::string weyl_text(const CoefficientTriple& coeffs, const spectral::WeylTerms& terms, unsigned precision) {
  std::ostringstream os;
  os << "level " << coeffs.level << " (" << to_string(coeffs.kind)
     << "), lambda = " << fixed_double(terms.lambda, precision) << "\n";
  os << "  c1*lambda                          = " << fixed_double(terms.linear, precision) << "\n";
  os << "  c2*sqrt(lambda)*log(sqrt(lambda))  = " << fixed_double(terms.log_term, precision) << "\n";
  os << "  c3*sqrt(lambda)                    = " << fixed_double(terms.sqrt_term, precision) << "\n";
  os << "  main terms total                   = " << fixed_double(terms.total, precision) << "\n";
  os << "  error scale sqrt(l)/log(sqrt(l))   = " << fixed_double(terms.error_scale, precision) << "\n";
  if (coeffs.c2.is_zero() && coeffs.c3.is_zero()) os << "  only the linear term is present\n";
  return os.str();
}

std::string verify_text(const verify::SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "\n";
  for (const auto& check : report.checks) {
    os << "  " << (check.passed() ? "PASS " : "FAIL ") << check.name << " (" << check.cases << " cases";
    if (!check.passed()) os << ", " << check.failure_count << " failures";
    os << ")\n";
    for (const auto& f : check.failures) {
      os << "    counterexample " << f.where << ": " << f.quantity << " expected " << f.expected << " got " << f.got
         << "\n";
    }
  }
  for (const auto& note : report.notes) os << "  note: " << note << "\n";
  os << (report.passed() ? "PASS " : "FAIL ") << report.suite << "\n";
  return os.str();
}

}  // namespace nw::cli
