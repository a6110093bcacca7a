#include "newform_weyl/exactnum/numeric.hpp"

#include <sstream>

#include "newform_weyl/error.hpp"

namespace nw {

namespace {

void check_precision(unsigned precision) {
  if (precision < 1 || precision > kMaxNumericPrecision) {
    throw DomainError("numeric precision must be between 1 and " + std::to_string(kMaxNumericPrecision));
  }
}

HighPrecision to_high(const Rational& q) {
  return HighPrecision(q.numerator().get_str()) / HighPrecision(q.denominator().get_str());
}

}  // namespace

HighPrecision numeric_eval(const Rational& q, unsigned precision) {
  check_precision(precision);
  return to_high(q);
}

HighPrecision numeric_eval(const SymbolicCoefficient& x, unsigned precision) {
  check_precision(precision);
  if (x.is_zero()) return HighPrecision(0);
  using boost::multiprecision::log;
  const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
  HighPrecision sum = to_high(x.constant());
  if (!x.log_pi().is_zero()) sum += to_high(x.log_pi()) * log(pi);
  for (const auto& [p, c] : x.log_primes().terms()) sum += to_high(c) * log(HighPrecision(p));
  return x.over_pi() ? sum / pi : sum;
}

std::string format_decimal(const HighPrecision& value, unsigned significant_digits) {
  if (value.is_zero()) return "0";
  std::ostringstream os;
  os.precision(significant_digits);
  os << value;
  return os.str();
}

}  // namespace nw
