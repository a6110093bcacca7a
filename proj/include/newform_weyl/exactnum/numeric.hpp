#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <string>

#include "newform_weyl/exactnum/rational.hpp"
#include "newform_weyl/exactnum/symbolic.hpp"

namespace nw {

/// Working type for display-only numerics; 64 decimal digits so that every
/// supported precision (<= 50) is met with margin.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;

inline constexpr unsigned kMaxNumericPrecision = 50;

/// Approximate value of an exact coefficient. Display only: results never
/// re-enter exact computations. Throws DomainError unless 1 <= precision <= 50.
HighPrecision numeric_eval(const SymbolicCoefficient& x, unsigned precision);
HighPrecision numeric_eval(const Rational& q, unsigned precision);

/// `significant_digits` significant digits, general notation.
std::string format_decimal(const HighPrecision& value, unsigned significant_digits);

}  // namespace nw
