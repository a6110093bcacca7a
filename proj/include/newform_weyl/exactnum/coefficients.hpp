#pragma once

#include <cstdint>
#include <string_view>

#include "newform_weyl/exactnum/rational.hpp"
#include "newform_weyl/exactnum/symbolic.hpp"

namespace nw {

enum class CoefficientKind { Full, Newform };

std::string_view to_string(CoefficientKind kind);

/// Main-term coefficients of a spectral counting function at one level:
///   c1*lambda + c2*sqrt(lambda)*log(sqrt(lambda)) + c3*sqrt(lambda).
struct CoefficientTriple {
  std::uint64_t level = 1;
  CoefficientKind kind = CoefficientKind::Full;
  Rational c1;
  SymbolicCoefficient c2;
  SymbolicCoefficient c3;

  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

}  // namespace nw
