#pragma once

#include "newform_weyl/exactnum/coefficients.hpp"

namespace nw::spectral {

/// Numeric main terms of  c1*lambda + c2*sqrt(lambda)*log(sqrt(lambda)) + c3*sqrt(lambda).
struct WeylTerms {
  double lambda = 0;
  double linear = 0;       // c1 * lambda
  double log_term = 0;     // c2 * sqrt(lambda) * log(sqrt(lambda))
  double sqrt_term = 0;    // c3 * sqrt(lambda)
  double total = 0;
  double error_scale = 0;  // sqrt(lambda) / log(sqrt(lambda)), reported only
};

/// Throws DomainError for lambda <= 1.
WeylTerms weyl_main_terms(const CoefficientTriple& coeffs, double lambda);

}  // namespace nw::spectral
