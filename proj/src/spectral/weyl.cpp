#include "newform_weyl/spectral/weyl.hpp"

#include <cmath>

#include "newform_weyl/error.hpp"
#include "newform_weyl/exactnum/numeric.hpp"

namespace nw::spectral {

WeylTerms weyl_main_terms(const CoefficientTriple& coeffs, double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) throw DomainError("lambda must be a finite number > 1");
  constexpr unsigned kDigits = 30;
  const double root = std::sqrt(lambda);
  const double log_root = std::log(root);

  WeylTerms out;
  out.lambda = lambda;
  out.linear = static_cast<double>(numeric_eval(coeffs.c1, kDigits)) * lambda;
  out.log_term = static_cast<double>(numeric_eval(coeffs.c2, kDigits)) * root * log_root;
  out.sqrt_term = static_cast<double>(numeric_eval(coeffs.c3, kDigits)) * root;
  out.total = out.linear + out.log_term + out.sqrt_term;
  out.error_scale = root / log_root;
  return out;
}

}  // namespace nw::spectral
