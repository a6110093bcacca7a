#pragma once

#include <cstdint>

#include "newform_weyl/arith/factorization.hpp"
#include "newform_weyl/exactnum/coefficients.hpp"
#include "newform_weyl/exactnum/symbolic.hpp"

namespace nw::spectral {

/// (1/pi)(2 - log 2 + log pi): the per-cusp part of c3.
SymbolicCoefficient cusp_constant();

/// Coefficients of N_{Gamma_0(M)}:
///   c1 = index/12, c2 = -(2/pi) k_M, c3 = (1/pi)[(2 - log 2 + log pi) k_M - log A(M)].
CoefficientTriple full_coeffs(std::uint64_t M);

/// Coefficients of the newform counting function from the closed forms:
///   c1 = v(M)/12, c2 = -(2/pi) U(M), c3 = (1/pi)[(2 - log 2 + log pi) U(M) - L(M)].
CoefficientTriple newform_coeffs(std::uint64_t M);

/// c_i^new = c_i * sigma_0^{-1} evaluated literally over the divisors of M.
CoefficientTriple newform_coeffs_by_convolution(std::uint64_t M);

/// -(pi/2) c2 of either kind, as a Rational.
Rational scaled_c2(const CoefficientTriple& coeffs);

}  // namespace nw::spectral
