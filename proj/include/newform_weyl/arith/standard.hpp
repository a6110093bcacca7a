#pragma once

#include <cstdint>
#include <string_view>

#include "newform_weyl/arith/arith_fn.hpp"
#include "newform_weyl/arith/factorization.hpp"
#include "newform_weyl/exactnum/log_combination.hpp"

namespace nw::arith {

enum class StandardFn {
  IdentityI,            // I(n) = [n = 1]
  UnitU,                // u(n) = 1
  Mobius,               // mu
  Totient,              // Euler phi
  Sigma,                // sigma_alpha(n) = sum_{d|n} d^alpha
  Sigma0Inverse,        // sigma_0^{-1}, kernel (1, -2, 1, 0, ...)
  MangoldtLogForm,      // Lambda; log-valued, see mangoldt()
  DedekindPsi,          // psi(n) = n prod_{p|n} (1 + 1/p)
  PrimitiveCharCountD,  // D = phi * mu
};

/// The standard function with its prime-power kernel. `alpha` is used only
/// by Sigma (|alpha| <= 64). Instances are shared, so repeated requests reuse
/// one memoized inverse.
///
/// Mangoldt's function is log-valued and not multiplicative; asking for it
/// here throws DomainError. Use mangoldt() / mangoldt_log() instead.
ArithFn standard_fn(StandardFn which, int alpha = 0);

/// Lookup by name: "identity_I", "unit_u", "mobius", "totient", "sigma",
/// "sigma0_inverse", "mangoldt_log_form", "dedekind_psi",
/// "primitive_char_count_D". Throws DomainError for unknown names.
ArithFn standard_fn(std::string_view name, int alpha = 0);

/// Lambda(n) kept symbolic: n = p^m (m >= 1) gives {true, p}, else {false, 0}.
struct MangoldtValue {
  bool is_prime_power;
  std::uint64_t prime;

  friend bool operator==(const MangoldtValue&, const MangoldtValue&) = default;
};

MangoldtValue mangoldt(std::uint64_t n);
MangoldtValue mangoldt(const PrimeFactorization& n);
/// Lambda(n) as an exact log combination (log p or 0).
LogCombination mangoldt_log(std::uint64_t n);

/// log n = sum e_p log p.
LogCombination log_of(const PrimeFactorization& n);
LogCombination log_of(std::uint64_t n);

}  // namespace nw::arith
