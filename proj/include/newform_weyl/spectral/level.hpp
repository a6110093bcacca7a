#pragma once

#include <cstdint>

#include "newform_weyl/arith/factorization.hpp"

namespace nw::spectral {

/// Level M of Gamma_0(M) with its unique decomposition M = t^2 * n, n squarefree.
struct Level {
  std::uint64_t value = 1;
  arith::PrimeFactorization factorization;
  std::uint64_t square_root_part = 1;  // t
  std::uint64_t squarefree_part = 1;   // n

  /// Throws DomainError for M = 0 or M above the factorization bound.
  static Level of(std::uint64_t M);
};

}  // namespace nw::spectral
