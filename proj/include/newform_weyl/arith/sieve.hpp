#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "newform_weyl/arith/factorization.hpp"

namespace nw::arith {

struct FactorizationConfig {
  std::uint64_t sieve_bound = 1'000'000;
  std::uint64_t factor_bound = 100'000'000;

  /// Defaults, with the sieve bound taken from NEWFORM_WEYL_SIEVE_BOUND when
  /// that variable holds a positive integer.
  static FactorizationConfig from_environment();
};

/// Smallest-prime-factor table on [0, bound]. Immutable after construction.
class Sieve {
 public:
  explicit Sieve(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  /// Sieve lookup below the bound, trial division above it.
  PrimeFactorization factorize(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> smallest_factor_;
  std::vector<std::uint32_t> primes_;
};

/// Process-wide sieve, built on first use from FactorizationConfig::from_environment().
const Sieve& default_sieve();
const FactorizationConfig& default_config();

/// Throws DomainError for n = 0 or n above the configured factor bound.
PrimeFactorization factorize(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace nw::arith
