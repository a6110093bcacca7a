#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newform_weyl/exactnum/rational.hpp"

namespace nw::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Canonical n = prod p^e with primes strictly increasing and every e >= 1.
/// The empty factorization is n = 1.
///
/// Values can exceed 64 bits (p^12 for p up to 50 is used in the prime-power
/// checks), so divisor arithmetic is done on exponent vectors.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;

  /// Validates the canonical-form invariants; throws DomainError on failure.
  explicit PrimeFactorization(std::vector<PrimePower> factors);

  static PrimeFactorization prime_power(std::uint64_t p, unsigned exponent);

  std::span<const PrimePower> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t distinct_primes() const { return factors_.size(); }
  unsigned exponent_of(std::uint64_t p) const;
  bool is_squarefree() const;

  Integer value() const;
  /// nullopt when the value does not fit in 64 bits.
  std::optional<std::uint64_t> value_u64() const;

  /// Number of divisors.
  std::uint64_t divisor_count() const;
  /// All divisors, in mixed-radix order of the exponent vectors (1 first,
  /// n last).
  std::vector<PrimeFactorization> divisors() const;

  bool divides(const PrimeFactorization& n) const;
  /// n / d; throws DomainError when d does not divide n.
  PrimeFactorization quotient(const PrimeFactorization& d) const;

  friend PrimeFactorization operator*(const PrimeFactorization& a, const PrimeFactorization& b);
  friend PrimeFactorization gcd(const PrimeFactorization& a, const PrimeFactorization& b);
  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  friend class Sieve;
  struct Unchecked {};
  PrimeFactorization(Unchecked, std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  std::vector<PrimePower> factors_;
};

struct PrimeFactorizationHash {
  std::size_t operator()(const PrimeFactorization& n) const noexcept;
};

}  // namespace nw::arith
