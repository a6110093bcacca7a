#include "newform_weyl/arith/sieve.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "newform_weyl/error.hpp"

namespace nw::arith {

FactorizationConfig FactorizationConfig::from_environment() {
  FactorizationConfig config;
  if (const char* raw = std::getenv("NEWFORM_WEYL_SIEVE_BOUND")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc() && ptr == end && value >= 2) config.sieve_bound = value;
  }
  return config;
}

Sieve::Sieve(std::uint64_t bound) : bound_(bound < 2 ? 2 : bound), smallest_factor_(bound_ + 1, 0) {
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (smallest_factor_[i] != 0) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    smallest_factor_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= bound_; j += i) {
      if (smallest_factor_[j] == 0) smallest_factor_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

PrimeFactorization Sieve::factorize(std::uint64_t n) const {
  if (n == 0) throw DomainError("cannot factorize 0");
  std::vector<PrimePower> out;
  const auto push = [&out](std::uint64_t p) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  };
  if (n > bound_) {
    for (std::uint64_t p : primes_) {
      if (p * p > n || n <= bound_) break;
      while (n % p == 0) {
        push(p);
        n /= p;
      }
    }
    if (n > bound_) {
      // Sieve too small for sqrt(n): finish with plain trial division.
      std::uint64_t d = primes_.empty() ? 2 : primes_.back() + 1;
      for (; d * d <= n; ++d) {
        while (n % d == 0) {
          push(d);
          n /= d;
        }
      }
      if (n > 1) {
        push(n);
        n = 1;
      }
    }
  }
  while (n > 1) {
    const std::uint64_t p = smallest_factor_[n];
    push(p);
    n /= p;
  }
  return PrimeFactorization(PrimeFactorization::Unchecked{}, std::move(out));
}

const FactorizationConfig& default_config() {
  static const FactorizationConfig config = FactorizationConfig::from_environment();
  return config;
}

const Sieve& default_sieve() {
  static const Sieve sieve(default_config().sieve_bound);
  return sieve;
}

PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  if (n > default_config().factor_bound) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the factorization bound " +
                      std::to_string(default_config().factor_bound));
  }
  return default_sieve().factorize(n);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= default_sieve().bound()) {
    for (std::uint32_t p : default_sieve().primes()) {
      if (p > bound) break;
      out.push_back(p);
    }
    return out;
  }
  const Sieve local(bound);
  out.assign(local.primes().begin(), local.primes().end());
  return out;
}

}  // namespace nw::arith
